//! Tagset, lexical classes, the lexicon TSV format and the pronoun table.

mod pronouns;
mod tags;

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

pub use pronouns::{pronoun_lookup, pronoun_table, PronounEntry, PRONOUN_ROWS};
pub use tags::{join_tags, AttrTag, UnknownTag};

/// Consonant row of a godan verb, named by its dictionary-form kana.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GodanRow {
    U,
    Ku,
    Gu,
    Su,
    Tsu,
    Nu,
    Bu,
    Mu,
    Ru,
}

impl GodanRow {
    pub const ALL: [GodanRow; 9] = [
        GodanRow::U,
        GodanRow::Ku,
        GodanRow::Gu,
        GodanRow::Su,
        GodanRow::Tsu,
        GodanRow::Nu,
        GodanRow::Bu,
        GodanRow::Mu,
        GodanRow::Ru,
    ];

    /// The row's kana in vowel order a, i, u, e, o.
    pub fn columns(self) -> [char; 5] {
        match self {
            GodanRow::U => ['わ', 'い', 'う', 'え', 'お'],
            GodanRow::Ku => ['か', 'き', 'く', 'け', 'こ'],
            GodanRow::Gu => ['が', 'ぎ', 'ぐ', 'げ', 'ご'],
            GodanRow::Su => ['さ', 'し', 'す', 'せ', 'そ'],
            GodanRow::Tsu => ['た', 'ち', 'つ', 'て', 'と'],
            GodanRow::Nu => ['な', 'に', 'ぬ', 'ね', 'の'],
            GodanRow::Bu => ['ば', 'び', 'ぶ', 'べ', 'ぼ'],
            GodanRow::Mu => ['ま', 'み', 'む', 'め', 'も'],
            GodanRow::Ru => ['ら', 'り', 'る', 'れ', 'ろ'],
        }
    }

    /// Dictionary-form final kana.
    pub fn kana(self) -> char {
        self.columns()[2]
    }

    fn code(self) -> &'static str {
        match self {
            GodanRow::U => "u",
            GodanRow::Ku => "k",
            GodanRow::Gu => "g",
            GodanRow::Su => "s",
            GodanRow::Tsu => "t",
            GodanRow::Nu => "n",
            GodanRow::Bu => "b",
            GodanRow::Mu => "m",
            GodanRow::Ru => "r",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConjGroup {
    Ichidan,
    Godan(GodanRow),
    SaIrregular,
    KaIrregular,
    IAdjective,
    NaAdjective,
}

impl ConjGroup {
    pub fn is_verb(self) -> bool {
        !matches!(self, ConjGroup::IAdjective | ConjGroup::NaAdjective)
    }

    /// Serialized name used in the lexicon file.
    pub fn name(self) -> String {
        match self {
            ConjGroup::Ichidan => "ichidan".into(),
            ConjGroup::Godan(row) => format!("godan-{}", row.code()),
            ConjGroup::SaIrregular => "sa-irreg".into(),
            ConjGroup::KaIrregular => "ka-irreg".into(),
            ConjGroup::IAdjective => "i-adj".into(),
            ConjGroup::NaAdjective => "na-adj".into(),
        }
    }

    /// Does `lemma` end the way this group requires?
    pub fn admits(self, lemma: &str) -> bool {
        match self {
            ConjGroup::Ichidan => lemma.chars().count() >= 2 && lemma.ends_with('る'),
            ConjGroup::Godan(row) => lemma.ends_with(row.kana()),
            // ずる covers the voiced variant (信ずる)
            ConjGroup::SaIrregular => lemma.ends_with("する") || lemma.ends_with("ずる"),
            ConjGroup::KaIrregular => lemma.ends_with("くる") || lemma.ends_with("来る"),
            ConjGroup::IAdjective => lemma.chars().count() >= 2 && lemma.ends_with('い'),
            ConjGroup::NaAdjective => !lemma.is_empty(),
        }
    }
}

impl fmt::Display for ConjGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for ConjGroup {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "ichidan" => ConjGroup::Ichidan,
            "sa-irreg" => ConjGroup::SaIrregular,
            "ka-irreg" => ConjGroup::KaIrregular,
            "i-adj" => ConjGroup::IAdjective,
            "na-adj" => ConjGroup::NaAdjective,
            _ => {
                let code = s
                    .strip_prefix("godan-")
                    .ok_or_else(|| format!("unknown group `{s}`"))?;
                let row = GodanRow::ALL
                    .into_iter()
                    .find(|r| r.code() == code)
                    .ok_or_else(|| format!("unknown godan row `{code}`"))?;
                ConjGroup::Godan(row)
            }
        })
    }
}

/// Lexically marked exceptions to the regular conjugation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LexFlags {
    /// Te/ta euphony is って/った regardless of row (行く).
    pub geminate_euphony: bool,
}

impl LexFlags {
    fn parse(field: &str) -> Result<Self, String> {
        let mut flags = LexFlags::default();
        for flag in field.split(',').map(str::trim).filter(|f| !f.is_empty()) {
            match flag {
                "iku" => flags.geminate_euphony = true,
                _ => return Err(format!("unknown flag `{flag}`")),
            }
        }
        Ok(flags)
    }

    fn render(self) -> &'static str {
        if self.geminate_euphony {
            "iku"
        } else {
            ""
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lexeme {
    pub lemma: String,
    pub reading: Option<String>,
    pub group: ConjGroup,
    pub flags: LexFlags,
}

impl Lexeme {
    pub fn new(lemma: &str, group: ConjGroup) -> Self {
        Lexeme {
            lemma: lemma.to_string(),
            reading: None,
            group,
            flags: LexFlags::default(),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum LexiconError {
    #[error("cannot read lexicon")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {message}")]
    Invariant { line: usize, message: String },
}

const HEADER: &str = "lemma\treading\tgroup";

/// Immutable collection of lexemes indexed by lemma.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: Vec<Lexeme>,
    index: BTreeMap<String, Vec<usize>>,
}

impl Lexicon {
    /// Builds a lexicon, rejecting duplicate `(lemma, group)` pairs and
    /// lemmas whose ending contradicts their group.
    pub fn from_entries(entries: Vec<Lexeme>) -> Result<Self, LexiconError> {
        let mut seen = HashSet::new();
        let mut index: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for (i, lex) in entries.iter().enumerate() {
            if !lex.group.admits(&lex.lemma) {
                return Err(LexiconError::Invariant {
                    line: i + 1,
                    message: format!("`{}` cannot be {}", lex.lemma, lex.group),
                });
            }
            if !seen.insert((lex.lemma.clone(), lex.group)) {
                return Err(LexiconError::Invariant {
                    line: i + 1,
                    message: format!("duplicate entry `{}` {}", lex.lemma, lex.group),
                });
            }
            index.entry(lex.lemma.clone()).or_default().push(i);
        }
        Ok(Lexicon { entries, index })
    }

    /// The lexicon bundled with the crate.
    pub fn seed() -> Self {
        Self::parse(include_str!("../../data/seed_lexicon.tsv"))
            .expect("bundled seed lexicon is valid")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, LexiconError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Parses the TSV form: header `lemma\treading\tgroup`, an optional
    /// fourth `flags` column, `#` comments and blank lines ignored.
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut entries = Vec::new();
        let mut lines_of = Vec::new();
        let mut header_seen = false;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            if !header_seen {
                if line != HEADER && line != format!("{HEADER}\tflags") {
                    return Err(LexiconError::Parse {
                        line: line_no,
                        message: format!("expected header `{HEADER}`"),
                    });
                }
                header_seen = true;
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if !(3..=4).contains(&cols.len()) {
                return Err(LexiconError::Parse {
                    line: line_no,
                    message: format!("expected 3 or 4 columns, found {}", cols.len()),
                });
            }
            let lemma = cols[0].trim();
            if lemma.is_empty() {
                return Err(LexiconError::Parse {
                    line: line_no,
                    message: "empty lemma".into(),
                });
            }
            let group: ConjGroup =
                cols[2]
                    .trim()
                    .parse()
                    .map_err(|message| LexiconError::Parse {
                        line: line_no,
                        message,
                    })?;
            let flags = LexFlags::parse(cols.get(3).copied().unwrap_or("")).map_err(|message| {
                LexiconError::Parse {
                    line: line_no,
                    message,
                }
            })?;
            let reading = Some(cols[1].trim())
                .filter(|r| !r.is_empty())
                .map(str::to_string);
            entries.push(Lexeme {
                lemma: lemma.to_string(),
                reading,
                group,
                flags,
            });
            lines_of.push(line_no);
        }
        if !header_seen {
            return Err(LexiconError::Parse {
                line: 1,
                message: format!("missing header `{HEADER}`"),
            });
        }
        // report invariant failures against file lines, not entry positions
        Self::from_entries(entries).map_err(|e| match e {
            LexiconError::Invariant { line, message } => LexiconError::Invariant {
                line: lines_of[line - 1],
                message,
            },
            other => other,
        })
    }

    pub fn to_tsv(&self) -> String {
        let mut out = format!("{HEADER}\tflags\n");
        for lex in &self.entries {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                lex.lemma,
                lex.reading.as_deref().unwrap_or(""),
                lex.group,
                lex.flags.render()
            ));
        }
        out
    }

    pub fn entries(&self) -> &[Lexeme] {
        &self.entries
    }

    pub fn lookup(&self, lemma: &str) -> impl Iterator<Item = &Lexeme> {
        self.index
            .get(lemma)
            .into_iter()
            .flatten()
            .map(|&i| &self.entries[i])
    }

    pub fn contains(&self, lemma: &str) -> bool {
        self.index.contains_key(lemma)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(row: &str) -> Result<Lexicon, LexiconError> {
        Lexicon::parse(&format!("{HEADER}\n{row}\n"))
    }

    #[test]
    fn parses_rows() {
        let lex = one("食べる\t\tichidan").unwrap();
        assert_eq!(lex.entries()[0], Lexeme::new("食べる", ConjGroup::Ichidan));
        let lex = one("書く\tかく\tgodan-k").unwrap();
        assert_eq!(lex.entries()[0].group, ConjGroup::Godan(GodanRow::Ku));
        assert_eq!(lex.entries()[0].reading.as_deref(), Some("かく"));
    }

    #[test]
    fn ending_must_match_group() {
        let err = one("食べる\t\tgodan-k").unwrap_err();
        assert!(matches!(err, LexiconError::Invariant { line: 2, .. }));
        assert!(one("好き\t\ti-adj").is_err());
        assert!(one("信ずる\t\tsa-irreg").is_ok());
        assert!(one("来る\t\tka-irreg").is_ok());
    }

    #[test]
    fn malformed_rows() {
        assert!(matches!(
            one("食べる\tichidan"),
            Err(LexiconError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            one("食べる\t\tnope"),
            Err(LexiconError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            one("行く\t\tgodan-k\tzzz"),
            Err(LexiconError::Parse { .. })
        ));
        assert!(matches!(
            Lexicon::parse("書く\t\tgodan-k\n"),
            Err(LexiconError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn duplicates_rejected() {
        let text = format!("{HEADER}\n書く\t\tgodan-k\n# dup\n書く\tかく\tgodan-k\n");
        assert!(matches!(
            Lexicon::parse(&text),
            Err(LexiconError::Invariant { line: 4, .. })
        ));
    }

    #[test]
    fn flags_column() {
        let lex = one("行く\tいく\tgodan-k\tiku").unwrap();
        assert!(lex.entries()[0].flags.geminate_euphony);
    }

    #[test]
    fn seed_round_trips() {
        let seed = Lexicon::seed();
        let again = Lexicon::parse(&seed.to_tsv()).unwrap();
        assert_eq!(seed, again);
    }

    #[test]
    fn group_names_round_trip() {
        let mut groups = vec![
            ConjGroup::Ichidan,
            ConjGroup::SaIrregular,
            ConjGroup::KaIrregular,
            ConjGroup::IAdjective,
            ConjGroup::NaAdjective,
        ];
        groups.extend(GodanRow::ALL.map(ConjGroup::Godan));
        for g in groups {
            assert_eq!(g.name().parse::<ConjGroup>().unwrap(), g);
        }
    }
}
