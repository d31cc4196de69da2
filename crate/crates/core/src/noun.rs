//! Noun analysis over pre-segmented tagger output such as
//! `N#お/30 医者/38 様/55$`.
//!
//! Noun morphology here is a closed set of affixes, so this is a rule table
//! rather than a transducer, and every input gets exactly one analysis.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::lexicon::{pronoun_lookup, AttrTag, PronounEntry};

/// A line that does not follow `<marker>#<surface>/<id> ...$`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("column {column}: {message}")]
pub struct FormatError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

fn format_error(column: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        column,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub pos_id: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentedInput {
    pub marker: char,
    pub tokens: Vec<Token>,
}

/// Parses `<marker>#tok/id tok/id ...$`.
pub fn parse_line(line: &str) -> Result<SegmentedInput, FormatError> {
    let line = line.trim_end_matches(['\r', '\n']);
    let chars: Vec<char> = line.chars().collect();
    let marker = match chars.first() {
        Some(&c) if c != '#' && !c.is_whitespace() => c,
        _ => return Err(format_error(1, "expected a class marker")),
    };
    if chars.get(1) != Some(&'#') {
        return Err(format_error(2, "expected `#` after the marker"));
    }
    let Some(end) = chars.iter().rposition(|&c| c == '$') else {
        return Err(format_error(chars.len() + 1, "missing `$` terminator"));
    };
    if end + 1 != chars.len() {
        return Err(format_error(end + 2, "trailing text after `$`"));
    }

    let mut tokens = Vec::new();
    let mut column = 3;
    let body: String = chars[2..end].iter().collect();
    for piece in body.split(' ') {
        let width = piece.chars().count();
        if piece.is_empty() {
            return Err(format_error(column, "empty token"));
        }
        let Some((surface, id)) = piece.rsplit_once('/') else {
            return Err(format_error(
                column,
                format!("token `{piece}` lacks `/pos_id`"),
            ));
        };
        if surface.is_empty() {
            return Err(format_error(column, "empty surface"));
        }
        let id_column = column + surface.chars().count() + 1;
        let pos_id = id.parse::<u32>().map_err(|_| {
            format_error(
                id_column,
                format!("pos_id `{id}` is not a non-negative integer"),
            )
        })?;
        tokens.push(Token {
            surface: surface.to_string(),
            pos_id,
        });
        column += width + 1;
    }
    Ok(SegmentedInput { marker, tokens })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    HonorificPrefix,
    NounHead,
    HonorificSuffix,
    CollectiveSuffix,
    Pronoun,
    PossessiveNo,
    Other,
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::HonorificPrefix => "honorific-prefix",
            Role::NounHead => "noun-head",
            Role::HonorificSuffix => "honorific-suffix",
            Role::CollectiveSuffix => "collective-suffix",
            Role::Pronoun => "pronoun",
            Role::PossessiveNo => "possessive-no",
            Role::Other => "other",
        }
    }
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [
            Role::HonorificPrefix,
            Role::NounHead,
            Role::HonorificSuffix,
            Role::CollectiveSuffix,
            Role::Pronoun,
            Role::PossessiveNo,
            Role::Other,
        ]
        .into_iter()
        .find(|r| r.name() == s)
        .ok_or_else(|| format!("unknown role `{s}`"))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum PosMapError {
    #[error("cannot read pos map")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Tagger part-of-speech id to affix role.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosRoleMap(BTreeMap<u32, Role>);

impl Default for PosRoleMap {
    fn default() -> Self {
        PosRoleMap::parse(include_str!("../data/pos_roles.tsv")).expect("built-in pos map is valid")
    }
}

impl PosRoleMap {
    pub fn load(path: impl AsRef<Path>) -> Result<Self, PosMapError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// `pos_id<TAB>role` lines; `#` comments and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self, PosMapError> {
        let mut map = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| PosMapError::Parse {
                line: i + 1,
                message,
            };
            let (id, role) = line
                .split_once('\t')
                .ok_or_else(|| parse_err("expected `pos_id<TAB>role`".into()))?;
            let id: u32 = id
                .trim()
                .parse()
                .map_err(|_| parse_err(format!("bad pos_id `{id}`")))?;
            map.insert(id, role.trim().parse().map_err(parse_err)?);
        }
        Ok(PosRoleMap(map))
    }

    pub fn role(&self, pos_id: u32) -> Option<Role> {
        self.0.get(&pos_id).copied()
    }

    pub fn insert(&mut self, pos_id: u32, role: Role) {
        self.0.insert(pos_id, role);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NounError {
    #[error("pos_id {0} has no usable role")]
    UnknownRole(u32),
    #[error("no head noun among the tokens")]
    EmptyHead,
    #[error("expected an `N` line, got `{0}`")]
    WrongMarker(char),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NounAnalysis {
    /// Content noun, or `prn` for pronouns.
    pub head: String,
    pub attrs: Vec<AttrTag>,
    /// Head surface as written, kept for pronouns whose head is `prn`.
    pub surface: String,
}

impl NounAnalysis {
    pub fn is_pronoun(&self) -> bool {
        self.head == PRONOUN_HEAD
    }
}

impl fmt::Display for NounAnalysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}",
            self.head,
            crate::lexicon::join_tags(&self.attrs)
        )
    }
}

pub const PRONOUN_HEAD: &str = "prn";

/// Honorific suffixes and what they contribute besides `animate`.
fn suffix_formality(surface: &str) -> Option<AttrTag> {
    match surface {
        "ちゃん" | "君" | "くん" => Some(AttrTag::Informal),
        "様" | "さま" => Some(AttrTag::Formal),
        // さん is the unmarked default
        _ => None,
    }
}

pub fn analyze_noun(input: &SegmentedInput, roles: &PosRoleMap) -> Result<NounAnalysis, NounError> {
    if input.marker != 'N' {
        return Err(NounError::WrongMarker(input.marker));
    }
    let mut head = String::new();
    let mut collective = String::new();
    let mut polite = false;
    let mut animate = false;
    let mut formality = None;
    let mut possessive = false;
    for tok in &input.tokens {
        match roles.role(tok.pos_id) {
            Some(Role::NounHead | Role::Pronoun) => head.push_str(&tok.surface),
            Some(Role::HonorificPrefix) => polite = true,
            Some(Role::HonorificSuffix) => {
                animate = true;
                formality = formality.or(suffix_formality(&tok.surface));
            }
            Some(Role::CollectiveSuffix) => collective.push_str(&tok.surface),
            Some(Role::PossessiveNo) => possessive = true,
            Some(Role::Other) | None => return Err(NounError::UnknownRole(tok.pos_id)),
        }
    }
    if head.is_empty() {
        return Err(NounError::EmptyHead);
    }

    let pronoun = resolve_pronoun(&head, &collective);
    let mut attrs = Vec::new();
    let analysis_head = match pronoun {
        Some(p) => {
            attrs.extend(p.attrs());
            if p.formality.is_none() {
                attrs.extend(formality);
            }
            if animate {
                attrs.push(AttrTag::Animate);
            }
            if polite {
                attrs.push(AttrTag::Polite);
            }
            PRONOUN_HEAD.to_string()
        }
        None => {
            attrs.extend(formality);
            if animate {
                attrs.push(AttrTag::Animate);
            }
            if polite {
                attrs.push(AttrTag::Polite);
            }
            if !collective.is_empty() {
                attrs.push(AttrTag::Collective);
            }
            head.clone()
        }
    };
    if possessive {
        attrs.push(AttrTag::Possessive);
    }
    Ok(NounAnalysis {
        head: analysis_head,
        attrs,
        surface: head,
    })
}

/// Pronoun reading of `head` followed by collective suffixes, if any. A
/// listed plural such as 彼ら wins; otherwise the number becomes plural.
fn resolve_pronoun(head: &str, collective: &str) -> Option<PronounEntry> {
    if collective.is_empty() {
        return pronoun_lookup(head);
    }
    if let Some(p) = pronoun_lookup(&format!("{head}{collective}")) {
        return Some(p);
    }
    pronoun_lookup(head).map(|p| PronounEntry {
        number: AttrTag::Pl,
        ..p
    })
}
