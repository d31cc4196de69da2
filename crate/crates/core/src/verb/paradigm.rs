//! Stem bases and per-class suffix realizations.
//!
//! Lower strings in the tables use two placeholder characters that are turned
//! into boundary markers when the network is built: `&` marks a godan
//! euphony site and `~` starts the progressive auxiliary.

use crate::lexicon::{AttrTag, ConjGroup, GodanRow, Lexeme};

use super::GrammarError;

use AttrTag::{Adv, Caus, Cond, Imp, Neg, Pasv, Pfv, Pol, Pot, Prog, Te, Vol};

/// The six traditional conjugation bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StemBase {
    Irrealis,
    Continuative,
    Terminal,
    Attributive,
    Hypothetical,
    Imperative,
}

impl StemBase {
    pub const ALL: [StemBase; 6] = [
        StemBase::Irrealis,
        StemBase::Continuative,
        StemBase::Terminal,
        StemBase::Attributive,
        StemBase::Hypothetical,
        StemBase::Imperative,
    ];
}

/// Continuation class: what may follow the material emitted so far.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Cont {
    Godan {
        row: GodanRow,
        geminate: bool,
    },
    Ichidan,
    Sa {
        voiced: bool,
    },
    Ka {
        kanji: bool,
    },
    IAdj,
    NaAdj,
    /// After the polite ま.
    Masu,
    /// After a te-form.
    Te,
}

/// One way of leaving a continuation class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Realization {
    pub tags: Vec<AttrTag>,
    pub lower: String,
    /// `None` ends the word.
    pub next: Option<Cont>,
}

fn r(tags: &[AttrTag], lower: impl Into<String>, next: Option<Cont>) -> Realization {
    Realization {
        tags: tags.to_vec(),
        lower: lower.into(),
        next,
    }
}

const END: Option<Cont> = None;
const ICHIDAN: Option<Cont> = Some(Cont::Ichidan);
const IADJ: Option<Cont> = Some(Cont::IAdj);

/// Colloquial and classical negations on the irrealis base.
const CLASSICAL_NEG: [&str; 5] = ["ぬ", "ん", "ず", "ずな", "ざる"];

/// How a lexeme enters the network: the lemma splits into a prefix shared by
/// both sides and a tail written only on the lexical side.
pub(crate) struct Entry<'a> {
    pub prefix: &'a str,
    pub tail: &'static str,
    pub class: AttrTag,
    pub cont: Cont,
}

pub(crate) fn entry(lex: &Lexeme) -> Entry<'_> {
    let lemma = lex.lemma.as_str();
    let cut = |tail: &'static str| &lemma[..lemma.len() - tail.len()];
    let verb = |prefix, tail, cont| Entry {
        prefix,
        tail,
        class: AttrTag::V,
        cont,
    };
    match lex.group {
        ConjGroup::Godan(row) => {
            let tail = godan_tail(row);
            verb(
                cut(tail),
                tail,
                Cont::Godan {
                    row,
                    geminate: lex.flags.geminate_euphony,
                },
            )
        }
        ConjGroup::Ichidan => verb(cut("る"), "る", Cont::Ichidan),
        ConjGroup::SaIrregular if lemma.ends_with("ずる") => {
            verb(cut("ずる"), "ずる", Cont::Sa { voiced: true })
        }
        ConjGroup::SaIrregular => verb(cut("する"), "する", Cont::Sa { voiced: false }),
        ConjGroup::KaIrregular if lemma.ends_with("来る") => {
            verb(cut("る"), "る", Cont::Ka { kanji: true })
        }
        ConjGroup::KaIrregular => verb(cut("くる"), "くる", Cont::Ka { kanji: false }),
        ConjGroup::IAdjective => Entry {
            prefix: cut("い"),
            tail: "い",
            class: AttrTag::Adj,
            cont: Cont::IAdj,
        },
        ConjGroup::NaAdjective => Entry {
            prefix: lemma,
            tail: "",
            class: AttrTag::Adj,
            cont: Cont::NaAdj,
        },
    }
}

fn godan_tail(row: GodanRow) -> &'static str {
    match row {
        GodanRow::U => "う",
        GodanRow::Ku => "く",
        GodanRow::Gu => "ぐ",
        GodanRow::Su => "す",
        GodanRow::Tsu => "つ",
        GodanRow::Nu => "ぬ",
        GodanRow::Bu => "ぶ",
        GodanRow::Mu => "む",
        GodanRow::Ru => "る",
    }
}

/// Stem of `lex` for `base`.
pub fn stem(lex: &Lexeme, base: StemBase) -> Result<String, GrammarError> {
    let e = entry(lex);
    let ending: String = match e.cont {
        Cont::Godan { row, .. } => {
            let [a, i, u, e, _] = row.columns();
            match base {
                StemBase::Irrealis => a,
                StemBase::Continuative => i,
                StemBase::Terminal | StemBase::Attributive => u,
                StemBase::Hypothetical | StemBase::Imperative => e,
            }
            .to_string()
        }
        Cont::Ichidan => String::new(),
        Cont::Sa { voiced } => {
            let forms = if voiced {
                ["じ", "じ", "ずる", "ずる", "ずれ", "じろ"]
            } else {
                ["し", "し", "する", "する", "すれ", "しろ"]
            };
            forms[base as usize].to_string()
        }
        Cont::Ka { kanji } => {
            let forms = if kanji {
                ["", "", "る", "る", "れ", "い"]
            } else {
                ["こ", "き", "くる", "くる", "くれ", "こい"]
            };
            forms[base as usize].to_string()
        }
        Cont::IAdj => match base {
            StemBase::Irrealis => "かろ".into(),
            StemBase::Continuative => "く".into(),
            StemBase::Terminal | StemBase::Attributive => "い".into(),
            StemBase::Hypothetical => "けれ".into(),
            StemBase::Imperative => {
                return Err(GrammarError::MissingBase {
                    lemma: lex.lemma.clone(),
                    base,
                })
            }
        },
        Cont::NaAdj | Cont::Masu | Cont::Te => {
            return Err(GrammarError::NotConjugable(lex.lemma.clone()))
        }
    };
    Ok(format!("{}{}", e.prefix, ending))
}

/// Every way out of `cont`. Lower strings exclude anything already emitted.
pub(crate) fn realizations(cont: Cont) -> Vec<Realization> {
    match cont {
        Cont::Godan { row, geminate } => godan(row, geminate),
        Cont::Ichidan => ichidan(),
        Cont::Sa { voiced } => sa(voiced),
        Cont::Ka { kanji } => ka(kanji),
        Cont::IAdj => i_adjective(),
        Cont::NaAdj => na_adjective(),
        Cont::Masu => vec![
            r(&[], "す", END),
            r(&[Pfv], "した", END),
            r(&[Neg], "せん", END),
            r(&[Neg, Pfv], "せんでした", END),
            r(&[Vol], "しょう", END),
            r(&[Te], "して", END),
        ],
        Cont::Te => vec![r(&[], "", END), r(&[Prog], "~い", ICHIDAN)],
    }
}

fn godan(row: GodanRow, geminate: bool) -> Vec<Realization> {
    let [a, i, u, e, o] = row.columns();
    // 行く-type verbs skip the euphony rules and geminate directly
    let euph = if geminate {
        "っ".to_string()
    } else {
        format!("{i}&")
    };
    let te = Some(Cont::Te);
    let mut out = vec![
        r(&[], u, END),
        r(&[Neg], format!("{a}な"), IADJ),
        r(&[Neg], format!("{a}なきゃ"), END),
        r(&[Neg], format!("{u}な"), END),
        r(&[Pasv], format!("{a}れ"), ICHIDAN),
        r(&[Caus], format!("{a}せ"), ICHIDAN),
        r(&[Pot], e, ICHIDAN),
        r(&[Pol], format!("{i}ま"), Some(Cont::Masu)),
        // nominal polite predicate on the continuative (助かりでした)
        r(&[Pol], format!("{i}です"), END),
        r(&[Pol, Pfv], format!("{i}でした"), END),
        r(&[Te], format!("{euph}て"), te),
        r(&[Pfv], format!("{euph}た"), END),
        r(&[Cond], format!("{euph}たら"), END),
        r(&[Cond], format!("{e}ば"), END),
        r(&[Vol], format!("{o}う"), END),
        r(&[Imp], e, END),
    ];
    out.extend(
        CLASSICAL_NEG
            .iter()
            .map(|s| r(&[Neg], format!("{a}{s}"), END)),
    );
    out
}

fn ichidan() -> Vec<Realization> {
    let mut out = vec![
        r(&[], "る", END),
        r(&[Neg], "な", IADJ),
        r(&[Neg], "なきゃ", END),
        r(&[Neg], "るな", END),
        r(&[Pasv], "られ", ICHIDAN),
        r(&[Pot], "られ", ICHIDAN),
        r(&[Caus], "させ", ICHIDAN),
        r(&[Pol], "ま", Some(Cont::Masu)),
        r(&[Te], "て", Some(Cont::Te)),
        r(&[Pfv], "た", END),
        r(&[Cond], "たら", END),
        r(&[Cond], "れば", END),
        r(&[Vol], "よう", END),
        r(&[Imp], "ろ", END),
        r(&[Imp], "よ", END),
    ];
    out.extend(CLASSICAL_NEG.iter().map(|s| r(&[Neg], *s, END)));
    out
}

fn sa(voiced: bool) -> Vec<Realization> {
    // する and its voiced variant ずる (信ずる)
    let (shi, su, se) = if voiced {
        ("じ", "ず", "ぜ")
    } else {
        ("し", "す", "せ")
    };
    let mut out = vec![
        r(&[], format!("{su}る"), END),
        r(&[Neg], format!("{shi}な"), IADJ),
        r(&[Neg], format!("{shi}なきゃ"), END),
        r(&[Neg], format!("{su}るな"), END),
        r(&[Caus], format!("{shi}させ"), ICHIDAN),
        r(&[Pol], format!("{shi}ま"), Some(Cont::Masu)),
        r(&[Te], format!("{shi}て"), Some(Cont::Te)),
        r(&[Pfv], format!("{shi}た"), END),
        r(&[Cond], format!("{shi}たら"), END),
        r(&[Cond], format!("{su}れば"), END),
        r(&[Vol], format!("{shi}よう"), END),
        r(&[Imp], format!("{shi}ろ"), END),
        r(&[Imp], format!("{se}よ"), END),
    ];
    if voiced {
        out.extend([
            r(&[Pasv], "じられ", ICHIDAN),
            r(&[Pasv], "ぜられ", ICHIDAN),
            r(&[Pot], "じられ", ICHIDAN),
        ]);
    } else {
        out.retain(|x| x.tags != [Caus]);
        out.extend([
            r(&[Pasv], "され", ICHIDAN),
            r(&[Caus], "させ", ICHIDAN),
            // suppletive potential: できる
            r(&[Pot], "でき", ICHIDAN),
        ]);
    }
    out.extend(
        CLASSICAL_NEG
            .iter()
            .map(|s| r(&[Neg], format!("{se}{s}"), END)),
    );
    out
}

fn ka(kanji: bool) -> Vec<Realization> {
    // (tags, kana stem that the kanji 来 already spells, suffix, next)
    let table: [(&[AttrTag], &str, &str, Option<Cont>); 15] = [
        (&[], "く", "る", END),
        (&[Neg], "こ", "な", IADJ),
        (&[Neg], "こ", "なきゃ", END),
        (&[Neg], "く", "るな", END),
        (&[Pasv], "こ", "られ", ICHIDAN),
        (&[Pot], "こ", "られ", ICHIDAN),
        (&[Caus], "こ", "させ", ICHIDAN),
        (&[Pol], "き", "ま", Some(Cont::Masu)),
        (&[Te], "き", "て", Some(Cont::Te)),
        (&[Pfv], "き", "た", END),
        (&[Cond], "き", "たら", END),
        (&[Cond], "く", "れば", END),
        (&[Vol], "こ", "よう", END),
        (&[Imp], "こ", "い", END),
        (&[Imp], "こ", "よ", END),
    ];
    let stem = |kana: &str| if kanji { "" } else { kana }.to_string();
    let mut out: Vec<_> = table
        .iter()
        .map(|&(tags, kana, suffix, next)| r(tags, stem(kana) + suffix, next))
        .collect();
    out.extend(CLASSICAL_NEG.iter().map(|s| r(&[Neg], stem("こ") + s, END)));
    out
}

fn i_adjective() -> Vec<Realization> {
    vec![
        r(&[], "い", END),
        r(&[Pfv], "かった", END),
        r(&[Te], "くて", END),
        r(&[Cond], "ければ", END),
        r(&[Cond], "かったら", END),
        r(&[Vol], "かろう", END),
        r(&[Adv], "く", END),
        r(&[Neg], "くな", IADJ),
        r(&[Pol], "いです", END),
    ]
}

fn na_adjective() -> Vec<Realization> {
    vec![
        r(&[], "", END),
        r(&[], "だ", END),
        r(&[Pfv], "だった", END),
        r(&[Pol], "です", END),
        r(&[Pol, Pfv], "でした", END),
        r(&[Neg], "ではな", IADJ),
        r(&[Neg], "じゃな", IADJ),
        r(&[Pol, Neg], "ではありません", END),
        r(&[Pol, Neg], "じゃありません", END),
        r(&[Pol, Neg, Pfv], "ではありませんでした", END),
        r(&[Te], "で", END),
        r(&[Cond], "なら", END),
        r(&[Cond], "だったら", END),
        r(&[Vol], "だろう", END),
        r(&[Pol, Vol], "でしょう", END),
        // attributive な is reported as adverbial, as is に
        r(&[Adv], "な", END),
        r(&[Adv], "に", END),
    ]
}
