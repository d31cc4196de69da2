use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Closed set of morphological attributes emitted by the analyzers.
///
/// The serialized names returned by [`AttrTag::name`] are part of the
/// output format and must stay stable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum AttrTag {
    // verbal and adjectival suffixes
    Pol,
    Pfv,
    Neg,
    Pasv,
    Te,
    Prog,
    Cond,
    Vol,
    Imp,
    Caus,
    Pot,
    // class markers
    V,
    Adj,
    Adv,
    // noun attributes
    Polite,
    Formal,
    Informal,
    Animate,
    Collective,
    Possessive,
    // pronoun attributes
    Per1,
    Per2,
    Per3,
    Sg,
    Pl,
    Male,
    Female,
    Prn,
}

impl AttrTag {
    pub const ALL: [AttrTag; 28] = [
        AttrTag::Pol,
        AttrTag::Pfv,
        AttrTag::Neg,
        AttrTag::Pasv,
        AttrTag::Te,
        AttrTag::Prog,
        AttrTag::Cond,
        AttrTag::Vol,
        AttrTag::Imp,
        AttrTag::Caus,
        AttrTag::Pot,
        AttrTag::V,
        AttrTag::Adj,
        AttrTag::Adv,
        AttrTag::Polite,
        AttrTag::Formal,
        AttrTag::Informal,
        AttrTag::Animate,
        AttrTag::Collective,
        AttrTag::Possessive,
        AttrTag::Per1,
        AttrTag::Per2,
        AttrTag::Per3,
        AttrTag::Sg,
        AttrTag::Pl,
        AttrTag::Male,
        AttrTag::Female,
        AttrTag::Prn,
    ];

    /// Suffix tags the verb/adjective grammar can attach.
    pub const CONJUGATION: [AttrTag; 12] = [
        AttrTag::Pol,
        AttrTag::Pfv,
        AttrTag::Neg,
        AttrTag::Pasv,
        AttrTag::Te,
        AttrTag::Prog,
        AttrTag::Cond,
        AttrTag::Vol,
        AttrTag::Imp,
        AttrTag::Caus,
        AttrTag::Pot,
        AttrTag::Adv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AttrTag::Pol => "pol",
            AttrTag::Pfv => "pfv",
            AttrTag::Neg => "neg",
            AttrTag::Pasv => "pasv",
            AttrTag::Te => "te",
            AttrTag::Prog => "prog",
            AttrTag::Cond => "cond",
            AttrTag::Vol => "vol",
            AttrTag::Imp => "imp",
            AttrTag::Caus => "caus",
            AttrTag::Pot => "pot",
            AttrTag::V => "v",
            AttrTag::Adj => "adj",
            AttrTag::Adv => "adv",
            AttrTag::Polite => "polite",
            AttrTag::Formal => "formal",
            AttrTag::Informal => "informal",
            AttrTag::Animate => "animate",
            AttrTag::Collective => "collective",
            AttrTag::Possessive => "possessive",
            AttrTag::Per1 => "per1",
            AttrTag::Per2 => "per2",
            AttrTag::Per3 => "per3",
            AttrTag::Sg => "sg",
            AttrTag::Pl => "pl",
            AttrTag::Male => "male",
            AttrTag::Female => "female",
            AttrTag::Prn => "prn",
        }
    }

    /// Attributes that only the noun analyzer may produce.
    pub fn is_nominal(self) -> bool {
        matches!(
            self,
            AttrTag::Polite
                | AttrTag::Formal
                | AttrTag::Informal
                | AttrTag::Animate
                | AttrTag::Collective
                | AttrTag::Possessive
                | AttrTag::Per1
                | AttrTag::Per2
                | AttrTag::Per3
                | AttrTag::Sg
                | AttrTag::Pl
                | AttrTag::Male
                | AttrTag::Female
                | AttrTag::Prn
        )
    }
}

impl fmt::Display for AttrTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown attribute tag `{0}`")]
pub struct UnknownTag(pub String);

impl FromStr for AttrTag {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AttrTag::ALL
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| UnknownTag(s.to_string()))
    }
}

impl From<AttrTag> for String {
    fn from(tag: AttrTag) -> String {
        tag.name().to_string()
    }
}

impl TryFrom<String> for AttrTag {
    type Error = UnknownTag;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// Formats a tag list the way the CLI prints it: names separated by spaces.
pub fn join_tags(tags: &[AttrTag]) -> String {
    tags.iter().map(|t| t.name()).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for tag in AttrTag::ALL {
            assert_eq!(tag.name().parse::<AttrTag>().unwrap(), tag);
        }
    }

    #[test]
    fn names_are_unique_ascii() {
        let mut names: Vec<_> = AttrTag::ALL.iter().map(|t| t.name()).collect();
        assert!(names.iter().all(|n| n.is_ascii()));
        names.sort();
        names.dedup();
        assert_eq!(names.len(), AttrTag::ALL.len());
    }

    #[test]
    fn rejects_unknown() {
        assert!("3per".parse::<AttrTag>().is_err());
    }
}
