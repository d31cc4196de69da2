use super::AttrTag;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PronounEntry {
    pub surface: &'static str,
    pub person: AttrTag,
    pub number: AttrTag,
    pub gender: Option<AttrTag>,
    pub formality: Option<AttrTag>,
}

impl PronounEntry {
    /// Attributes in output order: person, gender, number, formality.
    pub fn attrs(&self) -> Vec<AttrTag> {
        [
            Some(self.person),
            self.gender,
            Some(self.number),
            self.formality,
        ]
        .into_iter()
        .flatten()
        .collect()
    }
}

struct Row {
    surfaces: &'static [&'static str],
    person: AttrTag,
    number: AttrTag,
    gender: Option<AttrTag>,
    formality: Option<AttrTag>,
}

use AttrTag::{Female, Formal, Informal, Male, Per1, Per2, Per3, Pl, Sg};

const fn row(
    surfaces: &'static [&'static str],
    person: AttrTag,
    number: AttrTag,
    gender: Option<AttrTag>,
    formality: Option<AttrTag>,
) -> Row {
    Row {
        surfaces,
        person,
        number,
        gender,
        formality,
    }
}

// 我/吾/余 are archaic; there is no archaic tag, only `formal` is emitted.
static ROWS: [Row; 17] = [
    row(&["私", "わたし"], Per1, Sg, None, None),
    row(&["我", "吾", "余"], Per1, Sg, None, Some(Formal)),
    row(&["こちら"], Per1, Sg, None, Some(Informal)),
    row(&["儂", "わし"], Per1, Sg, Some(Male), None),
    row(&["己", "おのれ"], Per1, Sg, Some(Male), Some(Formal)),
    row(&["僕"], Per1, Sg, Some(Male), Some(Informal)),
    row(&["あたし", "うち"], Per1, Sg, Some(Female), Some(Informal)),
    row(&["われわれ", "我々"], Per1, Pl, None, Some(Informal)),
    row(&["僕ら", "僕達"], Per1, Pl, Some(Male), Some(Informal)),
    row(&["あなた", "貴方"], Per2, Sg, None, None),
    row(&["あんた", "君"], Per2, Sg, None, Some(Informal)),
    row(&["きさま", "お前"], Per2, Sg, Some(Male), Some(Informal)),
    row(&["君たち"], Per2, Pl, None, Some(Informal)),
    row(&["かれ", "やつ", "奴"], Per3, Sg, None, Some(Informal)),
    row(&["彼女"], Per3, Sg, Some(Female), Some(Informal)),
    row(&["奴ら", "奴等", "彼ら"], Per3, Pl, None, Some(Informal)),
    row(&["彼女ら"], Per3, Pl, Some(Female), Some(Informal)),
];

/// Number of rows in the embedded pronoun table.
pub const PRONOUN_ROWS: usize = 17;

/// All pronoun surfaces with their attributes, in table order.
pub fn pronoun_table() -> impl Iterator<Item = PronounEntry> {
    ROWS.iter().flat_map(|r| {
        r.surfaces.iter().map(move |&surface| PronounEntry {
            surface,
            person: r.person,
            number: r.number,
            gender: r.gender,
            formality: r.formality,
        })
    })
}

/// Exact-match lookup.
pub fn pronoun_lookup(surface: &str) -> Option<PronounEntry> {
    pronoun_table().find(|e| e.surface == surface)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        let boku = pronoun_lookup("僕").unwrap();
        assert_eq!(boku.attrs(), [Per1, Male, Sg, Informal]);
        let kanojo = pronoun_lookup("彼女").unwrap();
        assert_eq!(kanojo.attrs(), [Per3, Female, Sg, Informal]);
        assert_eq!(pronoun_lookup("私").unwrap().attrs(), [Per1, Sg]);
        assert!(pronoun_lookup("机").is_none());
    }

    #[test]
    fn surfaces_are_unique() {
        let mut all: Vec<_> = pronoun_table().map(|e| e.surface).collect();
        let n = all.len();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), n);
        assert_eq!(ROWS.len(), PRONOUN_ROWS);
    }
}
