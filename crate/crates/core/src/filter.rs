//! Post-processing recognizer that prunes over-generated verb analyses:
//! those whose suffix order is invalid and those whose lemma disagrees with
//! the upstream tagger.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use crate::lexicon::AttrTag;
use crate::verb::VerbAnalysis;

#[derive(Debug, thiserror::Error)]
pub enum RulesError {
    #[error("cannot read ordering rules")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("ordering rules are cyclic through `{0}`")]
    Cycle(AttrTag),
}

/// Precedence relation over suffix tags plus the set of tags that may only
/// close a segment. `prog` starts a new segment and must follow `te`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingRules {
    /// Transitive closure: `before[a]` holds every tag that must follow `a`.
    before: BTreeMap<AttrTag, BTreeSet<AttrTag>>,
    terminal: BTreeSet<AttrTag>,
}

impl Default for OrderingRules {
    fn default() -> Self {
        OrderingRules::parse(include_str!("../data/ordering_rules.tsv"))
            .expect("built-in ordering rules are valid")
    }
}

impl OrderingRules {
    pub fn load(path: impl AsRef<Path>) -> Result<Self, RulesError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Lines `tagA<TAB>tagB` (A precedes B) and `terminal<TAB>tag`.
    pub fn parse(text: &str) -> Result<Self, RulesError> {
        let mut pairs = Vec::new();
        let mut terminal = BTreeSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| RulesError::Parse {
                line: i + 1,
                message,
            };
            let (a, b) = line
                .split_once('\t')
                .ok_or_else(|| err("expected two tab-separated fields".into()))?;
            let tag = |s: &str| s.trim().parse::<AttrTag>().map_err(|e| err(e.to_string()));
            if a.trim() == "terminal" {
                terminal.insert(tag(b)?);
            } else {
                pairs.push((tag(a)?, tag(b)?));
            }
        }
        Self::from_pairs(pairs, terminal)
    }

    pub fn from_pairs(
        pairs: impl IntoIterator<Item = (AttrTag, AttrTag)>,
        terminal: impl IntoIterator<Item = AttrTag>,
    ) -> Result<Self, RulesError> {
        let mut before: BTreeMap<AttrTag, BTreeSet<AttrTag>> = BTreeMap::new();
        for (a, b) in pairs {
            before.entry(a).or_default().insert(b);
        }
        // closure by repeated relaxation; the tag set is tiny
        loop {
            let mut changed = false;
            let snapshot = before.clone();
            for followers in before.values_mut() {
                let reach: Vec<AttrTag> = followers
                    .iter()
                    .flat_map(|f| snapshot.get(f).into_iter().flatten().copied())
                    .collect();
                for t in reach {
                    changed |= followers.insert(t);
                }
            }
            if !changed {
                break;
            }
        }
        if let Some((&tag, _)) = before.iter().find(|(a, f)| f.contains(a)) {
            return Err(RulesError::Cycle(tag));
        }
        Ok(OrderingRules {
            before,
            terminal: terminal.into_iter().collect(),
        })
    }

    fn precedes(&self, a: AttrTag, b: AttrTag) -> bool {
        self.before.get(&a).is_some_and(|f| f.contains(&b))
    }

    /// Whether `tags`, read from the stem outward, is a licensed order.
    pub fn accepts(&self, tags: &[AttrTag]) -> bool {
        let mut segments = Vec::new();
        let mut start = 0;
        for (i, &t) in tags.iter().enumerate() {
            if t == AttrTag::Prog {
                if i == 0 || tags[i - 1] != AttrTag::Te {
                    return false;
                }
                segments.push(&tags[start..i]);
                start = i + 1;
            }
        }
        segments.push(&tags[start..]);
        segments.iter().all(|seg| self.segment_ok(seg))
    }

    fn segment_ok(&self, seg: &[AttrTag]) -> bool {
        for (i, &a) in seg.iter().enumerate() {
            if self.terminal.contains(&a) && i + 1 != seg.len() {
                return false;
            }
            for &b in &seg[i + 1..] {
                if a == b || self.precedes(b, a) {
                    return false;
                }
            }
        }
        true
    }
}

/// Keeps the analyses that respect `rules` and, when given, match the
/// tagger's lemma.
pub fn filter(
    analyses: &BTreeSet<VerbAnalysis>,
    mecab_lemma: Option<&str>,
    rules: &OrderingRules,
) -> BTreeSet<VerbAnalysis> {
    analyses
        .iter()
        .filter(|a| rules.accepts(&a.tags))
        .filter(|a| mecab_lemma.is_none_or(|l| a.lemma == l))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use AttrTag::*;

    #[test]
    fn default_rules_accept_attested_orders() {
        let rules = OrderingRules::default();
        for tags in [
            &[Pot, Neg][..],
            &[Pasv, Neg],
            &[Pasv, Te, Prog],
            &[Pol, Pfv],
            &[Caus, Pasv, Pfv],
            &[Te, Prog, Neg, Pfv],
            &[Pol, Neg, Pfv],
            &[],
            &[Adv],
        ] {
            assert!(rules.accepts(tags), "{tags:?}");
        }
    }

    #[test]
    fn default_rules_reject_bad_orders() {
        let rules = OrderingRules::default();
        for tags in [
            &[Prog][..],
            &[Neg, Pot],
            &[Pfv, Neg],
            &[Te, Cond],
            &[Pasv, Pasv],
            &[Pot, Caus],
            &[Neg, Prog],
            &[Pol, Caus],
        ] {
            assert!(!rules.accepts(tags), "{tags:?}");
        }
    }

    #[test]
    fn cycles_are_rejected() {
        let err = OrderingRules::parse("pasv\tneg\nneg\tcaus\ncaus\tpasv\n").unwrap_err();
        assert!(matches!(err, RulesError::Cycle(_)));
        assert!(matches!(
            OrderingRules::parse("pasv\tbogus\n"),
            Err(RulesError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            OrderingRules::parse("pasv pasv\n"),
            Err(RulesError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn closure_is_transitive() {
        let rules = OrderingRules::parse("caus\tpasv\npasv\tneg\n").unwrap();
        assert!(rules.precedes(Caus, Neg));
        assert!(!rules.accepts(&[Neg, Caus]));
    }
}
