use std::collections::BTreeSet;

use jmorph::filter::{filter, OrderingRules};
use jmorph::lexicon::AttrTag;
use jmorph::verb::{VerbAnalysis, WordClass};
use proptest::prelude::*;
use AttrTag::*;

fn reading(lemma: &str, tags: &[AttrTag]) -> VerbAnalysis {
    VerbAnalysis {
        lemma: lemma.into(),
        class: WordClass::V,
        tags: tags.to_vec(),
    }
}

fn analysis() -> impl Strategy<Value = VerbAnalysis> {
    (
        prop::sample::select(vec!["見る", "信じる", "信ずる"]),
        prop::collection::vec(prop::sample::select(AttrTag::CONJUGATION.to_vec()), 0..5),
    )
        .prop_map(|(lemma, tags)| reading(lemma, &tags))
}

fn analyses() -> impl Strategy<Value = BTreeSet<VerbAnalysis>> {
    prop::collection::btree_set(analysis(), 0..12)
}

fn lemma() -> impl Strategy<Value = Option<&'static str>> {
    prop::option::of(prop::sample::select(vec!["見る", "信じる", "食べる"]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn idempotent(s in analyses(), l in lemma()) {
        let rules = OrderingRules::default();
        let once = filter(&s, l, &rules);
        prop_assert_eq!(filter(&once, l, &rules), once);
    }

    #[test]
    fn monotone(s in analyses(), extra in analyses(), l in lemma()) {
        let rules = OrderingRules::default();
        let t: BTreeSet<_> = s.union(&extra).cloned().collect();
        prop_assert!(filter(&s, l, &rules).is_subset(&filter(&t, l, &rules)));
    }

    #[test]
    fn never_grows(s in analyses(), l in lemma()) {
        prop_assert!(filter(&s, l, &OrderingRules::default()).is_subset(&s));
    }

    #[test]
    fn identity_on_valid_sets(s in analyses()) {
        let rules = OrderingRules::default();
        let valid: BTreeSet<_> = s.into_iter().filter(|a| rules.accepts(&a.tags)).collect();
        prop_assert_eq!(filter(&valid, None, &rules), valid);
    }

    #[test]
    fn keeps_every_valid_matching_reading(s in analyses(), l in lemma()) {
        let rules = OrderingRules::default();
        let kept = filter(&s, l, &rules);
        for a in &s {
            let ok = rules.accepts(&a.tags) && l.is_none_or(|l| a.lemma == l);
            prop_assert_eq!(kept.contains(a), ok);
        }
    }
}

#[test]
fn double_analysis_survives() {
    let s = BTreeSet::from([reading("見る", &[Pot, Neg]), reading("見る", &[Pasv, Neg])]);
    assert_eq!(filter(&s, Some("見る"), &OrderingRules::default()), s);
}

#[test]
fn lemma_mismatch_is_dropped() {
    let s = BTreeSet::from([
        reading("信じる", &[Pasv, Te, Prog]),
        reading("信ずる", &[Pasv, Te, Prog]),
    ]);
    let kept = filter(&s, Some("信じる"), &OrderingRules::default());
    assert_eq!(kept, BTreeSet::from([reading("信じる", &[Pasv, Te, Prog])]));
}

#[test]
fn prog_without_te_is_dropped() {
    let s = BTreeSet::from([reading("見る", &[Prog])]);
    assert!(filter(&s, None, &OrderingRules::default()).is_empty());
}

#[test]
fn rules_load_from_file() {
    let dir = std::env::temp_dir().join(format!("jmorph-rules-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rules.tsv");
    std::fs::write(&path, "pot\tpasv\nterminal\tpfv\n").unwrap();
    let rules = OrderingRules::load(&path).unwrap();
    assert!(rules.accepts(&[Pot, Pasv]));
    assert!(!rules.accepts(&[Pasv, Pot]));
    std::fs::remove_dir_all(dir).unwrap();
}
