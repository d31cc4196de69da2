mod common;

use std::collections::BTreeSet;

use common::{hand_mixtures, judged_item as item, plain_reading as a};

use jmorph::eval::{evaluate, group_gold, parse_gold, EvalError, EvalMode, JudgedItem};
use proptest::prelude::*;

const TOLERANCE: f64 = 1e-12;

#[test]
fn hand_computed_mixtures() {
    for (i, (items, p, r)) in hand_mixtures().into_iter().enumerate() {
        let report = evaluate(&items).unwrap();
        assert!(
            (report.precision - p).abs() < TOLERANCE,
            "mixture {i}: {}",
            report.precision
        );
        assert!(
            (report.recall - r).abs() < TOLERANCE,
            "mixture {i}: {}",
            report.recall
        );
        assert_eq!(report.n_items, items.len());
    }
}

#[test]
fn empty_set_is_an_error() {
    assert!(matches!(evaluate(&[]), Err(EvalError::EmptyEvalSet)));
}

#[test]
fn token_and_type_grouping() {
    let rows = parse_gold("x\ta\tv\t-\ny\tb\tv\t-\nx\tc\tv\t-\n").unwrap();
    assert_eq!(group_gold(&rows, EvalMode::Token).len(), 3);
    let types = group_gold(&rows, EvalMode::Type);
    assert_eq!(types.len(), 2);
    assert_eq!(types[0].gold, BTreeSet::from([a("a"), a("c")]));
}

fn judged() -> impl Strategy<Value = JudgedItem> {
    let names = prop::sample::select(vec!["a", "b", "c", "d", "e"]);
    (
        prop::collection::btree_set(names.clone(), 0..5),
        prop::collection::btree_set(names, 1..3),
    )
        .prop_map(|(p, g)| {
            let p: Vec<&str> = p.into_iter().collect();
            let g: Vec<&str> = g.into_iter().collect();
            item(&p, &g)
        })
}

proptest! {
    #[test]
    fn metrics_are_bounded(items in prop::collection::vec(judged(), 1..8)) {
        let r = evaluate(&items).unwrap();
        prop_assert!((0.0..=1.0).contains(&r.precision));
        prop_assert!((0.0..=1.0).contains(&r.recall));
    }

    #[test]
    fn perfect_output_scores_one(items in prop::collection::vec(judged(), 1..8)) {
        let exact: Vec<_> = items
            .into_iter()
            .map(|it| JudgedItem { produced: it.gold.clone(), ..it })
            .collect();
        let r = evaluate(&exact).unwrap();
        prop_assert_eq!((r.precision, r.recall), (1.0, 1.0));
    }

    #[test]
    fn removing_a_wrong_analysis_helps(items in prop::collection::vec(judged(), 1..8), pick in any::<prop::sample::Index>()) {
        let before = evaluate(&items).unwrap();
        let mut after = items.clone();
        let i = pick.index(after.len());
        let wrong = after[i].produced.difference(&after[i].gold).next().cloned();
        if let Some(w) = wrong {
            after[i].produced.remove(&w);
            let r = evaluate(&after).unwrap();
            prop_assert!(r.precision >= before.precision - TOLERANCE);
            prop_assert_eq!(r.recall, before.recall);
        }
    }
}
