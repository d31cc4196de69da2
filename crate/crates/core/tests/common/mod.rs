#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use jmorph::eval::JudgedItem;
use jmorph::fst::{Arc, Symbol, Transducer};
use jmorph::lexicon::AttrTag;
use jmorph::lexicon::AttrTag::{Female, Formal, Informal, Male, Per1, Per2, Per3, Pl, Sg};
use jmorph::verb::{VerbAnalysis, WordClass};
use rand::Rng;

pub type Relation = BTreeMap<Vec<Symbol>, BTreeSet<Vec<Symbol>>>;

pub fn alphabet(k: usize) -> Vec<Symbol> {
    ['a', 'b', 'c', 'd'][..k]
        .iter()
        .map(|&c| Symbol::Char(c))
        .collect()
}

/// Random machine with at most `max_states` states over `k` letters.
/// Epsilon-input arcs only go from lower to higher state numbers, so the
/// relation restricted to any finite input set is finite.
pub fn random_machine(rng: &mut impl Rng, max_states: u32, k: usize) -> Transducer {
    let sigma = alphabet(k);
    let n = rng.gen_range(1..=max_states);
    let n_arcs = rng.gen_range(0..=2 * n as usize);
    let mut arcs = Vec::new();
    let pick = |rng: &mut _| -> Symbol {
        if Rng::gen_bool(rng, 0.25) {
            Symbol::Epsilon
        } else {
            sigma[Rng::gen_range(rng, 0..sigma.len())]
        }
    };
    for _ in 0..n_arcs {
        let from = rng.gen_range(0..n);
        let to = rng.gen_range(0..n);
        let mut input = pick(rng);
        let output = pick(rng);
        if input.is_epsilon() && to <= from {
            input = sigma[rng.gen_range(0..sigma.len())];
        }
        arcs.push(Arc {
            from,
            input,
            output,
            to,
        });
    }
    let finals: Vec<u32> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    Transducer::from_parts(n, 0, finals, arcs).unwrap()
}

/// Every `(input, output)` pair realized by some accepting path whose input
/// has length at most `max_input`, found by walking the raw arc list.
/// Runs of epsilon-input arcs are cut at the number of states, which is
/// exact for machines without epsilon-input cycles.
pub fn brute_relation(t: &Transducer, max_input: usize) -> Relation {
    let mut rel = Relation::new();
    let limit = t.num_states() as usize;
    let mut stack = vec![(t.start(), Vec::new(), Vec::new(), 0usize)];
    while let Some((state, input, output, eps_run)) = stack.pop() {
        if t.is_final(state) {
            rel.entry(input.clone()).or_default().insert(output.clone());
        }
        for arc in t.arcs().iter().filter(|a| a.from == state) {
            let mut i = input.clone();
            let mut o = output.clone();
            let run = if arc.input.is_epsilon() {
                eps_run + 1
            } else {
                i.push(arc.input);
                0
            };
            if i.len() > max_input || run > limit {
                continue;
            }
            if !arc.output.is_epsilon() {
                o.push(arc.output);
            }
            stack.push((arc.to, i, o, run));
        }
    }
    rel
}

/// All strings over `sigma` of length at most `max_len`.
pub fn all_strings(sigma: &[Symbol], max_len: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &frontier {
            for &c in sigma {
                let mut t: Vec<Symbol> = s.clone();
                t.push(c);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// `apply_down` over every input up to `max_len`, as a relation.
pub fn applied_relation(t: &Transducer, sigma: &[Symbol], max_len: usize) -> Relation {
    all_strings(sigma, max_len)
        .into_iter()
        .filter_map(|x| {
            let outs = t.apply_down(&x).unwrap();
            (!outs.is_empty()).then_some((x, outs))
        })
        .collect()
}

/// Composition of two relations by joining on the middle string.
pub fn join(a: &Relation, b: &Relation) -> Relation {
    let mut out = Relation::new();
    for (x, ys) in a {
        for y in ys {
            if let Some(zs) = b.get(y) {
                out.entry(x.clone()).or_default().extend(zs.iter().cloned());
            }
        }
    }
    out
}

pub fn longest_output(rel: &Relation) -> usize {
    rel.values()
        .flat_map(|s| s.iter().map(Vec::len))
        .max()
        .unwrap_or(0)
}

/// Arc multiset as a sorted list.
pub fn arc_multiset(t: &Transducer) -> Vec<Arc> {
    let mut arcs = t.arcs().to_vec();
    arcs.sort();
    arcs
}

/// Single conjugation tags plus every combination attested in the gold tables.
pub fn sanctioned_tag_sequences() -> Vec<Vec<AttrTag>> {
    use AttrTag::*;
    let mut out: Vec<Vec<AttrTag>> = AttrTag::CONJUGATION.iter().map(|&t| vec![t]).collect();
    out.push(vec![]);
    out.extend([
        vec![Pol, Pfv],
        vec![Pasv, Te, Prog],
        vec![Pot, Neg],
        vec![Pasv, Neg],
    ]);
    out
}

/// Hand-built te/ta oracle: (lemma, te-form, ta-form).
pub const EUPHONY_GOLD: [(&str, &str, &str); 14] = [
    ("買う", "買って", "買った"),
    ("言う", "言って", "言った"),
    ("書く", "書いて", "書いた"),
    ("泳ぐ", "泳いで", "泳いだ"),
    ("話す", "話して", "話した"),
    ("待つ", "待って", "待った"),
    ("死ぬ", "死んで", "死んだ"),
    ("遊ぶ", "遊んで", "遊んだ"),
    ("飲む", "飲んで", "飲んだ"),
    ("帰る", "帰って", "帰った"),
    ("行く", "行って", "行った"),
    ("する", "して", "した"),
    ("くる", "きて", "きた"),
    ("来る", "来て", "来た"),
];

/// The pronoun table transcribed independently of the library: surfaces of
/// one row, then person, number, gender, formality.
pub type PronounRow = (
    &'static [&'static str],
    AttrTag,
    AttrTag,
    Option<AttrTag>,
    Option<AttrTag>,
);

pub const PRONOUN_GOLD: [PronounRow; 17] = [
    (&["私", "わたし"], Per1, Sg, None, None),
    (&["我", "吾", "余"], Per1, Sg, None, Some(Formal)),
    (&["こちら"], Per1, Sg, None, Some(Informal)),
    (&["儂", "わし"], Per1, Sg, Some(Male), None),
    (&["己", "おのれ"], Per1, Sg, Some(Male), Some(Formal)),
    (&["僕"], Per1, Sg, Some(Male), Some(Informal)),
    (&["あたし", "うち"], Per1, Sg, Some(Female), Some(Informal)),
    (&["われわれ", "我々"], Per1, Pl, None, Some(Informal)),
    (&["僕ら", "僕達"], Per1, Pl, Some(Male), Some(Informal)),
    (&["あなた", "貴方"], Per2, Sg, None, None),
    (&["あんた", "君"], Per2, Sg, None, Some(Informal)),
    (&["きさま", "お前"], Per2, Sg, Some(Male), Some(Informal)),
    (&["君たち"], Per2, Pl, None, Some(Informal)),
    (&["かれ", "やつ", "奴"], Per3, Sg, None, Some(Informal)),
    (&["彼女"], Per3, Sg, Some(Female), Some(Informal)),
    (&["奴ら", "奴等", "彼ら"], Per3, Pl, None, Some(Informal)),
    (&["彼女ら"], Per3, Pl, Some(Female), Some(Informal)),
];

pub const COLLECTIVES: [&str; 6] = ["達", "等", "ら", "たち", "かた", "方"];

pub fn plain_reading(lemma: &str) -> VerbAnalysis {
    VerbAnalysis {
        lemma: lemma.into(),
        class: WordClass::V,
        tags: Vec::new(),
    }
}

pub fn judged_item(produced: &[&str], gold: &[&str]) -> JudgedItem {
    JudgedItem {
        surface: produced.join(""),
        produced: produced.iter().map(|l| plain_reading(l)).collect(),
        gold: gold.iter().map(|l| plain_reading(l)).collect(),
    }
}

/// Hand-computed mixtures: items, expected precision, expected recall.
pub fn hand_mixtures() -> Vec<(Vec<JudgedItem>, f64, f64)> {
    vec![
        (vec![judged_item(&["a", "b"], &["a"])], 0.5, 1.0),
        (vec![judged_item(&[], &["a"])], 0.0, 0.0),
        (
            vec![
                judged_item(&["a"], &["a"]),
                judged_item(&["a", "b"], &["b"]),
            ],
            0.75,
            1.0,
        ),
        // 1/3, 0 (empty), 0 (miss)
        (
            vec![
                judged_item(&["a", "b", "c"], &["a"]),
                judged_item(&[], &["a"]),
                judged_item(&["a"], &["b"]),
            ],
            1.0 / 9.0,
            1.0 / 3.0,
        ),
        (
            vec![
                judged_item(&["a", "b", "c", "d"], &["a", "b"]),
                judged_item(&["a"], &["a", "b"]),
            ],
            0.75,
            1.0,
        ),
        // four items: 1, 1/2, 0, 1/4
        (
            vec![
                judged_item(&["a"], &["a"]),
                judged_item(&["a", "b"], &["a"]),
                judged_item(&["c"], &["a"]),
                judged_item(&["a", "b", "c", "d"], &["d"]),
            ],
            0.4375,
            0.75,
        ),
    ]
}
