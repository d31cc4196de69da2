//! Euphony and contraction rules, applied as a cascade of rewrite rules.

use std::collections::BTreeSet;

use crate::fst::{compose, Builder, FstError, Marker, RewriteRule, Symbol, Transducer};

use super::morphotactics::lower_symbols;

/// Godan te/ta euphony as `(stem kana, replacement, voices the suffix)`.
/// Order matters: き→い must run after the い→っ rule has already fired.
const EUPHONY: [(char, char, bool); 8] = [
    ('い', 'っ', false),
    ('ち', 'っ', false),
    ('り', 'っ', false),
    ('び', 'ん', true),
    ('み', 'ん', true),
    ('に', 'ん', true),
    ('き', 'い', false),
    ('ぎ', 'い', true),
];

/// Optional colloquial contractions.
const CONTRACTIONS: [(&str, &str); 5] = [
    ("~い", "~"),
    ("てしまう", "ちゃう"),
    ("でしまう", "じゃう"),
    ("てしまった", "ちゃった"),
    ("でしまった", "じゃった"),
];

/// The ordered rule list, before compilation.
pub fn phonology_rules() -> Vec<RewriteRule> {
    let mut rules = Vec::new();
    for (from, to, voices) in EUPHONY {
        for (suffix, voiced) in [('て', 'で'), ('た', 'だ')] {
            let after = if voices { voiced } else { suffix };
            rules.push(RewriteRule::new(
                lower_symbols(&format!("{from}&{suffix}")),
                lower_symbols(&format!("{to}&{after}")),
            ));
        }
    }
    for (lhs, rhs) in CONTRACTIONS {
        rules.push(RewriteRule::new(lower_symbols(lhs), lower_symbols(rhs)).optional());
    }
    rules
}

/// Deletes every boundary marker and keeps everything else.
pub fn delete_markers(alphabet: &BTreeSet<Symbol>) -> Transducer {
    let mut b = Builder::new();
    b.set_final(0);
    let markers = [Marker::Euphony, Marker::Progressive].map(Symbol::Mark);
    for &s in alphabet.iter().chain(&markers) {
        match s {
            Symbol::Epsilon => {}
            Symbol::Mark(_) => b.add_arc(0, 0, s, Symbol::Epsilon),
            _ => b.add_arc(0, 0, s, s),
        }
    }
    b.finish()
}

/// `alphabet` plus every symbol a rule reads or writes, so that output of an
/// earlier rule is never rejected by a later one.
pub(crate) fn rule_alphabet(
    mut alphabet: BTreeSet<Symbol>,
    rules: &[RewriteRule],
) -> BTreeSet<Symbol> {
    for r in rules {
        alphabet.extend(
            r.lhs
                .iter()
                .chain(&r.rhs)
                .chain(&r.left)
                .chain(&r.right)
                .copied(),
        );
    }
    alphabet.remove(&Symbol::Epsilon);
    alphabet
}

/// The whole cascade composed into one machine over `alphabet`. Intended for
/// small alphabets; the generator applies the rules one by one instead.
pub fn phonology(alphabet: &BTreeSet<Symbol>) -> Result<Transducer, FstError> {
    let rules = phonology_rules();
    let sigma = rule_alphabet(alphabet.clone(), &rules);
    let mut machine: Option<Transducer> = None;
    for rule in rules {
        let t = rule.compile(&sigma)?;
        machine = Some(match machine {
            None => t,
            Some(m) => compose(&m, &t),
        });
    }
    let cascade = machine.expect("rule list is non-empty");
    Ok(compose(&cascade, &delete_markers(&sigma)))
}

/// Runs `lower` through every rule in turn and deletes markers, without
/// composing the cascade.
pub fn realize(lower: &[Symbol]) -> Result<BTreeSet<String>, FstError> {
    let rules = phonology_rules();
    let sigma = rule_alphabet(lower.iter().copied().collect(), &rules);
    let mut current = BTreeSet::from([lower.to_vec()]);
    for rule in rules {
        let machine = rule.compile(&sigma)?;
        let mut next = BTreeSet::new();
        for s in &current {
            next.extend(machine.apply_down(s)?);
        }
        current = next;
    }
    Ok(current
        .iter()
        .map(|s| {
            s.iter()
                .filter(|sym| !matches!(sym, Symbol::Mark(_)))
                .map(ToString::to_string)
                .collect()
        })
        .collect())
}
