//! Lexicon plus suffix tables as one unweighted network.
//!
//! Upper side: lemma, class tag, then one tag per suffix. Lower side: the
//! pre-phonology surface with boundary markers. Suffix chains are unrolled
//! by depth so the network stays acyclic.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::fst::{Builder, Marker, StateId, Symbol, Transducer};
use crate::lexicon::Lexicon;

use super::paradigm::{entry, realizations, Cont};

/// Maximum number of tagged suffix slots after the lemma.
pub const MAX_SUFFIX_DEPTH: usize = 6;

/// Text with `&` and `~` placeholders to symbols.
pub(crate) fn lower_symbols(text: &str) -> Vec<Symbol> {
    text.chars()
        .map(|c| match c {
            '&' => Symbol::Mark(Marker::Euphony),
            '~' => Symbol::Mark(Marker::Progressive),
            c => Symbol::Char(c),
        })
        .collect()
}

struct Net {
    b: Builder,
    end: StateId,
    nodes: HashMap<(Cont, usize), StateId>,
    pending: VecDeque<(Cont, usize)>,
}

impl Net {
    fn node(&mut self, cont: Cont, depth: usize) -> StateId {
        if let Some(&s) = self.nodes.get(&(cont, depth)) {
            return s;
        }
        let s = self.b.add_state();
        self.nodes.insert((cont, depth), s);
        self.pending.push_back((cont, depth));
        s
    }

    fn expand(&mut self, cont: Cont, depth: usize) {
        let from = self.nodes[&(cont, depth)];
        for real in realizations(cont) {
            let d = depth + real.tags.len();
            if d > MAX_SUFFIX_DEPTH {
                continue;
            }
            let to = match real.next {
                Some(next) => self.node(next, d),
                None => self.end,
            };
            let upper: Vec<Symbol> = real.tags.iter().map(|&t| Symbol::Tag(t)).collect();
            self.b
                .add_path(from, to, &upper, &lower_symbols(&real.lower));
        }
    }
}

/// Builds the morphotactic network for every conjugable entry in `lex`.
pub fn morphotactics(lex: &Lexicon) -> Transducer {
    let mut b = Builder::new();
    let root = 0;
    let end = b.add_state();
    b.set_final(end);
    let mut net = Net {
        b,
        end,
        nodes: HashMap::new(),
        pending: VecDeque::new(),
    };

    // prefix trie with identity arcs, shared across lemmas
    let mut trie: BTreeMap<(StateId, char), StateId> = BTreeMap::new();
    // one tail path per (trie node, tail, class, continuation)
    let mut tails = HashMap::new();
    for lexeme in lex.entries() {
        let e = entry(lexeme);
        let mut at = root;
        for c in e.prefix.chars() {
            at = match trie.get(&(at, c)) {
                Some(&s) => s,
                None => {
                    let s = net.b.add_state();
                    net.b.add_arc(at, s, Symbol::Char(c), Symbol::Char(c));
                    trie.insert((at, c), s);
                    s
                }
            };
        }
        if tails.insert((at, e.tail, e.class, e.cont), ()).is_some() {
            continue;
        }
        let target = net.node(e.cont, 0);
        let mut upper: Vec<Symbol> = e.tail.chars().map(Symbol::Char).collect();
        upper.push(Symbol::Tag(e.class));
        net.b.add_path(at, target, &upper, &[]);
    }

    while let Some((cont, depth)) = net.pending.pop_front() {
        net.expand(cont, depth);
    }
    net.b.finish()
}
