use std::collections::BTreeSet;

use super::{invert, FstError, StateId, Symbol, Transducer};

/// Default limit on consecutive epsilon-input arcs along one path.
pub const DEFAULT_MAX_EPSILON_CHAIN: usize = 64;

struct Search<'a> {
    t: &'a Transducer,
    input: &'a [Symbol],
    bound: usize,
    out: Vec<Symbol>,
    // (state, output length) visited since the last input-consuming arc
    chain: Vec<(StateId, usize)>,
    results: BTreeSet<Vec<Symbol>>,
}

impl Search<'_> {
    fn visit(&mut self, state: StateId, pos: usize, chain_start: usize) -> Result<(), FstError> {
        if pos == self.input.len() && self.t.is_final(state) {
            self.results.insert(self.out.clone());
        }

        // epsilon arcs taken so far in this chain, plus the one about to be taken
        let depth = self.chain.len() - chain_start;
        for arc in self.t.arcs_with_input(state, Symbol::Epsilon) {
            let mark = self.out.len();
            if !arc.output.is_epsilon() {
                self.out.push(arc.output);
            }
            // Returning to a state without new output inside one chain adds
            // nothing; only output-producing cycles can run into the bound.
            let key = (arc.to, self.out.len());
            if !self.chain[chain_start..].contains(&key) {
                if depth > self.bound {
                    return Err(FstError::EpsilonBoundExceeded { bound: self.bound });
                }
                self.chain.push(key);
                self.visit(arc.to, pos, chain_start)?;
                self.chain.pop();
            }
            self.out.truncate(mark);
        }

        if let Some(&sym) = self.input.get(pos) {
            for arc in self.t.arcs_with_input(state, sym) {
                let mark = self.out.len();
                if !arc.output.is_epsilon() {
                    self.out.push(arc.output);
                }
                let start = self.chain.len();
                self.chain.push((arc.to, self.out.len()));
                self.visit(arc.to, pos + 1, start)?;
                self.chain.truncate(start);
                self.out.truncate(mark);
            }
        }
        Ok(())
    }
}

impl Transducer {
    /// Every output related to `input`, deduplicated and sorted.
    pub fn apply_down(&self, input: &[Symbol]) -> Result<BTreeSet<Vec<Symbol>>, FstError> {
        self.apply_down_bounded(input, DEFAULT_MAX_EPSILON_CHAIN)
    }

    pub fn apply_down_bounded(
        &self,
        input: &[Symbol],
        max_epsilon_chain: usize,
    ) -> Result<BTreeSet<Vec<Symbol>>, FstError> {
        if input.iter().any(|s| s.is_epsilon()) {
            return Err(FstError::EpsilonInInput);
        }
        let mut search = Search {
            t: self,
            input,
            bound: max_epsilon_chain,
            out: Vec::new(),
            chain: vec![(self.start(), 0)],
            results: BTreeSet::new(),
        };
        search.visit(self.start(), 0, 0)?;
        Ok(search.results)
    }

    /// Analysis direction. Callers that apply up repeatedly should invert
    /// once and apply down instead.
    pub fn apply_up(&self, input: &[Symbol]) -> Result<BTreeSet<Vec<Symbol>>, FstError> {
        invert(self).apply_down(input)
    }
}

#[cfg(test)]
mod tests {
    use crate::fst::{chars, parse_symbols, Builder, FstError, Symbol, Transducer};

    fn strings(set: std::collections::BTreeSet<Vec<Symbol>>) -> Vec<String> {
        set.iter().map(|s| crate::fst::format_symbols(s)).collect()
    }

    #[test]
    fn cross_both_directions() {
        let t = Transducer::cross(&parse_symbols("[neg]").unwrap(), &chars("ない"));
        assert_eq!(
            strings(t.apply_down(&parse_symbols("[neg]").unwrap()).unwrap()),
            ["ない"]
        );
        let t = Transducer::cross(&parse_symbols("[pfv]").unwrap(), &chars("た"));
        assert_eq!(strings(t.apply_up(&chars("た")).unwrap()), ["[pfv]"]);
    }

    #[test]
    fn non_member_is_empty() {
        let t = Transducer::literal(&chars("a"));
        assert!(t.apply_down(&chars("b")).unwrap().is_empty());
        assert!(t.apply_down(&chars("aa")).unwrap().is_empty());
    }

    #[test]
    fn insertion_from_empty_input() {
        let t = Transducer::cross(&[], &chars("んで"));
        assert_eq!(strings(t.apply_down(&[]).unwrap()), ["んで"]);
    }

    #[test]
    fn outputs_are_sorted_and_unique() {
        let mut b = Builder::new();
        let f = b.add_state();
        for out in ["c", "a", "b", "a"] {
            b.add_path(0, f, &chars("x"), &chars(out));
        }
        b.set_final(f);
        let t = b.finish();
        assert_eq!(strings(t.apply_down(&chars("x")).unwrap()), ["a", "b", "c"]);
    }

    #[test]
    fn silent_epsilon_cycle_terminates() {
        // 0 <-eps:eps-> 1, 1 -a:a-> 2 final
        let mut b = Builder::new();
        let s1 = b.add_state();
        let s2 = b.add_state();
        b.add_arc(0, s1, Symbol::Epsilon, Symbol::Epsilon);
        b.add_arc(s1, 0, Symbol::Epsilon, Symbol::Epsilon);
        b.add_arc(s1, s2, Symbol::Char('a'), Symbol::Char('a'));
        b.set_final(s2);
        let t = b.finish();
        assert_eq!(strings(t.apply_down(&chars("a")).unwrap()), ["a"]);
    }

    #[test]
    fn productive_epsilon_cycle_trips_bound() {
        let mut b = Builder::new();
        b.add_arc(0, 0, Symbol::Epsilon, Symbol::Char('x'));
        b.set_final(0);
        let t = b.finish();
        assert_eq!(
            t.apply_down(&[]),
            Err(FstError::EpsilonBoundExceeded { bound: 64 })
        );
        assert_eq!(
            t.apply_down_bounded(&[], 3),
            Err(FstError::EpsilonBoundExceeded { bound: 3 })
        );
    }

    #[test]
    fn long_acyclic_chain_respects_configured_bound() {
        let t = Transducer::cross(&[], &chars("abcde"));
        assert!(t.apply_down_bounded(&[], 5).is_ok());
        assert!(t.apply_down_bounded(&[], 4).is_err());
    }

    #[test]
    fn rejects_epsilon_input() {
        let t = Transducer::literal(&chars("a"));
        assert_eq!(
            t.apply_down(&[Symbol::Epsilon]),
            Err(FstError::EpsilonInInput)
        );
    }
}
