use std::collections::{BTreeSet, HashMap};

use super::{Builder, FstError, StateId, Symbol, Transducer};

/// A context-restricted string rewrite `lhs -> rhs / left _ right`.
///
/// Compiled rules replace every leftmost, non-overlapping occurrence of
/// `left·lhs·right` with `left·rhs·right` in a single left-to-right pass.
/// Strings without an occurrence pass through unchanged. An optional rule
/// also keeps the unreplaced form, so it yields both variants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Vec<Symbol>,
    pub rhs: Vec<Symbol>,
    pub left: Vec<Symbol>,
    pub right: Vec<Symbol>,
    pub optional: bool,
}

impl RewriteRule {
    pub fn new(lhs: Vec<Symbol>, rhs: Vec<Symbol>) -> Self {
        RewriteRule {
            lhs,
            rhs,
            left: Vec::new(),
            right: Vec::new(),
            optional: false,
        }
    }

    pub fn with_context(mut self, left: Vec<Symbol>, right: Vec<Symbol>) -> Self {
        self.left = left;
        self.right = right;
        self
    }

    pub fn optional(mut self) -> Self {
        self.optional = true;
        self
    }

    fn pattern(&self) -> Vec<Symbol> {
        [&self.left[..], &self.lhs, &self.right].concat()
    }

    fn replacement(&self) -> Vec<Symbol> {
        [&self.left[..], &self.rhs, &self.right].concat()
    }

    /// Compiles the rule over `alphabet`. Symbols mentioned by the rule are
    /// added to it; strings containing anything else are rejected by the
    /// resulting machine.
    pub fn compile(&self, alphabet: &BTreeSet<Symbol>) -> Result<Transducer, FstError> {
        if self.lhs.is_empty() {
            return Err(FstError::EmptyRuleLhs);
        }
        let pattern = self.pattern();
        let replacement = self.replacement();
        if pattern.iter().chain(&replacement).any(|s| s.is_epsilon()) {
            return Err(FstError::EpsilonInRule);
        }
        let mut sigma = alphabet.clone();
        sigma.extend(pattern.iter().chain(&replacement).copied());
        sigma.remove(&Symbol::Epsilon);

        // State k < m: the last k symbols read equal pattern[..k] and have not
        // been emitted yet. From k > 0 an epsilon-input chain emits that
        // buffer and lands in a final state `flushed[k]`, which continues only
        // on symbols that restart matching from scratch. Emitting the buffer
        // before reading such a symbol keeps pending output independent of
        // the symbol, so cascades of rules compose without blowing up.
        let m = pattern.len();
        let mut b = Builder::new();
        let states: Vec<StateId> = std::iter::once(0)
            .chain((1..m).map(|_| b.add_state()))
            .collect();
        b.set_final(states[0]);
        let mut tails = Tails::default();
        let flushed: Vec<StateId> = (0..m)
            .map(|k| {
                if k == 0 {
                    return states[0];
                }
                let f = b.add_state();
                b.set_final(f);
                let head = tails.path(&mut b, &pattern[..k], f);
                b.add_arc(states[k], head, Symbol::Epsilon, Symbol::Epsilon);
                f
            })
            .collect();

        for k in 0..m {
            for &sym in &sigma {
                if sym == pattern[k] {
                    if k + 1 == m {
                        tails.emit(&mut b, states[k], states[0], sym, &replacement);
                        if self.optional {
                            tails.emit(&mut b, states[k], states[0], sym, &pattern);
                        }
                    } else {
                        b.add_arc(states[k], states[k + 1], sym, Symbol::Epsilon);
                    }
                    continue;
                }
                let mut seen = pattern[..k].to_vec();
                seen.push(sym);
                let keep = longest_border(&pattern, &seen);
                if keep == 0 {
                    b.add_arc(flushed[k], states[0], sym, sym);
                } else {
                    tails.emit(
                        &mut b,
                        states[k],
                        states[keep],
                        sym,
                        &seen[..seen.len() - keep],
                    );
                }
            }
        }
        Ok(b.finish())
    }
}

/// Shared epsilon-input output chains, keyed by what they emit and where
/// they end. Sharing keeps composed cascades of rules from multiplying
/// identical tails.
#[derive(Default)]
struct Tails(HashMap<(Vec<Symbol>, StateId), StateId>);

impl Tails {
    /// A state from which `output` is emitted on epsilon input, ending at `to`.
    fn path(&mut self, b: &mut Builder, output: &[Symbol], to: StateId) -> StateId {
        let Some((first, rest)) = output.split_first() else {
            return to;
        };
        if let Some(&s) = self.0.get(&(output.to_vec(), to)) {
            return s;
        }
        let next = self.path(b, rest, to);
        let s = b.add_state();
        b.add_arc(s, next, Symbol::Epsilon, *first);
        self.0.insert((output.to_vec(), to), s);
        s
    }

    /// Arc chain consuming `input` and emitting `output` (possibly empty).
    fn emit(
        &mut self,
        b: &mut Builder,
        from: StateId,
        to: StateId,
        input: Symbol,
        output: &[Symbol],
    ) {
        match output.split_first() {
            None => b.add_arc(from, to, input, Symbol::Epsilon),
            Some((first, rest)) => {
                let next = self.path(b, rest, to);
                b.add_arc(from, next, input, *first);
            }
        }
    }
}

/// Length of the longest proper prefix of `pattern` that is a suffix of
/// `seen`, where `seen` is not itself a full match.
fn longest_border(pattern: &[Symbol], seen: &[Symbol]) -> usize {
    let max = seen.len().min(pattern.len() - 1);
    (0..=max)
        .rev()
        .find(|&j| pattern[..j] == seen[seen.len() - j..])
        .unwrap_or(0)
}

/// Obligatory rule over `alphabet`; see [`RewriteRule`].
pub fn rewrite_rule(
    lhs: &[Symbol],
    rhs: &[Symbol],
    left: &[Symbol],
    right: &[Symbol],
    alphabet: &BTreeSet<Symbol>,
) -> Result<Transducer, FstError> {
    RewriteRule::new(lhs.to_vec(), rhs.to_vec())
        .with_context(left.to_vec(), right.to_vec())
        .compile(alphabet)
}
