//! A small unweighted finite-state transducer engine.
//!
//! Machines are immutable once built. Every construction operation returns a
//! trimmed machine whose start state is `0`; states that are unreachable from
//! the start or cannot reach a final state are removed.

mod apply;
mod ops;
mod rewrite;
mod symbol;

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;
use std::ops::Range;

pub use apply::DEFAULT_MAX_EPSILON_CHAIN;
pub use ops::{compose, concat, invert, union};
pub use rewrite::{rewrite_rule, RewriteRule};
pub use symbol::{chars, format_symbols, parse_symbols, Marker, Symbol, SymbolError};

pub type StateId = u32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FstError {
    #[error("state {0} does not exist")]
    InvalidState(StateId),
    #[error(
        "more than {bound} consecutive epsilon-input arcs; the machine likely has an epsilon cycle"
    )]
    EpsilonBoundExceeded { bound: usize },
    #[error("input to apply contains epsilon")]
    EpsilonInInput,
    #[error("rewrite rule has an empty left-hand side")]
    EmptyRuleLhs,
    #[error("rewrite rule mentions epsilon")]
    EpsilonInRule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub from: StateId,
    pub input: Symbol,
    pub output: Symbol,
    pub to: StateId,
}

/// Unweighted transducer. Arcs are kept sorted by `(from, input, output, to)`
/// with duplicates removed, so equal relations built the same way compare
/// equal arc-for-arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transducer {
    num_states: u32,
    start: StateId,
    finals: Vec<bool>,
    arcs: Vec<Arc>,
    // arcs[offsets[s]..offsets[s + 1]] leave state s
    offsets: Vec<usize>,
}

impl Transducer {
    /// Validates the parts and returns the trimmed machine.
    pub fn from_parts(
        num_states: u32,
        start: StateId,
        finals: impl IntoIterator<Item = StateId>,
        arcs: Vec<Arc>,
    ) -> Result<Self, FstError> {
        let check = |s: StateId| {
            if s < num_states {
                Ok(())
            } else {
                Err(FstError::InvalidState(s))
            }
        };
        check(start)?;
        let mut final_flags = vec![false; num_states as usize];
        for f in finals {
            check(f)?;
            final_flags[f as usize] = true;
        }
        for arc in &arcs {
            check(arc.from)?;
            check(arc.to)?;
        }
        Ok(Self::raw(num_states, start, final_flags, arcs).trimmed())
    }

    fn raw(num_states: u32, start: StateId, finals: Vec<bool>, mut arcs: Vec<Arc>) -> Self {
        arcs.sort_unstable();
        arcs.dedup();
        let mut offsets = vec![0usize; num_states as usize + 1];
        for arc in &arcs {
            offsets[arc.from as usize + 1] += 1;
        }
        for i in 0..num_states as usize {
            offsets[i + 1] += offsets[i];
        }
        Transducer {
            num_states,
            start,
            finals,
            arcs,
            offsets,
        }
    }

    /// Removes useless states and renumbers breadth-first from the start,
    /// which becomes state `0`.
    fn trimmed(self) -> Self {
        let n = self.num_states as usize;
        let mut forward = vec![false; n];
        let mut queue = VecDeque::from([self.start]);
        forward[self.start as usize] = true;
        while let Some(s) = queue.pop_front() {
            for arc in self.arcs_from(s) {
                if !forward[arc.to as usize] {
                    forward[arc.to as usize] = true;
                    queue.push_back(arc.to);
                }
            }
        }

        let mut reverse: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for arc in &self.arcs {
            reverse[arc.to as usize].push(arc.from);
        }
        let mut backward = self.finals.clone();
        queue.extend((0..n as StateId).filter(|&s| self.finals[s as usize]));
        while let Some(s) = queue.pop_front() {
            for &p in &reverse[s as usize] {
                if !backward[p as usize] {
                    backward[p as usize] = true;
                    queue.push_back(p);
                }
            }
        }

        let keep: Vec<bool> = (0..n)
            .map(|s| s == self.start as usize || (forward[s] && backward[s]))
            .collect();
        // breadth-first numbering over kept states, start first
        let mut remap = vec![StateId::MAX; n];
        remap[self.start as usize] = 0;
        let mut next: StateId = 1;
        queue.push_back(self.start);
        while let Some(s) = queue.pop_front() {
            for arc in self.arcs_from(s) {
                let t = arc.to as usize;
                if keep[t] && backward[s as usize] && remap[t] == StateId::MAX {
                    remap[t] = next;
                    next += 1;
                    queue.push_back(arc.to);
                }
            }
        }
        let mut finals = vec![false; next as usize];
        for s in 0..n {
            if remap[s] != StateId::MAX && self.finals[s] {
                finals[remap[s] as usize] = true;
            }
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|a| {
                let (f, t) = (a.from as usize, a.to as usize);
                remap[f] != StateId::MAX && remap[t] != StateId::MAX && backward[f]
            })
            .map(|a| Arc {
                from: remap[a.from as usize],
                to: remap[a.to as usize],
                ..*a
            })
            .collect();
        Self::raw(next, 0, finals, arcs)
    }

    pub fn num_states(&self) -> u32 {
        self.num_states
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn is_final(&self, s: StateId) -> bool {
        self.finals[s as usize]
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.num_states).filter(|&s| self.finals[s as usize])
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arcs_from(&self, s: StateId) -> &[Arc] {
        &self.arcs[self.arc_range(s)]
    }

    fn arc_range(&self, s: StateId) -> Range<usize> {
        self.offsets[s as usize]..self.offsets[s as usize + 1]
    }

    /// Arcs leaving `s` whose input is exactly `input`.
    pub fn arcs_with_input(&self, s: StateId, input: Symbol) -> &[Arc] {
        let arcs = self.arcs_from(s);
        let lo = arcs.partition_point(|a| a.input < input);
        let hi = lo + arcs[lo..].partition_point(|a| a.input == input);
        &arcs[lo..hi]
    }

    pub fn input_alphabet(&self) -> BTreeSet<Symbol> {
        self.arcs
            .iter()
            .map(|a| a.input)
            .filter(|s| !s.is_epsilon())
            .collect()
    }

    pub fn output_alphabet(&self) -> BTreeSet<Symbol> {
        self.arcs
            .iter()
            .map(|a| a.output)
            .filter(|s| !s.is_epsilon())
            .collect()
    }

    /// Identity relation on `symbols`: a single chain accepting exactly that
    /// sequence.
    pub fn literal(symbols: &[Symbol]) -> Self {
        Self::cross(symbols, symbols)
    }

    /// Maps exactly `input` to exactly `output`. The shorter side is padded
    /// with epsilon at the end.
    pub fn cross(input: &[Symbol], output: &[Symbol]) -> Self {
        let mut b = Builder::new();
        if input.is_empty() && output.is_empty() {
            b.set_final(0);
            return b.finish();
        }
        let end = b.add_state();
        b.add_path(0, end, input, output);
        b.set_final(end);
        b.finish()
    }

    /// `Σ*` identity over the given alphabet (one state, loops only).
    pub fn sigma_star(alphabet: impl IntoIterator<Item = Symbol>) -> Self {
        let mut b = Builder::new();
        for s in alphabet {
            if !s.is_epsilon() {
                b.add_arc(0, 0, s, s);
            }
        }
        b.set_final(0);
        b.finish()
    }

    /// Kleene star of the relation.
    pub fn closure(&self) -> Self {
        ops::closure(self)
    }

    /// AT&T-style text dump: `from\tto\tin\tout` per arc, then one final
    /// state per line. The start state is always `0`.
    pub fn to_att(&self) -> String {
        let mut out = String::new();
        for a in &self.arcs {
            let _ = writeln!(out, "{}\t{}\t{}\t{}", a.from, a.to, a.input, a.output);
        }
        for f in self.finals() {
            let _ = writeln!(out, "{f}");
        }
        out
    }
}

/// Incremental construction of a transducer. State `0` is the start.
#[derive(Debug, Clone)]
pub struct Builder {
    num_states: u32,
    finals: Vec<StateId>,
    arcs: Vec<Arc>,
}

impl Default for Builder {
    fn default() -> Self {
        Self::new()
    }
}

impl Builder {
    pub fn new() -> Self {
        Builder {
            num_states: 1,
            finals: Vec::new(),
            arcs: Vec::new(),
        }
    }

    pub fn add_state(&mut self) -> StateId {
        self.num_states += 1;
        self.num_states - 1
    }

    pub fn add_arc(&mut self, from: StateId, to: StateId, input: Symbol, output: Symbol) {
        self.arcs.push(Arc {
            from,
            input,
            output,
            to,
        });
    }

    /// Adds a chain of fresh states from `from` to `to` realizing
    /// `input -> output`, padding the shorter side with epsilon.
    pub fn add_path(&mut self, from: StateId, to: StateId, input: &[Symbol], output: &[Symbol]) {
        let len = input.len().max(output.len());
        if len == 0 {
            self.add_arc(from, to, Symbol::Epsilon, Symbol::Epsilon);
            return;
        }
        let mut cur = from;
        for i in 0..len {
            let next = if i + 1 == len { to } else { self.add_state() };
            let a = input.get(i).copied().unwrap_or(Symbol::Epsilon);
            let b = output.get(i).copied().unwrap_or(Symbol::Epsilon);
            self.add_arc(cur, next, a, b);
            cur = next;
        }
    }

    pub fn set_final(&mut self, s: StateId) {
        self.finals.push(s);
    }

    /// Panics if an arc or final refers to a state that was never added;
    /// use [`Builder::try_finish`] for untrusted input.
    pub fn finish(self) -> Transducer {
        self.try_finish()
            .expect("builder referenced an unknown state")
    }

    pub fn try_finish(self) -> Result<Transducer, FstError> {
        Transducer::from_parts(self.num_states, 0, self.finals, self.arcs)
    }
}
