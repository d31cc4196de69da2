//! Finite-state morphological analysis and generation for Japanese.
//!
//! Nouns are analyzed by a rule table over pre-segmented tagger output
//! ([`noun`]). Verbs and adjectives go through a generator transducer built
//! from the lexicon, suffix morphotactics and euphony rules; analysis runs
//! the same machine inverted ([`verb`]). Over-generated analyses can be
//! pruned with [`filter`] and scored with [`eval`].

pub mod eval;
pub mod filter;
pub mod fst;
pub mod lexicon;
pub mod noun;
pub mod verb;
