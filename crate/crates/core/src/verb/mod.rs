//! Verb and adjective grammar: a generator transducer from lexical strings
//! (`lemma [class] [tag]...`) to surfaces, and its inverse for analysis.

mod morphotactics;
mod paradigm;
mod phonology;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::fst::{chars, compose, invert, FstError, Symbol, Transducer};
use crate::lexicon::{join_tags, AttrTag, Lexicon};

pub use morphotactics::{morphotactics, MAX_SUFFIX_DEPTH};
pub use paradigm::{stem, StemBase};
use phonology::rule_alphabet;
pub use phonology::{delete_markers, phonology, phonology_rules, realize};

#[derive(Debug, thiserror::Error)]
pub enum GrammarError {
    #[error("lexicon is empty")]
    EmptyLexicon,
    #[error("unknown lemma `{0}`")]
    UnknownLemma(String),
    #[error("`{0}` does not conjugate")]
    NotConjugable(String),
    #[error("`{lemma}` has no {base:?} base")]
    MissingBase { lemma: String, base: StemBase },
    #[error(transparent)]
    Fst(#[from] FstError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WordClass {
    V,
    Adj,
}

impl WordClass {
    pub fn name(self) -> &'static str {
        match self {
            WordClass::V => "v",
            WordClass::Adj => "adj",
        }
    }

    fn tag(self) -> AttrTag {
        match self {
            WordClass::V => AttrTag::V,
            WordClass::Adj => AttrTag::Adj,
        }
    }
}

impl std::str::FromStr for WordClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "v" => Ok(WordClass::V),
            "adj" => Ok(WordClass::Adj),
            _ => Err(format!("unknown word class `{s}`")),
        }
    }
}

impl fmt::Display for WordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One reading of a surface form. Sorted by lemma, then tag sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VerbAnalysis {
    pub lemma: String,
    pub class: WordClass,
    pub tags: Vec<AttrTag>,
}

impl Ord for VerbAnalysis {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.lemma, &self.tags, self.class).cmp(&(&other.lemma, &other.tags, other.class))
    }
}

impl PartialOrd for VerbAnalysis {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl VerbAnalysis {
    /// Reads an upper-side string back into its parts.
    fn from_symbols(symbols: &[Symbol]) -> Option<Self> {
        let mut lemma = String::new();
        let mut rest = symbols.iter();
        let class = loop {
            match rest.next()? {
                Symbol::Char(c) => lemma.push(*c),
                Symbol::Tag(AttrTag::V) => break WordClass::V,
                Symbol::Tag(AttrTag::Adj) => break WordClass::Adj,
                _ => return None,
            }
        };
        let tags = rest
            .map(|s| match s {
                Symbol::Tag(t) => Some(*t),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(VerbAnalysis { lemma, class, tags })
    }

    /// Tags joined with `+`, or `-` when there are none.
    pub fn tag_string(&self) -> String {
        if self.tags.is_empty() {
            "-".to_string()
        } else {
            join_tags(&self.tags).replace(' ', "+")
        }
    }
}

impl fmt::Display for VerbAnalysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}", self.lemma, self.class, self.tag_string())
    }
}

/// Morphotactics composed with phonology.
pub fn build_generator(lex: &Lexicon) -> Result<Transducer, GrammarError> {
    if lex.is_empty() {
        return Err(GrammarError::EmptyLexicon);
    }
    let mut machine = morphotactics(lex);
    let rules = phonology_rules();
    let sigma = rule_alphabet(machine.output_alphabet(), &rules);
    // Folding rules onto the network one at a time keeps every intermediate
    // machine bounded by the lexicon.
    for rule in rules {
        machine = compose(&machine, &rule.compile(&sigma)?);
    }
    Ok(compose(&machine, &delete_markers(&sigma)))
}

/// A compiled grammar: generator plus its inverse.
#[derive(Clone, Debug)]
pub struct Grammar {
    lexicon: Lexicon,
    generator: Transducer,
    analyzer: Transducer,
}

impl Grammar {
    pub fn new(lexicon: Lexicon) -> Result<Self, GrammarError> {
        let generator = build_generator(&lexicon)?;
        let analyzer = invert(&generator);
        Ok(Grammar {
            lexicon,
            generator,
            analyzer,
        })
    }

    pub fn lexicon(&self) -> &Lexicon {
        &self.lexicon
    }

    pub fn generator(&self) -> &Transducer {
        &self.generator
    }

    /// Every surface for `lemma` with exactly `tags` in order. An unattested
    /// tag sequence gives the empty set.
    pub fn generate(
        &self,
        lemma: &str,
        tags: &[AttrTag],
    ) -> Result<BTreeSet<String>, GrammarError> {
        let entries: Vec<_> = self.lexicon.lookup(lemma).collect();
        if entries.is_empty() {
            return Err(GrammarError::UnknownLemma(lemma.to_string()));
        }
        let mut classes: Vec<WordClass> = entries
            .iter()
            .map(|e| {
                if e.group.is_verb() {
                    WordClass::V
                } else {
                    WordClass::Adj
                }
            })
            .collect();
        classes.dedup();
        let mut out = BTreeSet::new();
        for class in classes {
            let mut upper = chars(lemma);
            upper.push(Symbol::Tag(class.tag()));
            upper.extend(tags.iter().map(|&t| Symbol::Tag(t)));
            for surface in self.generator.apply_down(&upper)? {
                out.insert(surface.iter().map(ToString::to_string).collect());
            }
        }
        Ok(out)
    }

    /// Every reading of `surface`; empty when nothing matches.
    pub fn analyze(&self, surface: &str) -> BTreeSet<VerbAnalysis> {
        self.analyzer
            .apply_down(&chars(surface))
            // the generator has no epsilon-input cycles, so neither direction can hit the bound
            .expect("acyclic grammar")
            .iter()
            .filter_map(|upper| VerbAnalysis::from_symbols(upper))
            .collect()
    }
}
