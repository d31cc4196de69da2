use std::fmt;

use crate::lexicon::AttrTag;

/// Internal boundary markers used by the verb grammar between morphemes.
/// They never survive into a surface string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Marker {
    /// Godan continuative stem followed by a te/ta suffix: the euphony site.
    Euphony,
    /// Start of the progressive auxiliary after a te-form.
    Progressive,
}

impl Marker {
    pub fn name(self) -> &'static str {
        match self {
            Marker::Euphony => "euph",
            Marker::Progressive => "prog",
        }
    }
}

/// One element of a transducer alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Epsilon,
    Char(char),
    Tag(AttrTag),
    Mark(Marker),
}

impl Symbol {
    pub fn is_epsilon(self) -> bool {
        self == Symbol::Epsilon
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Epsilon => f.write_str("<eps>"),
            Symbol::Char(c) => write!(f, "{c}"),
            Symbol::Tag(t) => write!(f, "[{}]", t.name()),
            Symbol::Mark(m) => write!(f, "<{}>", m.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymbolError {
    #[error("unterminated `{open}` at byte {pos}")]
    Unterminated { open: char, pos: usize },
    #[error("unknown tag `[{0}]`")]
    UnknownTag(String),
    #[error("unknown marker `<{0}>`")]
    UnknownMarker(String),
}

/// Parses the bracketed text form: plain characters, `[tag]` and `<marker>`.
/// `<eps>` is rejected because epsilon never occurs in a materialized string.
pub fn parse_symbols(text: &str) -> Result<Vec<Symbol>, SymbolError> {
    let mut out = Vec::new();
    let mut rest = text;
    let mut offset = 0;
    while let Some(c) = rest.chars().next() {
        let close = match c {
            '[' => ']',
            '<' => '>',
            _ => {
                out.push(Symbol::Char(c));
                rest = &rest[c.len_utf8()..];
                offset += c.len_utf8();
                continue;
            }
        };
        let end = rest.find(close).ok_or(SymbolError::Unterminated {
            open: c,
            pos: offset,
        })?;
        let name = &rest[1..end];
        let sym = if c == '[' {
            Symbol::Tag(
                name.parse()
                    .map_err(|_| SymbolError::UnknownTag(name.to_string()))?,
            )
        } else {
            match name {
                "euph" => Symbol::Mark(Marker::Euphony),
                "prog" => Symbol::Mark(Marker::Progressive),
                _ => return Err(SymbolError::UnknownMarker(name.to_string())),
            }
        };
        out.push(sym);
        rest = &rest[end + 1..];
        offset += end + 1;
    }
    Ok(out)
}

pub fn format_symbols(symbols: &[Symbol]) -> String {
    symbols.iter().map(ToString::to_string).collect()
}

/// Plain character sequence, no tag parsing.
pub fn chars(text: &str) -> Vec<Symbol> {
    text.chars().map(Symbol::Char).collect()
}
