//! Precision and recall over judged analysis sets.
//!
//! Item precision is `|produced ∩ gold| / |produced|` (0 when nothing was
//! produced); an item is a hit when the intersection is non-empty. Corpus
//! precision is the mean item precision and recall the fraction of hits.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;
use unicode_width::UnicodeWidthStr;

use crate::lexicon::AttrTag;
use crate::verb::{VerbAnalysis, WordClass};

#[derive(Debug, thiserror::Error)]
pub enum EvalError {
    #[error("evaluation set is empty")]
    EmptyEvalSet,
    #[error("cannot read gold file")]
    Io(#[from] std::io::Error),
    #[error("gold line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JudgedItem {
    pub surface: String,
    pub produced: BTreeSet<VerbAnalysis>,
    pub gold: BTreeSet<VerbAnalysis>,
}

impl JudgedItem {
    pub fn correct(&self) -> usize {
        self.produced.intersection(&self.gold).count()
    }

    pub fn precision(&self) -> f64 {
        if self.produced.is_empty() {
            0.0
        } else {
            self.correct() as f64 / self.produced.len() as f64
        }
    }

    pub fn hit(&self) -> bool {
        self.correct() > 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ItemScore {
    pub surface: String,
    pub precision: f64,
    pub hit: bool,
    pub produced: usize,
    pub correct: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvalReport {
    pub n_items: usize,
    pub precision: f64,
    pub recall: f64,
    pub per_item: Vec<ItemScore>,
}

pub fn evaluate(items: &[JudgedItem]) -> Result<EvalReport, EvalError> {
    if items.is_empty() {
        return Err(EvalError::EmptyEvalSet);
    }
    let per_item: Vec<ItemScore> = items
        .iter()
        .map(|it| ItemScore {
            surface: it.surface.clone(),
            precision: it.precision(),
            hit: it.hit(),
            produced: it.produced.len(),
            correct: it.correct(),
        })
        .collect();
    let n = items.len() as f64;
    Ok(EvalReport {
        n_items: items.len(),
        precision: per_item.iter().map(|s| s.precision).sum::<f64>() / n,
        recall: per_item.iter().filter(|s| s.hit).count() as f64 / n,
        per_item,
    })
}

impl EvalReport {
    /// Text table aligned by display width, with a summary line.
    pub fn to_table(&self) -> String {
        let width = self
            .per_item
            .iter()
            .map(|s| s.surface.width())
            .max()
            .unwrap_or(0)
            .max("surface".len());
        let pad = |s: &str| {
            let n = width.saturating_sub(s.width());
            format!("{s}{}", " ".repeat(n))
        };
        let mut out = String::new();
        let _ = writeln!(out, "{}  precision  hit  correct/produced", pad("surface"));
        for s in &self.per_item {
            let _ = writeln!(
                out,
                "{}  {:>9.3}  {:<3}  {}/{}",
                pad(&s.surface),
                s.precision,
                if s.hit { "yes" } else { "no" },
                s.correct,
                s.produced
            );
        }
        let _ = writeln!(
            out,
            "items={} precision={:.3} recall={:.3}",
            self.n_items, self.precision, self.recall
        );
        out
    }

    /// One JSON object per item, then a summary object.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for s in &self.per_item {
            out.push_str(&serde_json::to_string(s).expect("plain data serializes"));
            out.push('\n');
        }
        let summary = serde_json::json!({
            "summary": true,
            "n_items": self.n_items,
            "precision": self.precision,
            "recall": self.recall,
        });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }
}

/// How gold rows are grouped into items.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EvalMode {
    /// Consecutive rows with the same surface form one item.
    #[default]
    Token,
    /// All rows with the same surface form one item.
    Type,
}

impl FromStr for EvalMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "token" => Ok(EvalMode::Token),
            "type" => Ok(EvalMode::Type),
            _ => Err(format!("unknown eval mode `{s}` (expected token or type)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldRow {
    pub surface: String,
    pub analysis: VerbAnalysis,
    pub mecab_lemma: Option<String>,
}

/// Surface plus all its gold analyses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldItem {
    pub surface: String,
    pub gold: BTreeSet<VerbAnalysis>,
    pub mecab_lemma: Option<String>,
}

/// `surface<TAB>lemma<TAB>class<TAB>tags[<TAB>mecab_lemma]`, tags joined by
/// `+` or `-` for none. `#` comments and blank lines are skipped.
pub fn parse_gold(text: &str) -> Result<Vec<GoldRow>, EvalError> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| EvalError::Parse {
            line: i + 1,
            message,
        };
        let fields: Vec<&str> = line.split('\t').collect();
        if !(4..=5).contains(&fields.len()) {
            return Err(err(format!(
                "expected 4 or 5 fields, found {}",
                fields.len()
            )));
        }
        let class: WordClass = fields[2].parse().map_err(err)?;
        let tags = if fields[3] == "-" {
            Vec::new()
        } else {
            fields[3]
                .split('+')
                .map(|t| t.parse::<AttrTag>().map_err(|e| err(e.to_string())))
                .collect::<Result<_, _>>()?
        };
        if fields[0].is_empty() || fields[1].is_empty() {
            return Err(err("empty surface or lemma".into()));
        }
        rows.push(GoldRow {
            surface: fields[0].to_string(),
            analysis: VerbAnalysis {
                lemma: fields[1].to_string(),
                class,
                tags,
            },
            mecab_lemma: fields
                .get(4)
                .filter(|s| !s.is_empty())
                .map(|s| s.to_string()),
        });
    }
    Ok(rows)
}

pub fn load_gold(path: impl AsRef<Path>) -> Result<Vec<GoldRow>, EvalError> {
    parse_gold(&std::fs::read_to_string(path)?)
}

pub fn group_gold(rows: &[GoldRow], mode: EvalMode) -> Vec<GoldItem> {
    let mut items: Vec<GoldItem> = Vec::new();
    for row in rows {
        let existing = match mode {
            EvalMode::Token => items.last_mut().filter(|it| it.surface == row.surface),
            EvalMode::Type => items.iter_mut().find(|it| it.surface == row.surface),
        };
        match existing {
            Some(item) => {
                item.gold.insert(row.analysis.clone());
                if item.mecab_lemma.is_none() {
                    item.mecab_lemma = row.mecab_lemma.clone();
                }
            }
            None => items.push(GoldItem {
                surface: row.surface.clone(),
                gold: BTreeSet::from([row.analysis.clone()]),
                mecab_lemma: row.mecab_lemma.clone(),
            }),
        }
    }
    items
}

/// Pairs each gold item with what `analyze` produces for it.
pub fn judge(
    items: &[GoldItem],
    mut analyze: impl FnMut(&GoldItem) -> BTreeSet<VerbAnalysis>,
) -> Vec<JudgedItem> {
    items
        .iter()
        .map(|it| JudgedItem {
            surface: it.surface.clone(),
            produced: analyze(it),
            gold: it.gold.clone(),
        })
        .collect()
}

/// The built-in gold fixture of attested analyses.
pub fn builtin_gold() -> Vec<GoldRow> {
    parse_gold(include_str!("../data/gold.tsv")).expect("built-in gold file is valid")
}
