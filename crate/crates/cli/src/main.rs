use std::collections::BTreeSet;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use jmorph::eval::{evaluate, group_gold, judge, load_gold, EvalError, EvalMode};
use jmorph::filter::{filter, OrderingRules};
use jmorph::lexicon::{AttrTag, Lexicon};
use jmorph::noun::{analyze_noun, parse_line, PosRoleMap};
use jmorph::verb::{Grammar, GrammarError, VerbAnalysis};

#[derive(Parser)]
#[command(
    name = "jmorph",
    version,
    about = "Japanese morphological analyzer and generator"
)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Config {
    /// Lexicon TSV (lemma, reading, group[, flags]); defaults to the built-in seed.
    #[arg(long, global = true)]
    lexicon: Option<PathBuf>,
    /// Tagger pos_id to role map for noun lines.
    #[arg(long, global = true)]
    pos_map: Option<PathBuf>,
    /// Suffix ordering rules for the post-filter.
    #[arg(long, global = true)]
    rules: Option<PathBuf>,
    /// Print raw analyses without post-filtering.
    #[arg(long, global = true)]
    no_filter: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze `N#...$`, `V#surface[|lemma]$` and `A#surface[|lemma]$` lines from stdin.
    Analyze,
    /// Print every surface of LEMMA with TAGS applied in order.
    Generate { lemma: String, tags: Vec<String> },
    /// Score the analyzer against a gold TSV.
    Evaluate {
        gold: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Token)]
        eval_mode: Mode,
        /// Emit JSON lines instead of a table.
        #[arg(long)]
        jsonl: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Token,
    Type,
}

/// Configuration and usage failures, reported with exit status 2.
#[derive(Debug)]
struct Fatal(anyhow::Error);

impl std::fmt::Display for Fatal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for Fatal {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            let fatal = err.is::<Fatal>()
                || matches!(err.downcast_ref(), Some(GrammarError::UnknownLemma(_)))
                || matches!(err.downcast_ref(), Some(EvalError::EmptyEvalSet));
            eprintln!("error: {err:#}");
            ExitCode::from(if fatal { 2 } else { 1 })
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let Cli { config, command } = cli;
    let pipeline = Pipeline::load(&config).map_err(Fatal)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match command {
        Command::Analyze => pipeline.analyze_stream(io::stdin().lock(), &mut out)?,
        Command::Generate { lemma, tags } => {
            let tags = tags
                .iter()
                .map(|t| t.parse::<AttrTag>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Fatal(e.into()))?;
            for surface in pipeline.grammar.generate(&lemma, &tags)? {
                writeln!(out, "{surface}")?;
            }
            ExitCode::SUCCESS
        }
        Command::Evaluate {
            gold,
            eval_mode,
            jsonl,
        } => {
            let rows = load_gold(&gold)
                .with_context(|| format!("reading {}", gold.display()))
                .map_err(Fatal)?;
            let mode = match eval_mode {
                Mode::Token => EvalMode::Token,
                Mode::Type => EvalMode::Type,
            };
            let items = group_gold(&rows, mode);
            let judged = judge(&items, |it| {
                pipeline.analyze(&it.surface, it.mecab_lemma.as_deref())
            });
            let report = evaluate(&judged)?;
            if jsonl {
                write!(out, "{}", report.to_jsonl())?;
            } else {
                write!(out, "{}", report.to_table())?;
            }
            ExitCode::SUCCESS
        }
    };
    out.flush()?;
    Ok(code)
}

struct Pipeline {
    grammar: Grammar,
    roles: PosRoleMap,
    rules: Option<OrderingRules>,
}

impl Pipeline {
    fn load(config: &Config) -> Result<Self> {
        let lexicon = match &config.lexicon {
            Some(path) => {
                Lexicon::load(path).with_context(|| format!("loading {}", path.display()))?
            }
            None => Lexicon::seed(),
        };
        let roles = match &config.pos_map {
            Some(path) => {
                PosRoleMap::load(path).with_context(|| format!("loading {}", path.display()))?
            }
            None => PosRoleMap::default(),
        };
        let rules = match (&config.rules, config.no_filter) {
            (_, true) => None,
            (Some(path), false) => Some(
                OrderingRules::load(path).with_context(|| format!("loading {}", path.display()))?,
            ),
            (None, false) => Some(OrderingRules::default()),
        };
        Ok(Pipeline {
            grammar: Grammar::new(lexicon).context("compiling grammar")?,
            roles,
            rules,
        })
    }

    fn analyze(&self, surface: &str, lemma: Option<&str>) -> BTreeSet<VerbAnalysis> {
        let raw = self.grammar.analyze(surface);
        match &self.rules {
            Some(rules) => filter(&raw, lemma, rules),
            None => raw,
        }
    }

    /// Processes every line, reporting bad ones on stderr without stopping.
    fn analyze_stream(&self, input: impl BufRead, out: &mut impl Write) -> Result<ExitCode> {
        let mut failed = false;
        for (i, line) in input.lines().enumerate() {
            let line = line.context("reading stdin")?;
            if line.trim().is_empty() {
                continue;
            }
            match self.analyze_line(&line) {
                Ok(rows) => {
                    for row in rows {
                        writeln!(out, "{row}")?;
                    }
                }
                Err(err) => {
                    failed = true;
                    eprintln!("line {}: {err:#}", i + 1);
                }
            }
        }
        Ok(if failed {
            ExitCode::FAILURE
        } else {
            ExitCode::SUCCESS
        })
    }

    fn analyze_line(&self, line: &str) -> Result<Vec<String>> {
        let line = line.trim_end_matches('\r');
        if line.starts_with("N#") {
            let input = parse_line(line)?;
            return Ok(vec![analyze_noun(&input, &self.roles)?.to_string()]);
        }
        let (surface, lemma) = parse_word_line(line)?;
        let analyses = self.analyze(surface, lemma);
        if analyses.is_empty() {
            return Ok(vec![format!("{surface}\t?\t?\t?")]);
        }
        Ok(analyses.iter().map(|a| format!("{surface}\t{a}")).collect())
    }
}

/// `V#surface$` or `A#surface|lemma$`. The marker does not restrict the
/// class of the analyses.
fn parse_word_line(line: &str) -> Result<(&str, Option<&str>)> {
    let Some(body) = line.strip_prefix("V#").or_else(|| line.strip_prefix("A#")) else {
        bail!("column 1: expected `N#`, `V#` or `A#`");
    };
    let Some(body) = body.strip_suffix('$') else {
        bail!(
            "column {}: missing `$` terminator",
            line.chars().count() + 1
        );
    };
    let (surface, lemma) = match body.split_once('|') {
        Some((s, l)) => (s, Some(l)),
        None => (body, None),
    };
    if surface.is_empty() || surface.contains(char::is_whitespace) {
        bail!("column 3: expected a single surface form");
    }
    if lemma.is_some_and(|l| l.is_empty() || l.contains(['|', '$'])) {
        bail!(
            "column {}: malformed tagger lemma",
            surface.chars().count() + 4
        );
    }
    Ok((surface, lemma))
}
