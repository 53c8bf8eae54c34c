//! The `wreathgen` command line.
//!
//! Exit status: 0 on success or `MATCH`, 1 when a computed value disagrees
//! with the expected one, 2 on a usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::constructions::{classic_generators, two_generators, ConstructionError, LemmaCase};
use crate::groups::{bsgs_order, closure, GroupSpec, DEFAULT_BUDGET};
use crate::perm::Permutation;
use crate::rank::{
    check_filter_pair_claim, rank_tower, table1, Computed, RankValue, TowerSpec,
    DEFAULT_EXACT_ORDER,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Default number of random trials per tuple size.
pub const DEFAULT_TRIALS: usize = 2_000;

#[derive(Debug, Parser)]
#[command(
    name = "wreathgen",
    version,
    about = "Generating sets of wreath products of symmetric and alternating groups"
)]
pub struct Cli {
    /// Emit JSON reports instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compose two permutations, left to right.
    Mul {
        p: String,
        q: String,
        #[arg(long)]
        degree: usize,
    },
    /// Check the order generated by a named classical generating set.
    VerifyLemma {
        #[arg(long = "case")]
        case: String,
        #[arg(long)]
        n: usize,
    },
    /// Print a minimal generating set of G wr S.
    Gens {
        #[arg(long)]
        base: GroupSpec,
        #[arg(long)]
        top: GroupSpec,
    },
    /// Compare the order generated by `gens` with |G|^n |S|.
    Order {
        #[arg(long)]
        base: GroupSpec,
        #[arg(long)]
        top: GroupSpec,
    },
    /// Minimal generating number of an iterated wreath product.
    Rank {
        /// Comma-separated factors, innermost first, e.g. S:3,S:3,A:2.
        #[arg(long)]
        tower: String,
        #[arg(long, default_value_t = DEFAULT_EXACT_ORDER)]
        exact_order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
    },
    /// Recompute the 16 x 6 table of d(G1 wr G2 wr G3).
    Table1 {
        #[arg(long, default_value_t = DEFAULT_EXACT_ORDER)]
        exact_order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        /// Write the JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that no (a; id) lies in a generating pair of G wr S.
    Footnote {
        #[arg(long)]
        base: GroupSpec,
        #[arg(long)]
        top: GroupSpec,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
}

/// JSON report of `rank`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    pub tower: String,
    pub order: String,
    pub computed: Computed,
    pub certificate: String,
    pub witness: Vec<String>,
}

/// JSON report of `gens`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GensReport {
    pub base: String,
    pub top: String,
    pub provenance: String,
    pub elements: Vec<String>,
    pub embedded: Vec<String>,
}

/// JSON report of `order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    pub base: String,
    pub top: String,
    pub generated: String,
    pub expected: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// JSON report of `verify-lemma`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub case: String,
    pub n: usize,
    pub expected_group: String,
    pub generated: String,
    pub expected: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command. Reports go
/// to `out`, diagnostics to `err`. Returns the exit status.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn emit(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(usage)?;
    writeln!(out, "{text}").map_err(usage)
}

fn status(matches: bool) -> i32 {
    if matches {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn verdict(matches: bool) -> &'static str {
    if matches {
        "MATCH"
    } else {
        "MISMATCH"
    }
}

fn run(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let io = |e: std::io::Error| usage(e);
    match &cli.command {
        Command::Mul { p, q, degree } => {
            let p = Permutation::parse_cycles(p, *degree).map_err(usage)?;
            let q = Permutation::parse_cycles(q, *degree).map_err(usage)?;
            let r = p.compose(&q).map_err(usage)?;
            if cli.json {
                emit(out, &json!({ "product": r.to_string(), "degree": degree }))?;
            } else {
                writeln!(out, "{r}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::VerifyLemma { case, n } => verify_lemma(case, *n, cli.json, out),
        Command::Gens { base, top } => {
            let set = two_generators(base, top).map_err(usage)?;
            let report = GensReport {
                base: base.to_string(),
                top: top.to_string(),
                provenance: set.provenance.to_string(),
                elements: set.elements.iter().map(ToString::to_string).collect(),
                embedded: set.embedded().iter().map(ToString::to_string).collect(),
            };
            if cli.json {
                emit(out, &report)?;
            } else {
                writeln!(out, "{} wr {} [{}]", base, top, report.provenance).map_err(io)?;
                for (e, p) in report.elements.iter().zip(&report.embedded) {
                    writeln!(out, "  {e}    {p}").map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Order { base, top } => {
            let set = two_generators(base, top).map_err(usage)?;
            let generated = set.generated_order();
            let expected = set.shape.order();
            let matches = generated == expected;
            if cli.json {
                emit(
                    out,
                    &OrderReport {
                        base: base.to_string(),
                        top: top.to_string(),
                        generated: generated.to_string(),
                        expected: expected.to_string(),
                        matches,
                    },
                )?;
            } else {
                writeln!(out, "{generated} / {expected} {}", verdict(matches)).map_err(io)?;
            }
            Ok(status(matches))
        }
        Command::Rank {
            tower,
            exact_order,
            seed,
            trials,
        } => {
            let spec: TowerSpec = tower.parse().map_err(usage)?;
            let result = rank_tower(&spec, *exact_order, *trials, *seed);
            let report = RankReport {
                tower: spec.to_string(),
                order: result.group_order.to_string(),
                computed: result.value.into(),
                certificate: result.certificate.to_string(),
                witness: result.witness.iter().map(ToString::to_string).collect(),
            };
            if cli.json {
                emit(out, &report)?;
            } else {
                let d = match result.value {
                    RankValue::Exact(d) => format!("d = {d}"),
                    RankValue::Bounds { lower, upper } => format!("{lower} <= d <= {upper}"),
                };
                writeln!(
                    out,
                    "{}  order {}  {}  {}",
                    report.tower, report.order, d, report.certificate
                )
                .map_err(io)?;
                for w in &report.witness {
                    writeln!(out, "  {w}").map_err(io)?;
                }
                if result.group_order == 1u32.into() {
                    writeln!(
                        out,
                        "note: the trivial group counts as 1-generated by convention"
                    )
                    .map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Table1 {
            exact_order,
            seed,
            trials,
            out: path,
        } => {
            let cells = table1(*exact_order, *trials, *seed);
            if let Some(path) = path {
                let text = serde_json::to_string_pretty(&cells).map_err(usage)?;
                fs::write(path, text + "\n")
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            if cli.json {
                emit(out, &cells)?;
            } else {
                for c in &cells {
                    let computed = match c.computed {
                        Computed::Exact { exact } => format!("{exact}"),
                        Computed::Bounds { lower, upper } => format!("[{lower},{upper}]"),
                    };
                    writeln!(
                        out,
                        "{:<10} {:<4} order {:>14}  table {}  computed {:<6} {:<24} {}",
                        c.row,
                        c.col,
                        c.order,
                        c.paper_value,
                        computed,
                        c.certificate.as_str(),
                        if c.agrees { "ok" } else { "DISAGREES" }
                    )
                    .map_err(io)?;
                }
            }
            Ok(status(cells.iter().all(|c| c.agrees)))
        }
        Command::Footnote { base, top, budget } => {
            let holds = check_filter_pair_claim(base, top, *budget).map_err(usage)?;
            if cli.json {
                emit(
                    out,
                    &json!({ "base": base.to_string(), "top": top.to_string(), "holds": holds }),
                )?;
            } else {
                let word = if holds { "holds" } else { "fails" };
                writeln!(
                    out,
                    "{base} wr {top}: no (a; id) lies in a generating pair: {word}"
                )
                .map_err(io)?;
            }
            Ok(status(holds))
        }
    }
}

fn verify_lemma(case: &str, n: usize, json: bool, out: &mut dyn Write) -> Outcome {
    let case: LemmaCase = case.parse().map_err(usage)?;
    let (gens, expected) = match classic_generators(case, n) {
        Ok(x) => x,
        Err(e @ ConstructionError::Excluded { .. }) => {
            let gens = case.raw_generators(n);
            let actual = closure(&gens)
                .map(|s| s.len().to_string())
                .unwrap_or_else(|e| e.to_string());
            return Err(usage(format!(
                "{e}; these generators give a group of order {actual}, not {}",
                case.expected(n).order()
            )));
        }
        Err(e) => return Err(usage(e)),
    };
    let generated = bsgs_order(n, &gens).map_err(usage)?;
    let matches = generated == expected.order();
    if json {
        emit(
            out,
            &LemmaReport {
                case: case.id().to_string(),
                n,
                expected_group: expected.to_string(),
                generated: generated.to_string(),
                expected: expected.order().to_string(),
                matches,
            },
        )?;
    } else {
        writeln!(
            out,
            "{} n={n}: {generated} / {} ({expected}) {}",
            case.id(),
            expected.order(),
            verdict(matches)
        )
        .map_err(usage)?;
    }
    Ok(status(matches))
}
