//! Command-line surface tying the modules together.
//!
//! One thin binary dispatches to the library: pair and graph
//! parameters, the two identity deciders, spectra, the growth-class
//! and undirected classifiers, the R-sequence, and bracketing
//! enumeration. Every subcommand prints a stable text form by default
//! and pretty JSON under `--format json`; exit codes are 0 for
//! success (and "identity satisfied"), 1 for "identity not satisfied",
//! 2 for usage or parse errors, and 3 for an exceeded oracle budget.

use crate::decision::{classify_dichotomy, classify_undirected, decide_identity, DecisionError};
use crate::digraph::{omega_g, Digraph};
use crate::oracle::{decide_identity_oracle, max_maps_from_env, OracleError};
use crate::pairparams::pair_params;
use crate::spectrum::{r_count, spectrum, Backend, RMethod, SpectrumError};
use crate::terms::{enumerate_dfs_trees, Bracketing, TermError};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Oracle,
    Theorem,
}

#[derive(Parser, Debug)]
#[command(
    name = "assoc-spectra",
    version,
    about = "Bracketing identities and associative spectra of graph algebras"
)]
struct Cli {
    /// Output format for results on standard output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Worker threads for spectrum computations; 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parameters of a pair of distinct bracketings.
    ParamsPair {
        /// First bracketing, e.g. "x1(x2x3)".
        t: String,
        /// Second bracketing, distinct from the first, same size.
        t_prime: String,
    },
    /// Structural parameters of a digraph.
    ParamsGraph {
        /// Graph file: "u -> v" lines or a DOT digraph.
        file: PathBuf,
        /// Also evaluate omega_G at this (L, R), 1 <= R <= L.
        #[arg(long, num_args = 2, value_names = ["L", "R"])]
        omega: Option<Vec<usize>>,
    },
    /// Decide t ~ t' on the graph algebra by the condition engine.
    Decide {
        file: PathBuf,
        t: String,
        t_prime: String,
    },
    /// Decide t ~ t' by brute-force homomorphism enumeration.
    OracleDecide {
        file: PathBuf,
        t: String,
        t_prime: String,
        /// Enumeration budget in assignments.
        #[arg(long, default_value_t = max_maps_from_env())]
        max_maps: u64,
    },
    /// Spectrum rows "n s_n" for n = 3..=N.
    Spectrum {
        file: PathBuf,
        /// Largest bracketing size to report.
        n: usize,
        #[arg(long, value_enum, default_value_t = BackendArg::Theorem)]
        backend: BackendArg,
        /// Also list the equivalence classes of each size.
        #[arg(long)]
        classes: bool,
        /// Enumeration budget for the oracle backend.
        #[arg(long, default_value_t = max_maps_from_env())]
        max_maps: u64,
    },
    /// Spectrum growth class: Constant1, Constant2, or Exponential.
    Classify { file: PathBuf },
    /// Identity class of a symmetric digraph.
    ClassifyUndirected { file: PathBuf },
    /// The R-word count |R_N|; a full table with ratios on request.
    Rseq {
        n: usize,
        /// Print all rows 2..=N with consecutive-ratio estimates.
        #[arg(long)]
        ratios: bool,
    },
    /// All bracketings of size N, one per line.
    Enumerate { n: usize },
}

/// A subcommand failure: an exit code with a message, or a silent exit
/// (stdout vanished mid-write; nobody is reading).
enum Failure {
    Msg(i32, String),
    Quiet(i32),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::Quiet(0)
        } else {
            Failure::Msg(2, e.to_string())
        }
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version land here too; those exit 0.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli, &mut io::stdout().lock()) {
        Ok(code) => code,
        Err(Failure::Quiet(code)) => code,
        Err(Failure::Msg(code, msg)) => {
            eprintln!("error: {msg}");
            code
        }
    }
}

fn load_graph(path: &Path) -> Result<Digraph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Msg(2, format!("{}: {e}", path.display())))?;
    Digraph::parse(&text).map_err(|e| Failure::Msg(2, format!("{}: {e}", path.display())))
}

fn parse_term(s: &str) -> Result<Bracketing, Failure> {
    s.parse()
        .map_err(|e: TermError| Failure::Msg(2, format!("term '{s}': {e}")))
}

fn emit_json<T: Serialize>(w: &mut impl Write, value: &T) -> io::Result<()> {
    writeln!(
        w,
        "{}",
        serde_json::to_string_pretty(value).expect("value serializes")
    )
}

fn decision_failure(e: DecisionError) -> Failure {
    Failure::Msg(2, e.to_string())
}

fn oracle_failure(e: OracleError) -> Failure {
    Failure::Msg(3, e.to_string())
}

fn spectrum_failure(e: SpectrumError) -> Failure {
    match e {
        SpectrumError::Budget(inner) => oracle_failure(inner),
        other => Failure::Msg(2, other.to_string()),
    }
}

fn execute(cli: Cli, w: &mut impl Write) -> Result<i32, Failure> {
    match cli.command {
        Command::ParamsPair { t, t_prime } => {
            let (a, b) = (parse_term(&t)?, parse_term(&t_prime)?);
            let p = pair_params(&a, &b).map_err(|e| Failure::Msg(2, e.to_string()))?;
            match cli.format {
                Format::Table => writeln!(w, "{p}")?,
                Format::Json => emit_json(w, &p)?,
            }
            Ok(0)
        }
        Command::ParamsGraph { file, omega } => {
            let g = load_graph(&file)?;
            let params = g.params();
            let omega_value = match &omega {
                None => None,
                Some(lr) => {
                    let (l, r) = (lr[0], lr[1]);
                    let v = omega_g(&g, l, r).map_err(|e| Failure::Msg(2, e.to_string()))?;
                    Some((l, r, v))
                }
            };
            match cli.format {
                Format::Table => {
                    writeln!(w, "{params}")?;
                    if let Some((l, r, v)) = omega_value {
                        writeln!(w, "omega_G({l},{r}) = {v}")?;
                    }
                }
                Format::Json => {
                    let mut doc = serde_json::to_value(params).expect("params serialize");
                    if let Some((l, r, v)) = omega_value {
                        doc.as_object_mut().expect("params form an object").insert(
                            "omega_g".to_string(),
                            serde_json::json!({ "l": l, "r": r, "value": v }),
                        );
                    }
                    emit_json(w, &doc)?;
                }
            }
            Ok(0)
        }
        Command::Decide { file, t, t_prime } => {
            let g = load_graph(&file)?;
            let (a, b) = (parse_term(&t)?, parse_term(&t_prime)?);
            let d = decide_identity(&g, &a, &b).map_err(decision_failure)?;
            match cli.format {
                Format::Table => writeln!(w, "{d}")?,
                Format::Json => emit_json(w, &d)?,
            }
            Ok(if d.satisfied { 0 } else { 1 })
        }
        Command::OracleDecide {
            file,
            t,
            t_prime,
            max_maps,
        } => {
            let g = load_graph(&file)?;
            let (a, b) = (parse_term(&t)?, parse_term(&t_prime)?);
            if a.n() != b.n() {
                return Err(Failure::Msg(
                    2,
                    format!(
                        "bracketings have different sizes: {} vs {} leaves",
                        a.n(),
                        b.n()
                    ),
                ));
            }
            let satisfied = decide_identity_oracle(&g, &a, &b, max_maps).map_err(oracle_failure)?;
            match cli.format {
                Format::Table => {
                    writeln!(w, "satisfied: {}", if satisfied { "yes" } else { "no" })?
                }
                Format::Json => emit_json(w, &serde_json::json!({ "satisfied": satisfied }))?,
            }
            Ok(if satisfied { 0 } else { 1 })
        }
        Command::Spectrum {
            file,
            n,
            backend,
            classes,
            max_maps,
        } => {
            if n < 3 {
                return Err(Failure::Msg(
                    2,
                    format!("spectrum tables start at n = 3, got {n}"),
                ));
            }
            let g = load_graph(&file)?;
            let backend = match backend {
                BackendArg::Oracle => Backend::Oracle,
                BackendArg::Theorem => Backend::Theorem,
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cli.jobs)
                .build()
                .map_err(|e| Failure::Msg(2, e.to_string()))?;
            let reports = pool
                .install(|| {
                    (3..=n)
                        .map(|k| spectrum(&g, k, backend, max_maps))
                        .collect::<Result<Vec<_>, _>>()
                })
                .map_err(spectrum_failure)?;
            match cli.format {
                Format::Table => {
                    for rep in &reports {
                        writeln!(w, "{} {}", rep.n, rep.s_n)?;
                        if classes {
                            for (i, class) in rep.classes.iter().enumerate() {
                                writeln!(w, "  class {}: {}", i + 1, class.join(" "))?;
                            }
                        }
                    }
                }
                Format::Json => emit_json(w, &reports)?,
            }
            Ok(0)
        }
        Command::Classify { file } => {
            let g = load_graph(&file)?;
            let class = classify_dichotomy(&g);
            match cli.format {
                Format::Table => writeln!(w, "{class}")?,
                Format::Json => emit_json(w, &class)?,
            }
            Ok(0)
        }
        Command::ClassifyUndirected { file } => {
            let g = load_graph(&file)?;
            let class = classify_undirected(&g).map_err(decision_failure)?;
            match cli.format {
                Format::Table => writeln!(w, "{class}")?,
                Format::Json => emit_json(w, &class)?,
            }
            Ok(0)
        }
        Command::Rseq { n, ratios } => {
            let rows = if ratios { 2..=n } else { n..=n };
            let mut out: Vec<RseqRow> = Vec::new();
            let mut prev: Option<u64> = None;
            for k in rows {
                let count = r_count(k, RMethod::Recurrence).map_err(spectrum_failure)?;
                let ratio = if ratios {
                    prev.map(|p| count as f64 / p as f64)
                } else {
                    None
                };
                out.push(RseqRow { n: k, count, ratio });
                prev = Some(count);
            }
            match cli.format {
                Format::Table => {
                    for row in &out {
                        match row.ratio {
                            Some(q) => writeln!(w, "{} {} {:.6}", row.n, row.count, q)?,
                            None if ratios => writeln!(w, "{} {} -", row.n, row.count)?,
                            None => writeln!(w, "{} {}", row.n, row.count)?,
                        }
                    }
                }
                Format::Json => emit_json(w, &out)?,
            }
            Ok(0)
        }
        Command::Enumerate { n } => {
            if n == 0 || n > 16 {
                return Err(Failure::Msg(
                    2,
                    format!("enumeration covers 1 <= n <= 16 (Catalan growth), got {n}"),
                ));
            }
            match cli.format {
                Format::Table => {
                    for t in enumerate_dfs_trees(n) {
                        writeln!(w, "{}", t.bracketing())?;
                    }
                }
                Format::Json => {
                    let terms: Vec<String> = enumerate_dfs_trees(n)
                        .map(|t| t.bracketing().to_string())
                        .collect();
                    emit_json(w, &terms)?;
                }
            }
            Ok(0)
        }
    }
}

/// One row of `rseq` output.
#[derive(Debug, Serialize)]
struct RseqRow {
    n: usize,
    count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    ratio: Option<f64>,
}
