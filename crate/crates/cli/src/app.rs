//! Command dispatch, returning output text and an exit code.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use fewlists_core::choosability::{is_f_choosable_exhaustive, s_exact, EXHAUSTIVE_GUARD_EDGES};
use fewlists_core::nullstellensatz::search::{coefficient_with, ENUMERATION_GUARD_EDGES};
use fewlists_core::pipeline::{analyze, Analysis, Options};
use fewlists_core::{Error, Multigraph};

use crate::dot::{self, What};
use crate::edgelist;
use crate::pool::Pool;
use crate::report::{self, OptionsEcho, OracleRun};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NO_MATCHING: i32 = 3;
pub const EXIT_GUARD: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "fewlists", version, about = "List sizes for edge choosability of cubic multigraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decompose, pick list sizes, and optionally certify and test them.
    Analyze {
        path: PathBuf,
        #[command(flatten)]
        common: Common,
        /// Compute the family sum and single coefficients.
        #[arg(long)]
        certify: bool,
        /// Run sampled and, on small components, exhaustive list colouring checks.
        #[arg(long)]
        oracle: bool,
        /// Sampled list assignments per component.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the JSON report.
        #[arg(long)]
        json: bool,
    },
    /// Coefficient of one monomial of the edge monomial.
    Coeff {
        path: PathBuf,
        /// File with one weight per edge.
        weights: PathBuf,
        #[arg(long, default_value_t = ENUMERATION_GUARD_EDGES)]
        guard_edges: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        json: bool,
    },
    /// Graphviz output.
    Dot {
        path: PathBuf,
        #[arg(long, value_enum)]
        what: What,
        #[arg(long)]
        root: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Root block of the first component.
    #[arg(long)]
    pub root: Option<usize>,
    /// Edge limit for labelling enumeration.
    #[arg(long, default_value_t = ENUMERATION_GUARD_EDGES)]
    pub guard_edges: usize,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, message: impl Into<String>) -> Self {
        Outcome { code, stdout: String::new(), stderr: message.into() + "\n" }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NoAdmissibleMatching { .. } => EXIT_NO_MATCHING,
        Error::SizeGuard { .. } => EXIT_GUARD,
        Error::Internal(_) | Error::ExponentNotInFamily | Error::NoOddCycle => EXIT_INTERNAL,
        _ => EXIT_INVALID,
    }
}

fn from_core(e: &Error) -> Outcome {
    Outcome::fail(exit_code(e), format!("error: {e}"))
}

fn read_graph(path: &Path) -> Result<Multigraph, Outcome> {
    let text = std::fs::read_to_string(path).map_err(|e| Outcome::fail(EXIT_INVALID, format!("error: {}: {e}", path.display())))?;
    edgelist::parse(&text).map_err(|e| Outcome::fail(EXIT_INVALID, format!("error: {}: {e}", path.display())))
}

fn oracle_runs(a: &Analysis, pool: &Pool, trials: u64, seed: u64) -> Result<Vec<Option<OracleRun>>, Error> {
    a.components
        .iter()
        .map(|c| {
            let random = pool.random_list_check(&c.graph, &c.f.values, trials, seed);
            let small = c.graph.edge_count() <= EXHAUSTIVE_GUARD_EDGES;
            let exhaustive_choosable = if small { Some(is_f_choosable_exhaustive(&c.graph, &c.f.values)?) } else { None };
            let s = if small { Some(s_exact(&c.graph, 3)?) } else { None };
            Ok(Some(OracleRun { random, exhaustive_choosable, s_exact: s }))
        })
        .collect()
}

pub fn run(cli: Cli) -> Outcome {
    match run_inner(cli) {
        Ok(o) | Err(o) => o,
    }
}

fn run_inner(cli: Cli) -> Result<Outcome, Outcome> {
    match cli.command {
        Command::Analyze { path, common, certify, oracle, trials, seed, json } => {
            let g = read_graph(&path)?;
            let pool = Pool::new(common.workers);
            let opts = Options { root: common.root, certify, guard_edges: common.guard_edges };
            let a = analyze(&g, &opts, &pool).map_err(|e| from_core(&e))?;
            let runs = if oracle { oracle_runs(&a, &pool, trials, seed).map_err(|e| from_core(&e))? } else { Vec::new() };
            let echo = OptionsEcho { root: common.root, certify, oracle, trials, seed, guard_edges: common.guard_edges };
            let r = report::build(&a, echo, &runs);
            Ok(Outcome::ok(if json { report::to_json(&r) } else { report::render_text(&r) }))
        }
        Command::Coeff { path, weights, guard_edges, workers, json } => {
            let g = read_graph(&path)?;
            let text = std::fs::read_to_string(&weights)
                .map_err(|e| Outcome::fail(EXIT_INVALID, format!("error: {}: {e}", weights.display())))?;
            let w = edgelist::parse_weights(&text).map_err(|e| Outcome::fail(EXIT_INVALID, format!("error: {}: {e}", weights.display())))?;
            let value = coefficient_with(&g, &w, &Pool::new(workers), guard_edges).map_err(|e| from_core(&e))?;
            let order: Vec<String> = g.edges().iter().enumerate().map(|(e, (u, v))| format!("{e}:{u}-{v}")).collect();
            Ok(Outcome::ok(if json {
                let body = serde_json::json!({
                    "schema": report::SCHEMA,
                    "coefficient": value.to_string(),
                    "weights": w,
                    "edge_order": g.edges(),
                });
                serde_json::to_string_pretty(&body).expect("serializes") + "\n"
            } else {
                format!("coefficient: {value}\nedge order: {}\n", order.join(" "))
            }))
        }
        Command::Dot { path, what, root } => {
            let g = read_graph(&path)?;
            let opts = Options { root, ..Options::default() };
            let a = analyze(&g, &opts, &Pool::new(1)).map_err(|e| from_core(&e))?;
            Ok(Outcome::ok(dot::render(&a, what)))
        }
    }
}

/// Parses `args` (program name first) and runs; usage errors exit with 2.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::fail(code, text.trim_end())
            }
        }
    }
}
