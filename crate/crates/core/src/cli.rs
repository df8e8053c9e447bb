//! The `kesq` command line.
//!
//! Exit codes: 0 success, 1 a statement was violated or a control was not
//! refuted, 2 usage or parse error, 3 a solver budget ran out.

use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand};

use crate::graph::Graph;
use crate::harness::{self, RunOptions, Target};
use crate::invariants::SolverBudget;
use crate::io::{decode_graph6, encode_graph6, parse_edge_list, AnalysisRecord, GraphFamily};
use crate::recognizers;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "kesq",
    version,
    about = "Exact invariants and statement checks for square-stable graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit one JSON analysis record per input graph.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Include per-solver wall-clock microseconds (output is then not reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Emit one JSON recognition profile per input graph.
    Recognize {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Print the graph6 string of the second power of each input graph.
    Square {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Check statements over a graph family and emit one JSON verdict per statement.
    Verify {
        /// `all`, `controls`, or a comma-separated list of statement ids.
        #[arg(long, default_value = "all")]
        theorem: String,
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Worker threads.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// Print the graph6 strings of a family.
    Generate {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// List the statement and control ids understood by `verify`.
    List,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Read from this file instead of stdin.
    #[arg(long)]
    input: Option<String>,
    /// The input is a single edge list (`n m` header, then `u v` lines) instead of graph6 lines.
    #[arg(long)]
    edge_list: bool,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    #[arg(long, default_value_t = 10_000_000)]
    budget_nodes: u64,
    #[arg(long, default_value_t = 60.0)]
    budget_seconds: f64,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// Comma-separated family parts, e.g. `exhaustive:1-6,gnp:10:0.5:100,trees:12:50`.
    #[arg(long)]
    family: String,
    /// Keep only connected graphs.
    #[arg(long)]
    connected: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl BudgetArgs {
    fn budget(&self) -> Result<SolverBudget, String> {
        SolverBudget::new(self.budget_nodes, self.budget_seconds).map_err(|e| e.to_string())
    }
}

impl FamilyArgs {
    fn family(&self) -> Result<GraphFamily, String> {
        GraphFamily::parse(&self.family, self.seed, self.connected).map_err(|e| e.to_string())
    }
}

fn read_graphs(input: &InputArgs, stdin: &mut dyn BufRead) -> Result<Vec<Graph>, String> {
    let mut text = String::new();
    match &input.input {
        Some(path) => text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?,
        None => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
        }
    }
    if input.edge_list {
        return Ok(vec![parse_edge_list(&text).map_err(|e| e.to_string())?]);
    }
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| decode_graph6(l).map_err(|e| format!("line {}: {e}", i + 1)))
        .collect()
}

fn json_line<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

/// Runs the command line with explicit streams and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Usage(s)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn execute(
    command: Command,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let mut code = EXIT_OK;
    match command {
        Command::Analyze { input, budget, timing } => {
            let budget = budget.budget()?;
            for (i, g) in read_graphs(&input, stdin)?.iter().enumerate() {
                match AnalysisRecord::compute(g, &budget, timing) {
                    Ok(r) => json_line(out, &r)?,
                    Err(e) => {
                        writeln!(err, "graph {}: {e}", i + 1)?;
                        code = EXIT_BUDGET;
                    }
                }
            }
        }
        Command::Recognize { input, budget } => {
            let budget = budget.budget()?;
            for (i, g) in read_graphs(&input, stdin)?.iter().enumerate() {
                match recognizers::recognize(g, &budget) {
                    Ok(p) => {
                        if !p.exhausted.is_empty() {
                            code = EXIT_BUDGET;
                        }
                        json_line(out, &p)?;
                    }
                    Err(e) => {
                        writeln!(err, "graph {}: {e}", i + 1)?;
                        code = code.max(EXIT_USAGE);
                    }
                }
            }
        }
        Command::Square { input } => {
            for g in read_graphs(&input, stdin)? {
                writeln!(out, "{}", encode_graph6(&g.square()).map_err(|e| e.to_string())?)?;
            }
        }
        Command::Verify {
            theorem,
            family,
            budget,
            jobs,
        } => {
            let targets = Target::parse_list(&theorem)?;
            let family = family.family()?;
            let opts = RunOptions {
                budget: budget.budget()?,
                jobs: jobs as usize,
            };
            let verdicts = harness::verify(&targets, &family, &opts).map_err(|e| e.to_string())?;
            for v in &verdicts {
                json_line(out, v)?;
            }
            if verdicts.iter().any(|v| !v.as_expected()) {
                code = EXIT_VIOLATION;
            } else if verdicts.iter().any(|v| !v.complete) {
                code = EXIT_BUDGET;
            }
        }
        Command::Generate { family } => {
            let family = family.family()?;
            for g in family.graphs() {
                let g = g.map_err(|e| e.to_string())?;
                writeln!(out, "{}", encode_graph6(&g).map_err(|e| e.to_string())?)?;
            }
        }
        Command::List => {
            for t in Target::parse_list("all,controls")? {
                writeln!(out, "{:<32} {}", harness::Claim::id(&t), harness::Claim::summary(&t))?;
            }
        }
    }
    Ok(code)
}
