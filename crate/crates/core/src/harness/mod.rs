//! Checks statements about square-stable graphs over graph families.
//!
//! Each graph of a family is analyzed once; every selected claim reads from
//! the same lazily filled [`Facts`]. A graph whose solvers run out of budget
//! is counted as skipped and makes the verdict incomplete, never failed.

mod facts;
mod statements;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use facts::Facts;
pub use statements::{check, pendant_transversals, Claim, Control, Evaluation, Outcome, Statement};

use crate::graph::Graph;
use crate::invariants::{SolverBudget, SolverError};
use crate::io::{decode_graph6, encode_graph6, FamilyError, Graph6Error, GraphFamily};

/// A statement or a planted control.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Statement(Statement),
    Control(Control),
}

impl Target {
    pub fn planted(&self) -> bool {
        matches!(self, Target::Control(_))
    }

    fn claim(&self) -> &dyn Claim {
        match self {
            Target::Statement(s) => s,
            Target::Control(c) => c,
        }
    }

    /// Parses `all`, `controls`, or a comma-separated list of ids.
    pub fn parse_list(text: &str) -> Result<Vec<Target>, String> {
        let mut out = Vec::new();
        for id in text.split(',').map(str::trim) {
            match id {
                "all" => out.extend(Statement::ALL.map(Target::Statement)),
                "controls" => out.extend(Control::ALL.map(Target::Control)),
                _ => out.push(
                    Statement::from_id(id)
                        .map(Target::Statement)
                        .or_else(|| Control::from_id(id).map(Target::Control))
                        .ok_or_else(|| format!("unknown theorem id `{id}`"))?,
                ),
            }
        }
        let mut seen = std::collections::HashSet::new();
        out.retain(|t| seen.insert(*t));
        Ok(out)
    }
}

impl Claim for Target {
    fn id(&self) -> &'static str {
        self.claim().id()
    }

    fn summary(&self) -> &'static str {
        self.claim().summary()
    }

    fn applies(&self, f: &Facts) -> Result<bool, SolverError> {
        self.claim().applies(f)
    }

    fn evaluate(&self, f: &Facts) -> Result<Evaluation, SolverError> {
        self.claim().evaluate(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub conditions: BTreeMap<String, bool>,
    pub values: BTreeMap<String, usize>,
    /// Decoding `graph6` and checking from scratch reproduces the violation.
    pub reverified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub theorem: String,
    pub summary: String,
    /// Planted controls are known to be false; for them a failed verdict is
    /// the expected result.
    pub planted: bool,
    pub family: String,
    pub seed: u64,
    pub graphs_seen: u64,
    pub graphs_checked: u64,
    pub graphs_skipped: u64,
    pub violations: u64,
    pub passed: bool,
    pub complete: bool,
    /// The violation with the lexicographically least graph6 string.
    pub counterexample: Option<Counterexample>,
}

impl TheoremVerdict {
    /// A statement holds, or a control was refuted.
    pub fn as_expected(&self) -> bool {
        self.passed != self.planted
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    pub budget: SolverBudget,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            budget: SolverBudget::default(),
            jobs: 1,
        }
    }
}

#[derive(Debug, Error)]
pub enum RecheckError {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// Checks one claim on a graph given as graph6, from scratch.
pub fn recheck(claim: &dyn Claim, graph6: &str, budget: &SolverBudget) -> Result<Outcome, RecheckError> {
    let g = decode_graph6(graph6)?;
    Ok(check(claim, &Facts::new(&g, budget))?)
}

#[derive(Default)]
struct Tally {
    seen: u64,
    checked: u64,
    skipped: u64,
    violations: u64,
    worst: Option<(String, Graph, Evaluation)>,
}

impl Tally {
    fn absorb(&mut self, g: &Graph, outcome: Result<Outcome, SolverError>) {
        self.seen += 1;
        match outcome {
            Ok(Outcome::NotApplicable) => {}
            Ok(Outcome::Holds) => self.checked += 1,
            Ok(Outcome::Violated(e)) => {
                self.checked += 1;
                self.violations += 1;
                let s = encode_graph6(g).expect("solver-sized graphs fit graph6");
                if self.worst.as_ref().is_none_or(|(w, _, _)| s < *w) {
                    self.worst = Some((s, g.clone(), e));
                }
            }
            Err(_) => self.skipped += 1,
        }
    }
}

const BATCH: usize = 2048;

/// Runs every target over `family` in one pass.
pub fn verify(targets: &[Target], family: &GraphFamily, opts: &RunOptions) -> Result<Vec<TheoremVerdict>, FamilyError> {
    verify_stream(targets, family.graphs(), &family.to_string(), family.seed(), opts)
}

/// Runs every target over an arbitrary stream; `label` and `seed` are only
/// copied into the verdicts.
pub fn verify_stream<I>(
    targets: &[Target],
    graphs: I,
    label: &str,
    seed: u64,
    opts: &RunOptions,
) -> Result<Vec<TheoremVerdict>, FamilyError>
where
    I: IntoIterator<Item = Result<Graph, FamilyError>>,
{
    let budget = opts.budget;
    let pool = if opts.jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.jobs)
                .build()
                .expect("thread pool"),
        )
    } else {
        None
    };
    let analyze = |g: &Graph| -> Vec<Result<Outcome, SolverError>> {
        let facts = Facts::new(g, &budget);
        targets.iter().map(|t| check(t, &facts)).collect()
    };
    let mut tallies = targets.iter().map(|_| Tally::default()).collect::<Vec<_>>();
    let mut stream = graphs.into_iter();
    loop {
        let batch = stream.by_ref().take(BATCH).collect::<Result<Vec<Graph>, _>>()?;
        if batch.is_empty() {
            break;
        }
        let results = match &pool {
            Some(p) => p.install(|| batch.par_iter().map(analyze).collect::<Vec<_>>()),
            None => batch.iter().map(analyze).collect(),
        };
        for (g, per_target) in batch.iter().zip(results) {
            for (tally, outcome) in tallies.iter_mut().zip(per_target) {
                tally.absorb(g, outcome);
            }
        }
    }
    Ok(targets
        .iter()
        .zip(tallies)
        .map(|(t, tally)| {
            let counterexample = tally.worst.map(|(graph6, g, e)| {
                let reverified = matches!(recheck(t, &graph6, &budget), Ok(Outcome::Violated(_)));
                Counterexample {
                    graph6,
                    n: g.order(),
                    edges: g.edges().to_vec(),
                    conditions: e.conditions,
                    values: e.values,
                    reverified,
                }
            });
            TheoremVerdict {
                theorem: t.id().to_string(),
                summary: t.summary().to_string(),
                planted: t.planted(),
                family: label.to_string(),
                seed,
                graphs_seen: tally.seen,
                graphs_checked: tally.checked,
                graphs_skipped: tally.skipped,
                violations: tally.violations,
                passed: tally.violations == 0,
                complete: tally.skipped == 0,
                counterexample,
            }
        })
        .collect())
}

/// Families on which each control must find its counterexample.
pub fn control_family(c: Control) -> &'static str {
    match c {
        Control::WellCoveredIsSquareStable => "exhaustive:1-4",
        Control::UniquePerfectMatchingIsSquareStable | Control::UniqueSquareMaximumIsSquareStable => "exhaustive:1-6",
        Control::IndependentDominationAtMostGamma => "exhaustive:1-6",
    }
}

/// Runs every planted control over its search family.
pub fn run_negative_controls(opts: &RunOptions) -> Vec<TheoremVerdict> {
    Control::ALL
        .into_iter()
        .map(|c| {
            let family = GraphFamily::parse(control_family(c), 0, false).expect("valid family");
            verify(&[Target::Control(c)], &family, opts)
                .expect("exhaustive families cannot fail")
                .remove(0)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn target_lists() {
        assert_eq!(Target::parse_list("all").unwrap().len(), Statement::ALL.len());
        assert_eq!(
            Target::parse_list("trees,controls,trees").unwrap().len(),
            1 + Control::ALL.len()
        );
        assert!(Target::parse_list("nope").is_err());
    }

    #[test]
    fn verdict_counts_and_counterexample() {
        let family = GraphFamily::parse("exhaustive:1-4", 0, false).unwrap();
        let v = verify(
            &[Target::Control(Control::WellCoveredIsSquareStable)],
            &family,
            &RunOptions::default(),
        )
        .unwrap();
        let v = &v[0];
        assert_eq!(v.graphs_seen, 1 + 2 + 8 + 64);
        assert!(!v.passed && v.as_expected());
        let ce = v.counterexample.as_ref().unwrap();
        assert!(ce.reverified);
        // every refutation on four vertices or fewer is a labeled C4
        assert_eq!(ce.n, 4);
        assert!(decode_graph6(&ce.graph6).unwrap().is_cycle_of_length(4));
    }

    #[test]
    fn parallel_run_matches_sequential() {
        let family = GraphFamily::parse("exhaustive:5,gnp:8:0.5:50", 3, true).unwrap();
        let targets = Target::parse_list("all").unwrap();
        let a = verify(&targets, &family, &RunOptions::default()).unwrap();
        let b = verify(
            &targets,
            &family,
            &RunOptions {
                jobs: 3,
                ..RunOptions::default()
            },
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn exhausted_budget_is_skipped_not_failed() {
        let family = GraphFamily::parse("exhaustive:5", 0, true).unwrap();
        let opts = RunOptions {
            budget: SolverBudget::new(1, 10.0).unwrap(),
            jobs: 1,
        };
        let v = verify(&[Target::Statement(Statement::InequalityChain)], &family, &opts).unwrap();
        assert!(v[0].passed);
        assert!(!v[0].complete);
        assert!(v[0].graphs_skipped > 0);
    }
}
