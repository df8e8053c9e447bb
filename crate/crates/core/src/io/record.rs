//! JSON records emitted by the command line.
//!
//! Every record is a struct (serialized in field order) or a `BTreeMap`, so
//! identical inputs produce byte-identical output. Wall-clock timings are the
//! only non-deterministic field and are written only when asked for.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use super::graph6::encode_graph6;
use crate::graph::Graph;
use crate::invariants::{self, InvariantReport, SolverBudget, SolverError};
use crate::recognizers::{self, RecognitionProfile};

/// Everything the `analyze` command knows about one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub invariants: InvariantReport,
    pub profile: RecognitionProfile,
    /// Microseconds per solver, present only when timing was requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<BTreeMap<&'static str, u64>>,
}

fn timed<T>(clock: &mut BTreeMap<&'static str, u64>, name: &'static str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    clock.insert(name, start.elapsed().as_micros() as u64);
    out
}

impl AnalysisRecord {
    pub fn compute(g: &Graph, budget: &SolverBudget, timing: bool) -> Result<AnalysisRecord, SolverError> {
        let mut clock = BTreeMap::new();
        let c = &mut clock;
        let (alpha, alpha_witness) = timed(c, "alpha", || invariants::alpha(g, budget))?;
        let (mu, matching) = timed(c, "mu", || invariants::mu(g));
        let (theta, clique_partition) = timed(c, "theta", || invariants::theta(g, budget))?;
        let (gamma, dominating_set) = timed(c, "gamma", || invariants::gamma(g, budget))?;
        let (ind_dom, ind_dom_witness) = timed(c, "ind_dom", || invariants::ind_dom(g, budget))?;
        let girth = timed(c, "girth", || g.girth());
        let profile = timed(c, "recognize", || recognizers::recognize(g, budget))?;
        Ok(AnalysisRecord {
            graph6: encode_graph6(g).expect("solver-sized graphs fit graph6"),
            n: g.order(),
            m: g.size(),
            invariants: InvariantReport {
                alpha,
                alpha_witness,
                mu,
                matching,
                theta,
                clique_partition,
                gamma,
                dominating_set,
                ind_dom,
                ind_dom_witness,
                girth,
            },
            profile,
            timing_us: timing.then_some(clock),
        })
    }
}
