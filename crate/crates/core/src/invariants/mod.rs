//! Exact solvers for the graph invariants: stability number, matching
//! number, clique cover number, domination and independent domination
//! numbers, the family of maximum stable sets and its core, simplicial
//! vertices and simplexes.
//!
//! The NP-hard solvers are branch-and-bound searches over `u128` vertex
//! masks, so they accept graphs with at most [`MAX_SOLVER_ORDER`] vertices.
//! Every search explores vertices in ascending id with the "include" branch
//! first and only accepts strict improvements, which makes the returned
//! witness the lexicographically least optimum.

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Girth, Graph, VertexSet};

mod cliques;
mod cover;
mod domination;
mod matching;
mod stable;

pub use cliques::{maximal_cliques, simplexes, simplicial_vertices};
pub use cover::theta;
pub use domination::gamma;
pub use matching::{count_perfect_matchings, mu, Matching};
pub(crate) use stable::visit_maximum_stable;
pub use stable::{
    alpha, core_set, core_set_with_cap, enumerate_maximal_stable_sets, ind_dom, omega_family,
    smaller_maximal_stable_set, DEFAULT_OMEGA_CAP,
};

/// Largest order the mask-based exact solvers accept.
pub const MAX_SOLVER_ORDER: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("solver budget exhausted after {nodes} search nodes")]
    BudgetExhausted { nodes: u64 },
    #[error("graph has {n} vertices; exact solvers accept at most {MAX_SOLVER_ORDER}")]
    TooLarge { n: usize },
    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BudgetError {
    #[error("node budget must be positive")]
    ZeroNodes,
    #[error("time budget must be a positive number of seconds, got {0}")]
    BadSeconds(f64),
}

/// Resource caps for one solver call.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverBudget {
    max_nodes: u64,
    max_time: Duration,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget {
            max_nodes: 10_000_000,
            max_time: Duration::from_secs(60),
        }
    }
}

impl SolverBudget {
    pub fn new(max_nodes: u64, max_seconds: f64) -> Result<Self, BudgetError> {
        if max_nodes == 0 {
            return Err(BudgetError::ZeroNodes);
        }
        if !(max_seconds.is_finite() && max_seconds > 0.0) {
            return Err(BudgetError::BadSeconds(max_seconds));
        }
        Ok(SolverBudget {
            max_nodes,
            max_time: Duration::from_secs_f64(max_seconds),
        })
    }

    pub fn max_nodes(&self) -> u64 {
        self.max_nodes
    }

    pub fn max_time(&self) -> Duration {
        self.max_time
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter {
            max_nodes: self.max_nodes,
            deadline: Instant::now().checked_add(self.max_time),
            nodes: 0,
        }
    }
}

/// Per-call search-node and wall-clock accounting.
pub(crate) struct Meter {
    max_nodes: u64,
    deadline: Option<Instant>,
    nodes: u64,
}

impl Meter {
    pub(crate) fn unlimited() -> Meter {
        Meter {
            max_nodes: u64::MAX,
            deadline: None,
            nodes: 0,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), SolverError> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(SolverError::BudgetExhausted { nodes: self.nodes });
        }
        if self.nodes & 0x3ff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    return Err(SolverError::BudgetExhausted { nodes: self.nodes });
                }
            }
        }
        Ok(())
    }
}

pub(crate) type Mask = u128;

#[inline]
pub(crate) fn bit(v: usize) -> Mask {
    1 << v
}

#[inline]
pub(crate) fn lowest(m: Mask) -> usize {
    m.trailing_zeros() as usize
}

pub(crate) fn full_mask(n: usize) -> Mask {
    if n == 128 {
        Mask::MAX
    } else {
        bit(n) - 1
    }
}

pub(crate) fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = lowest(m);
            m &= m - 1;
            Some(v)
        }
    })
}

pub(crate) fn mask_to_set(n: usize, m: Mask) -> VertexSet {
    VertexSet::from_members(n, bits(m))
}

/// Open-neighborhood masks, one per vertex.
pub(crate) fn adjacency_masks(g: &Graph) -> Result<Vec<Mask>, SolverError> {
    if g.order() > MAX_SOLVER_ORDER {
        return Err(SolverError::TooLarge { n: g.order() });
    }
    Ok((0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | bit(w)))
        .collect())
}

pub(crate) fn require_vertices(g: &Graph) -> Result<(), SolverError> {
    if g.order() == 0 {
        Err(SolverError::EmptyGraph)
    } else {
        Ok(())
    }
}

/// Exact invariant values with one certifying witness each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub alpha: usize,
    pub alpha_witness: VertexSet,
    pub mu: usize,
    pub matching: Matching,
    pub theta: usize,
    pub clique_partition: Vec<VertexSet>,
    pub gamma: usize,
    pub dominating_set: VertexSet,
    pub ind_dom: usize,
    pub ind_dom_witness: VertexSet,
    pub girth: Girth,
}

impl InvariantReport {
    /// Each solver call gets its own copy of `budget`.
    pub fn compute(g: &Graph, budget: &SolverBudget) -> Result<Self, SolverError> {
        let (alpha, alpha_witness) = alpha(g, budget)?;
        let (mu, matching) = mu(g);
        let (theta, clique_partition) = theta(g, budget)?;
        let (gamma, dominating_set) = gamma(g, budget)?;
        let (ind_dom, ind_dom_witness) = ind_dom(g, budget)?;
        Ok(InvariantReport {
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
            girth: g.girth(),
        })
    }

    /// Re-validates every witness against `g` without trusting the solvers.
    pub fn certify(&self, g: &Graph) -> Result<(), String> {
        let n = g.order();
        if self.alpha_witness.len() != self.alpha || !g.is_stable(&self.alpha_witness) {
            return Err("alpha witness is not a stable set of the claimed size".into());
        }
        if self.matching.len() != self.mu || !self.matching.is_valid_in(g) {
            return Err("matching witness is invalid".into());
        }
        let mut covered = VertexSet::empty(n);
        for clique in &self.clique_partition {
            if clique.is_empty() || !g.is_clique(clique) {
                return Err("clique partition contains a non-clique".into());
            }
            for v in clique.iter() {
                if !covered.insert(v) {
                    return Err(format!("vertex {v} covered twice"));
                }
            }
        }
        if self.clique_partition.len() != self.theta || covered.len() != n {
            return Err("clique partition does not cover the vertex set".into());
        }
        if self.dominating_set.len() != self.gamma || !is_dominating(g, &self.dominating_set) {
            return Err("dominating witness does not dominate".into());
        }
        if self.ind_dom_witness.len() != self.ind_dom || !is_maximal_stable(g, &self.ind_dom_witness) {
            return Err("independent domination witness is not maximal stable".into());
        }
        Ok(())
    }
}

pub fn is_dominating(g: &Graph, set: &VertexSet) -> bool {
    (0..g.order()).all(|v| set.contains(v) || g.neighbors(v).iter().any(|&w| set.contains(w)))
}

pub fn is_maximal_stable(g: &Graph, set: &VertexSet) -> bool {
    g.is_stable(set) && is_dominating(g, set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_validation() {
        assert_eq!(SolverBudget::new(0, 1.0), Err(BudgetError::ZeroNodes));
        assert!(matches!(SolverBudget::new(5, 0.0), Err(BudgetError::BadSeconds(_))));
        assert!(matches!(
            SolverBudget::new(5, f64::NAN),
            Err(BudgetError::BadSeconds(_))
        ));
        let b = SolverBudget::default();
        assert_eq!(b.max_nodes(), 10_000_000);
        assert_eq!(b.max_time(), Duration::from_secs(60));
    }

    #[test]
    fn exhausted_budget_is_an_error_not_an_answer() {
        let tiny = SolverBudget::new(3, 10.0).unwrap();
        let g = Graph::cycle(9);
        assert!(matches!(alpha(&g, &tiny), Err(SolverError::BudgetExhausted { .. })));
        assert!(matches!(theta(&g, &tiny), Err(SolverError::BudgetExhausted { .. })));
        assert!(matches!(gamma(&g, &tiny), Err(SolverError::BudgetExhausted { .. })));
        assert!(matches!(ind_dom(&g, &tiny), Err(SolverError::BudgetExhausted { .. })));
        assert!(matches!(
            omega_family(&g, &tiny),
            Err(SolverError::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn oversized_graphs_are_rejected() {
        let g = Graph::path(MAX_SOLVER_ORDER + 1);
        assert_eq!(
            alpha(&g, &SolverBudget::default()),
            Err(SolverError::TooLarge {
                n: MAX_SOLVER_ORDER + 1
            })
        );
        // matching has no order cap
        assert_eq!(mu(&g).0, 64);
    }

    #[test]
    fn report_certifies_itself() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4), (0, 4)]).unwrap();
        let r = InvariantReport::compute(&g, &SolverBudget::default()).unwrap();
        r.certify(&g).unwrap();
        assert_eq!((r.alpha, r.mu, r.theta, r.gamma, r.ind_dom), (2, 2, 2, 2, 2));
    }
}
