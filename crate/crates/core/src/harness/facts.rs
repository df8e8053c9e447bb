use std::cell::OnceCell;

use crate::graph::{Girth, Graph, VertexSet};
use crate::invariants::{self, Matching, SolverBudget, SolverError};
use crate::recognizers::{self, WellCovered};

type Cached<T> = OnceCell<Result<T, SolverError>>;

fn cached<T: Clone>(cell: &Cached<T>, f: impl FnOnce() -> Result<T, SolverError>) -> Result<T, SolverError> {
    cell.get_or_init(f).clone()
}

/// Everything a statement may ask about one graph, each value computed at
/// most once. Every solver call gets a fresh copy of the budget.
pub struct Facts<'g> {
    g: &'g Graph,
    budget: SolverBudget,
    square: OnceCell<Graph>,
    alpha: Cached<(usize, VertexSet)>,
    alpha_sq: Cached<usize>,
    mu: OnceCell<usize>,
    mu_sq: OnceCell<usize>,
    theta: Cached<usize>,
    theta_sq: Cached<usize>,
    gamma: Cached<usize>,
    ind_dom: Cached<usize>,
    well_covered: Cached<WellCovered>,
    omega_sq: Cached<Vec<VertexSet>>,
    core: Cached<VertexSet>,
    simplex_partition: Cached<bool>,
    distance3: Cached<bool>,
    simp: OnceCell<VertexSet>,
    pendant_pm: OnceCell<Option<Matching>>,
    perfect_matchings: OnceCell<usize>,
    connected: OnceCell<bool>,
}

impl<'g> Facts<'g> {
    pub fn new(g: &'g Graph, budget: &SolverBudget) -> Facts<'g> {
        Facts {
            g,
            budget: *budget,
            square: OnceCell::new(),
            alpha: OnceCell::new(),
            alpha_sq: OnceCell::new(),
            mu: OnceCell::new(),
            mu_sq: OnceCell::new(),
            theta: OnceCell::new(),
            theta_sq: OnceCell::new(),
            gamma: OnceCell::new(),
            ind_dom: OnceCell::new(),
            well_covered: OnceCell::new(),
            omega_sq: OnceCell::new(),
            core: OnceCell::new(),
            simplex_partition: OnceCell::new(),
            distance3: OnceCell::new(),
            simp: OnceCell::new(),
            pendant_pm: OnceCell::new(),
            perfect_matchings: OnceCell::new(),
            connected: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn budget(&self) -> &SolverBudget {
        &self.budget
    }

    pub fn n(&self) -> usize {
        self.g.order()
    }

    pub fn connected(&self) -> bool {
        *self.connected.get_or_init(|| self.g.is_connected())
    }

    pub fn square(&self) -> &Graph {
        self.square.get_or_init(|| self.g.square())
    }

    pub fn alpha(&self) -> Result<usize, SolverError> {
        Ok(self.alpha_witness()?.0)
    }

    pub fn alpha_witness(&self) -> Result<(usize, VertexSet), SolverError> {
        cached(&self.alpha, || invariants::alpha(self.g, &self.budget))
    }

    pub fn alpha_sq(&self) -> Result<usize, SolverError> {
        cached(&self.alpha_sq, || Ok(invariants::alpha(self.square(), &self.budget)?.0))
    }

    pub fn mu(&self) -> usize {
        *self.mu.get_or_init(|| invariants::mu(self.g).0)
    }

    pub fn mu_sq(&self) -> usize {
        *self.mu_sq.get_or_init(|| invariants::mu(self.square()).0)
    }

    pub fn theta(&self) -> Result<usize, SolverError> {
        cached(&self.theta, || Ok(invariants::theta(self.g, &self.budget)?.0))
    }

    pub fn theta_sq(&self) -> Result<usize, SolverError> {
        cached(&self.theta_sq, || Ok(invariants::theta(self.square(), &self.budget)?.0))
    }

    pub fn gamma(&self) -> Result<usize, SolverError> {
        cached(&self.gamma, || Ok(invariants::gamma(self.g, &self.budget)?.0))
    }

    pub fn ind_dom(&self) -> Result<usize, SolverError> {
        cached(&self.ind_dom, || Ok(invariants::ind_dom(self.g, &self.budget)?.0))
    }

    pub fn square_stable(&self) -> Result<bool, SolverError> {
        Ok(self.alpha()? == self.alpha_sq()?)
    }

    pub fn ke(&self) -> Result<bool, SolverError> {
        Ok(self.alpha()? + self.mu() == self.n())
    }

    pub fn square_ke(&self) -> Result<bool, SolverError> {
        Ok(self.alpha_sq()? + self.mu_sq() == self.n())
    }

    pub fn has_perfect_matching(&self) -> bool {
        2 * self.mu() == self.n()
    }

    pub fn well_covered(&self) -> Result<bool, SolverError> {
        let alpha = self.alpha()?;
        cached(&self.well_covered, || {
            recognizers::well_covered_given_alpha(self.g, alpha, &self.budget)
        })
        .map(|w| w.holds())
    }

    pub fn very_well_covered(&self) -> Result<bool, SolverError> {
        Ok(self.well_covered()? && self.g.isolated_vertices().is_empty() && self.n() == 2 * self.alpha()?)
    }

    pub fn simplicial_vertices(&self) -> &VertexSet {
        self.simp.get_or_init(|| invariants::simplicial_vertices(self.g))
    }

    /// Every vertex is simplicial or adjacent to a simplicial vertex.
    pub fn simplicial_graph(&self) -> bool {
        let simp = self.simplicial_vertices();
        (0..self.n()).all(|v| simp.contains(v) || self.g.neighbors(v).iter().any(|&w| simp.contains(w)))
    }

    pub fn simplex_partition(&self) -> Result<bool, SolverError> {
        cached(&self.simplex_partition, || {
            recognizers::vertex_in_exactly_one_simplex(self.g)
        })
    }

    /// Some maximum stable set of `G` has pairwise distances at least 3.
    pub fn distance3_maximum_stable_set(&self) -> Result<bool, SolverError> {
        cached(&self.distance3, || {
            Ok(recognizers::has_distance3_maximum_stable_set(self.g, &self.budget)?.is_some())
        })
    }

    pub fn omega_sq(&self) -> Result<Vec<VertexSet>, SolverError> {
        cached(&self.omega_sq, || invariants::omega_family(self.square(), &self.budget))
    }

    pub fn core(&self) -> Result<VertexSet, SolverError> {
        cached(&self.core, || invariants::core_set(self.g, &self.budget))
    }

    pub fn pendant_perfect_matching(&self) -> Option<&Matching> {
        self.pendant_pm
            .get_or_init(|| recognizers::has_pendant_perfect_matching(self.g).ok().flatten())
            .as_ref()
    }

    /// Pendant vertices, a `K_2` component contributing one.
    pub fn pendant_count(&self) -> usize {
        recognizers::pendant_stable_set(self.g).len()
    }

    /// Number of perfect matchings, saturating at 2.
    pub fn perfect_matchings(&self) -> usize {
        *self
            .perfect_matchings
            .get_or_init(|| invariants::count_perfect_matchings(self.g, 2))
    }

    pub fn girth(&self) -> Girth {
        self.g.girth()
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.g.size() + 1 == self.n() && self.connected()
    }
}
