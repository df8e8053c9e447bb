use super::stable::max_stable_mask;
use super::{adjacency_masks, bit, full_mask, mask_to_set, require_vertices, Mask, Meter};
use super::{SolverBudget, SolverError};
use crate::graph::{Graph, VertexSet};

/// Colors the complement: vertices are placed in ascending order into the
/// first compatible clique, a fresh clique being tried last.
struct CliquePartition<'a> {
    adj: &'a [Mask],
    n: usize,
    meter: Meter,
    lower_bound: usize,
    best_len: usize,
    best: Vec<Mask>,
}

enum Stop {
    Optimal,
    Budget(SolverError),
}

impl From<SolverError> for Stop {
    fn from(e: SolverError) -> Self {
        Stop::Budget(e)
    }
}

impl CliquePartition<'_> {
    fn search(&mut self, v: usize, classes: &mut Vec<Mask>) -> Result<(), Stop> {
        self.meter.tick()?;
        if classes.len() >= self.best_len {
            return Ok(());
        }
        if v == self.n {
            self.best_len = classes.len();
            self.best = classes.clone();
            if self.best_len == self.lower_bound {
                return Err(Stop::Optimal);
            }
            return Ok(());
        }
        for c in 0..classes.len() {
            if classes[c] & !self.adj[v] == 0 {
                classes[c] |= bit(v);
                self.search(v + 1, classes)?;
                classes[c] &= !bit(v);
            }
        }
        if classes.len() + 1 < self.best_len {
            classes.push(bit(v));
            self.search(v + 1, classes)?;
            classes.pop();
        }
        Ok(())
    }
}

/// Clique cover number with a partition of the vertex set into cliques.
pub fn theta(g: &Graph, budget: &SolverBudget) -> Result<(usize, Vec<VertexSet>), SolverError> {
    require_vertices(g)?;
    let n = g.order();
    let adj = adjacency_masks(g)?;
    // the stability number bounds the cover from below
    let (lower_bound, _) = max_stable_mask(&adj, full_mask(n), budget.meter())?;
    let mut search = CliquePartition {
        adj: &adj,
        n,
        meter: budget.meter(),
        lower_bound,
        best_len: n + 1,
        best: Vec::new(),
    };
    match search.search(0, &mut Vec::new()) {
        Ok(()) | Err(Stop::Optimal) => {}
        Err(Stop::Budget(e)) => return Err(e),
    }
    let partition = search.best.iter().map(|&m| mask_to_set(n, m)).collect::<Vec<_>>();
    Ok((partition.len(), partition))
}
