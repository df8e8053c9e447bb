use super::{adjacency_masks, bit, bits, full_mask, mask_to_set, require_vertices, Mask, Meter};
use super::{SolverBudget, SolverError};
use crate::graph::{Graph, VertexSet};

struct Domination<'a> {
    closed: &'a [Mask],
    n: usize,
    all: Mask,
    max_closed: usize,
    meter: Meter,
    best_len: usize,
    best: Mask,
}

impl Domination<'_> {
    /// Decides vertices in ascending order, including before excluding.
    fn search(&mut self, v: usize, chosen: Mask, len: usize, dominated: Mask) -> Result<(), SolverError> {
        self.meter.tick()?;
        if dominated == self.all {
            if len < self.best_len {
                self.best_len = len;
                self.best = chosen;
            }
            return Ok(());
        }
        let missing = (self.all & !dominated).count_ones() as usize;
        if v == self.n || len + missing.div_ceil(self.max_closed) >= self.best_len {
            return Ok(());
        }
        // an undominated vertex whose closed neighborhood is already decided is lost
        let undecided = self.all & !(bit(v) - 1);
        if bits(self.all & !dominated).any(|u| self.closed[u] & undecided == 0) {
            return Ok(());
        }
        self.search(v + 1, chosen | bit(v), len + 1, dominated | self.closed[v])?;
        self.search(v + 1, chosen, len, dominated)
    }
}

/// Domination number with the lexicographically least minimum dominating set.
pub fn gamma(g: &Graph, budget: &SolverBudget) -> Result<(usize, VertexSet), SolverError> {
    require_vertices(g)?;
    let n = g.order();
    let closed = adjacency_masks(g)?
        .into_iter()
        .enumerate()
        .map(|(v, m)| m | bit(v))
        .collect::<Vec<_>>();
    let max_closed = closed.iter().map(|m| m.count_ones() as usize).max().unwrap_or(1);
    let mut search = Domination {
        closed: &closed,
        n,
        all: full_mask(n),
        max_closed,
        meter: budget.meter(),
        best_len: greedy_upper_bound(&closed, full_mask(n)) + 1,
        best: 0,
    };
    search.search(0, 0, 0, 0)?;
    Ok((search.best_len, mask_to_set(n, search.best)))
}

/// Size of a greedy dominating set (max new coverage, lowest id on ties).
fn greedy_upper_bound(closed: &[Mask], all: Mask) -> usize {
    let mut dominated: Mask = 0;
    let mut count = 0;
    while dominated != all {
        let v = (0..closed.len())
            .max_by_key(|&v| ((closed[v] & !dominated).count_ones(), std::cmp::Reverse(v)))
            .expect("non-empty");
        dominated |= closed[v];
        count += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma_of(g: &Graph) -> (usize, Vec<usize>) {
        let (k, w) = gamma(g, &SolverBudget::default()).unwrap();
        (k, w.to_vec())
    }

    #[test]
    fn domination_examples() {
        assert_eq!(gamma_of(&Graph::star(6)), (1, vec![0]));
        assert_eq!(gamma_of(&Graph::path(6)), (2, vec![1, 4]));
        assert_eq!(gamma_of(&Graph::cycle(4)), (2, vec![0, 1]));
        assert_eq!(gamma_of(&Graph::empty(3)), (3, vec![0, 1, 2]));
        assert_eq!(gamma_of(&Graph::complete(1)), (1, vec![0]));
    }
}
