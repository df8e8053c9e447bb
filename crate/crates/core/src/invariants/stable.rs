use std::cell::Cell;
use std::ops::ControlFlow;

use super::{
    adjacency_masks, bit, full_mask, lowest, mask_to_set, require_vertices, Mask, Meter, SolverBudget, SolverError,
};
use crate::graph::{Graph, VertexSet};

/// Above this order `core_set` switches from intersecting the materialized
/// maximum-stable-set family to one deletion test per vertex.
pub const DEFAULT_OMEGA_CAP: usize = 16;

/// Greedy clique cover of `G[p]`; an upper bound on its stability number.
fn clique_cover_bound(adj: &[Mask], mut p: Mask) -> usize {
    let mut cliques = 0;
    while p != 0 {
        let v = lowest(p);
        p &= !bit(v);
        let mut cand = p & adj[v];
        while cand != 0 {
            let w = lowest(cand);
            p &= !bit(w);
            cand &= adj[w];
        }
        cliques += 1;
    }
    cliques
}

struct MaxStable<'a> {
    adj: &'a [Mask],
    meter: Meter,
    best: Option<(usize, Mask)>,
}

impl MaxStable<'_> {
    fn search(&mut self, p: Mask, cur: Mask, len: usize) -> Result<(), SolverError> {
        self.meter.tick()?;
        if p == 0 {
            if self.best.is_none_or(|(b, _)| len > b) {
                self.best = Some((len, cur));
            }
            return Ok(());
        }
        if let Some((b, _)) = self.best {
            if len + clique_cover_bound(self.adj, p) <= b {
                return Ok(());
            }
        }
        let v = lowest(p);
        let vb = bit(v);
        self.search(p & !vb & !self.adj[v], cur | vb, len + 1)?;
        // an isolated candidate belongs to every optimum below this node
        if self.adj[v] & p != 0 {
            self.search(p & !vb, cur, len)?;
        }
        Ok(())
    }
}

/// Lexicographically least maximum stable set inside `candidates`.
pub(crate) fn max_stable_mask(adj: &[Mask], candidates: Mask, meter: Meter) -> Result<(usize, Mask), SolverError> {
    let mut s = MaxStable { adj, meter, best: None };
    s.search(candidates, 0, 0)?;
    Ok(s.best.unwrap_or((0, 0)))
}

/// Stability number with the lexicographically least maximum stable set.
pub fn alpha(g: &Graph, budget: &SolverBudget) -> Result<(usize, VertexSet), SolverError> {
    let adj = adjacency_masks(g)?;
    let (len, m) = max_stable_mask(&adj, full_mask(g.order()), budget.meter())?;
    Ok((len, mask_to_set(g.order(), m)))
}

/// Calls `visit` on every stable set of size `target` inside `p`, in
/// lexicographic order. Only meaningful when `target` is the stability
/// number of `G[p]`.
pub(crate) fn visit_maximum_stable(
    adj: &[Mask],
    p: Mask,
    target: usize,
    meter: &mut Meter,
    visit: &mut dyn FnMut(Mask) -> ControlFlow<()>,
) -> Result<(), SolverError> {
    fn rec(
        adj: &[Mask],
        p: Mask,
        cur: Mask,
        len: usize,
        target: usize,
        meter: &mut Meter,
        visit: &mut dyn FnMut(Mask) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>, SolverError> {
        meter.tick()?;
        if p == 0 {
            return Ok(if len == target {
                visit(cur)
            } else {
                ControlFlow::Continue(())
            });
        }
        if len + clique_cover_bound(adj, p) < target {
            return Ok(ControlFlow::Continue(()));
        }
        let v = lowest(p);
        let vb = bit(v);
        if rec(adj, p & !vb & !adj[v], cur | vb, len + 1, target, meter, visit)?.is_break() {
            return Ok(ControlFlow::Break(()));
        }
        if adj[v] & p != 0 {
            return rec(adj, p & !vb, cur, len, target, meter, visit);
        }
        Ok(ControlFlow::Continue(()))
    }
    rec(adj, p, 0, 0, target, meter, visit).map(drop)
}

/// All maximum stable sets, in lexicographic order.
pub fn omega_family(g: &Graph, budget: &SolverBudget) -> Result<Vec<VertexSet>, SolverError> {
    require_vertices(g)?;
    let adj = adjacency_masks(g)?;
    let all = full_mask(g.order());
    let mut meter = budget.meter();
    let (a, _) = max_stable_mask(&adj, all, budget.meter())?;
    let mut family = Vec::new();
    visit_maximum_stable(&adj, all, a, &mut meter, &mut |m| {
        family.push(mask_to_set(g.order(), m));
        ControlFlow::Continue(())
    })?;
    Ok(family)
}

/// Intersection of all maximum stable sets.
pub fn core_set(g: &Graph, budget: &SolverBudget) -> Result<VertexSet, SolverError> {
    core_set_with_cap(g, budget, DEFAULT_OMEGA_CAP)
}

/// Up to `omega_cap` vertices the family is enumerated and intersected;
/// above it, `v` is in the core iff deleting `v` lowers the stability number.
pub fn core_set_with_cap(g: &Graph, budget: &SolverBudget, omega_cap: usize) -> Result<VertexSet, SolverError> {
    require_vertices(g)?;
    let n = g.order();
    let adj = adjacency_masks(g)?;
    let all = full_mask(n);
    let mut meter = budget.meter();
    let (a, witness) = max_stable_mask(&adj, all, budget.meter())?;
    if n <= omega_cap {
        let mut core = all;
        visit_maximum_stable(&adj, all, a, &mut meter, &mut |m| {
            core &= m;
            if core == 0 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
        return Ok(mask_to_set(n, core));
    }
    let mut core = 0;
    // only members of one optimum can lie in every optimum
    for v in super::bits(witness) {
        let (without, _) = max_stable_mask(&adj, all & !bit(v), budget.meter())?;
        if without < a {
            core |= bit(v);
        }
    }
    Ok(mask_to_set(n, core))
}

/// Bron-Kerbosch over non-neighbors without pivoting: reports every
/// inclusion-maximal stable set of size below `limit` in lexicographic
/// order. `limit` may be lowered by the visitor to tighten pruning.
pub(crate) fn visit_maximal_stable(
    adj: &[Mask],
    all: Mask,
    limit: &Cell<usize>,
    meter: &mut Meter,
    visit: &mut dyn FnMut(Mask, usize) -> ControlFlow<()>,
) -> Result<(), SolverError> {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        adj: &[Mask],
        cur: Mask,
        len: usize,
        p: Mask,
        x: Mask,
        limit: &Cell<usize>,
        meter: &mut Meter,
        visit: &mut dyn FnMut(Mask, usize) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>, SolverError> {
        meter.tick()?;
        if p == 0 {
            if x == 0 && len < limit.get() {
                return Ok(visit(cur, len));
            }
            return Ok(ControlFlow::Continue(()));
        }
        if len + 1 >= limit.get() {
            return Ok(ControlFlow::Continue(()));
        }
        // an excluded vertex with no candidate neighbor can never be blocked
        if super::bits(x).any(|u| adj[u] & p == 0) {
            return Ok(ControlFlow::Continue(()));
        }
        let (mut p, mut x) = (p, x);
        while p != 0 {
            let v = lowest(p);
            let closed = adj[v] | bit(v);
            if rec(
                adj,
                cur | bit(v),
                len + 1,
                p & !closed,
                x & !closed,
                limit,
                meter,
                visit,
            )?
            .is_break()
            {
                return Ok(ControlFlow::Break(()));
            }
            p &= !bit(v);
            x |= bit(v);
            if adj[v] & p == 0 || len + 1 >= limit.get() {
                break;
            }
        }
        Ok(ControlFlow::Continue(()))
    }
    rec(adj, 0, 0, all, 0, limit, meter, visit).map(drop)
}

/// Every inclusion-maximal stable set exactly once, in lexicographic order.
pub fn enumerate_maximal_stable_sets(g: &Graph) -> Result<Vec<VertexSet>, SolverError> {
    require_vertices(g)?;
    let adj = adjacency_masks(g)?;
    let limit = Cell::new(usize::MAX);
    let mut meter = Meter::unlimited();
    let mut out = Vec::new();
    visit_maximal_stable(&adj, full_mask(g.order()), &limit, &mut meter, &mut |m, _| {
        out.push(mask_to_set(g.order(), m));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Independent domination number: the smallest inclusion-maximal stable set.
pub fn ind_dom(g: &Graph, budget: &SolverBudget) -> Result<(usize, VertexSet), SolverError> {
    require_vertices(g)?;
    let adj = adjacency_masks(g)?;
    let limit = Cell::new(g.order() + 1);
    let mut meter = budget.meter();
    let mut best = 0;
    visit_maximal_stable(&adj, full_mask(g.order()), &limit, &mut meter, &mut |m, len| {
        best = m;
        limit.set(len);
        ControlFlow::Continue(())
    })?;
    Ok((limit.get(), mask_to_set(g.order(), best)))
}

/// The lexicographically least maximal stable set with fewer than `alpha`
/// vertices, if any. `None` means the graph is well-covered.
pub fn smaller_maximal_stable_set(
    g: &Graph,
    alpha: usize,
    budget: &SolverBudget,
) -> Result<Option<VertexSet>, SolverError> {
    require_vertices(g)?;
    let adj = adjacency_masks(g)?;
    let limit = Cell::new(alpha);
    let mut meter = budget.meter();
    let mut found = None;
    visit_maximal_stable(&adj, full_mask(g.order()), &limit, &mut meter, &mut |m, _| {
        found = Some(m);
        ControlFlow::Break(())
    })?;
    Ok(found.map(|m| mask_to_set(g.order(), m)))
}
