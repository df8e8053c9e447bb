use super::SolverError;
use super::{adjacency_masks, bit, bits, full_mask, lowest, mask_to_set, require_vertices, Mask};
use crate::graph::{Graph, VertexSet};

/// Vertices whose open neighborhood induces a complete subgraph.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    VertexSet::from_members(g.order(), (0..g.order()).filter(|&v| g.is_clique(&g.neighborhood(v))))
}

/// Every inclusion-maximal clique once, in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>, SolverError> {
    fn rec(adj: &[Mask], cur: Mask, p: Mask, x: Mask, out: &mut Vec<Mask>) {
        if p == 0 {
            if x == 0 {
                out.push(cur);
            }
            return;
        }
        if bits(x).any(|u| adj[u] & p == p) {
            // some excluded vertex extends every clique reachable from here
            return;
        }
        let (mut p, mut x) = (p, x);
        while p != 0 {
            let v = lowest(p);
            rec(adj, cur | bit(v), p & adj[v], x & adj[v], out);
            p &= !bit(v);
            x |= bit(v);
            if adj[v] & p == p && p != 0 {
                break;
            }
        }
    }
    require_vertices(g)?;
    let adj = adjacency_masks(g)?;
    let mut out = Vec::new();
    rec(&adj, 0, full_mask(g.order()), 0, &mut out);
    Ok(out.into_iter().map(|m| mask_to_set(g.order(), m)).collect())
}

/// Maximal cliques containing at least one simplicial vertex.
pub fn simplexes(g: &Graph) -> Result<Vec<VertexSet>, SolverError> {
    let simp = simplicial_vertices(g);
    Ok(maximal_cliques(g)?
        .into_iter()
        .filter(|c| c.iter().any(|v| simp.contains(v)))
        .collect())
}
