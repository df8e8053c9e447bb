//! Naive exponential oracles and sample generators shared by the
//! integration tests. Nothing here uses the library's solvers.
#![allow(dead_code)]

use kesq::io::gnp;
use kesq::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn adjacency(g: &Graph) -> Vec<u32> {
    assert!(g.order() <= 16, "oracles scan all subsets");
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

fn members(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&v| mask >> v & 1 == 1)
}

pub fn is_stable_mask(adj: &[u32], mask: u32) -> bool {
    members(mask).all(|v| adj[v] & mask == 0)
}

pub fn is_clique_mask(adj: &[u32], mask: u32) -> bool {
    members(mask).all(|v| (adj[v] | 1 << v) & mask == mask)
}

fn dominates(adj: &[u32], mask: u32) -> bool {
    let all = (1u32 << adj.len()) - 1;
    members(mask).fold(mask, |d, v| d | adj[v]) == all
}

fn subsets(n: usize) -> std::ops::Range<u32> {
    0..1u32 << n
}

pub fn alpha(g: &Graph) -> usize {
    let adj = adjacency(g);
    subsets(g.order())
        .filter(|&m| is_stable_mask(&adj, m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// All maximal stable sets as sorted member lists, in lexicographic order.
pub fn maximal_stable_sets(g: &Graph) -> Vec<Vec<usize>> {
    let adj = adjacency(g);
    let n = g.order();
    let mut out: Vec<Vec<usize>> = subsets(n)
        .filter(|&m| is_stable_mask(&adj, m) && (0..n).all(|v| m >> v & 1 == 1 || adj[v] & m != 0))
        .map(|m| members(m).collect())
        .collect();
    out.sort();
    out
}

pub fn maximum_stable_sets(g: &Graph) -> Vec<Vec<usize>> {
    let a = alpha(g);
    maximal_stable_sets(g).into_iter().filter(|s| s.len() == a).collect()
}

pub fn ind_dom(g: &Graph) -> usize {
    maximal_stable_sets(g).iter().map(Vec::len).min().unwrap_or(0)
}

pub fn well_covered(g: &Graph) -> bool {
    let a = alpha(g);
    maximal_stable_sets(g).iter().all(|s| s.len() == a)
}

pub fn gamma(g: &Graph) -> usize {
    let adj = adjacency(g);
    subsets(g.order())
        .filter(|&m| dominates(&adj, m))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Minimum number of cliques partitioning the vertex set, by subset DP.
pub fn theta(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = g.order();
    let full = (1u32 << n) - 1;
    let mut best = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        // cliques inside `mask` that contain its lowest vertex
        let rest = mask & !low;
        let mut sub = rest;
        loop {
            let c = sub | low;
            if is_clique_mask(&adj, c) && best[(mask & !c) as usize] != usize::MAX {
                best[mask as usize] = best[mask as usize].min(best[(mask & !c) as usize] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full as usize]
}

/// Maximum matching by exhaustive recursion over the lowest unmatched vertex.
pub fn mu(g: &Graph) -> usize {
    fn rec(g: &Graph, used: &mut Vec<bool>, from: usize) -> usize {
        let Some(v) = (from..g.order()).find(|&v| !used[v]) else {
            return 0;
        };
        used[v] = true;
        // leave v unmatched
        let mut best = rec(g, used, v + 1);
        for &w in g.neighbors(v) {
            if !used[w] {
                used[w] = true;
                best = best.max(1 + rec(g, used, v + 1));
                used[w] = false;
            }
        }
        used[v] = false;
        best
    }
    rec(g, &mut vec![false; g.order()], 0)
}

/// All-pairs distances by Floyd-Warshall; `None` for unreachable pairs.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
        for &w in g.neighbors(v) {
            row[w] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

pub fn square(g: &Graph) -> Graph {
    let d = floyd_warshall(g);
    let n = g.order();
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(
        n,
        edges
            .filter(|&(u, v)| matches!(d[u][v], Some(1 | 2)))
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

pub fn ke(g: &Graph) -> bool {
    alpha(g) + mu(g) == g.order()
}

pub fn square_stable(g: &Graph) -> bool {
    alpha(g) == alpha(&square(g))
}

/// A uniformly random connected labeled graph drawn from G(n, p) by rejection.
pub fn connected_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    loop {
        let g = gnp(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// Connected Koenig-Egervary graphs on `n` vertices from a mix of sources:
/// rejection-sampled G(n, p), random connected bipartite graphs, and random
/// connected graphs with a pendant at every vertex (only for even `n`).
/// The last source is where square-stable graphs live; the first two mostly
/// produce graphs that are not.
pub fn random_connected_ke<R: Rng>(n: usize, rng: &mut R) -> Graph {
    loop {
        let g = match rng.gen_range(0..3) {
            0 => connected_gnp(n, *[0.2, 0.35, 0.5].choose(rng).unwrap(), rng),
            1 => {
                let left = rng.gen_range(1..n);
                let p = *[0.3, 0.5, 0.7].choose(rng).unwrap();
                let edges = (0..left)
                    .flat_map(|u| (left..n).map(move |v| (u, v)))
                    .filter(|_| rng.gen_bool(p))
                    .collect::<Vec<_>>();
                Graph::new(n, edges).unwrap()
            }
            _ if n.is_multiple_of(2) => {
                connected_gnp(n / 2, *[0.3, 0.6].choose(rng).unwrap(), rng).with_pendant_at_every_vertex()
            }
            _ => continue,
        };
        if g.is_connected() && ke(&g) {
            return g;
        }
    }
}
