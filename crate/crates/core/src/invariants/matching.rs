use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::Graph;

/// A set of pairwise non-incident edges, stored as sorted `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(edges: I) -> Matching {
        let mut edges = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect::<Vec<_>>();
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Every edge exists in `g` and no two edges share an endpoint.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.order()];
        self.edges.iter().all(|&(u, v)| {
            if !g.has_edge(u, v) || used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
            true
        })
    }

    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        self.is_valid_in(g) && 2 * self.len() == g.order()
    }
}

const NONE: usize = usize::MAX;

/// Edmonds' augmenting-path search with blossom contraction, O(n^3).
struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex ending
    /// an augmenting path, if one exists.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.g.order();
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(&w) = self.g.neighbors(v).iter().find(|&&w| self.mate[w] == NONE) {
                    self.mate[v] = w;
                    self.mate[w] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                while v != NONE {
                    let pv = self.parent[v];
                    let ppv = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = ppv;
                }
            }
        }
        self.mate
    }
}

/// Matching number with a maximum matching. Polynomial; no order cap.
pub fn mu(g: &Graph) -> (usize, Matching) {
    let mate = Blossom::new(g).run();
    let m = Matching::new(
        mate.iter()
            .enumerate()
            .filter(|&(v, &w)| w != NONE && v < w)
            .map(|(v, &w)| (v, w)),
    );
    (m.len(), m)
}

/// Number of perfect matchings, counting stops at `limit`.
pub fn count_perfect_matchings(g: &Graph, limit: usize) -> usize {
    fn rec(g: &Graph, covered: &mut [bool], limit: usize) -> usize {
        let Some(v) = covered.iter().position(|&c| !c) else {
            return 1;
        };
        covered[v] = true;
        let mut total = 0;
        for &w in g.neighbors(v) {
            if !covered[w] {
                covered[w] = true;
                total += rec(g, covered, limit - total);
                covered[w] = false;
                if total >= limit {
                    break;
                }
            }
        }
        covered[v] = false;
        total
    }
    if g.order() % 2 == 1 || limit == 0 {
        return 0;
    }
    rec(g, &mut vec![false; g.order()], limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_examples() {
        // path a-b-c-d plus apex e on a, b, c
        let apex = Graph::new(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4)]).unwrap();
        assert_eq!(mu(&apex).0, 2);
        let (k, m) = mu(&Graph::path(4));
        assert_eq!(k, 2);
        assert_eq!(m.edges(), &[(0, 1), (2, 3)]);
        assert_eq!(mu(&Graph::star(7)).0, 1);
        assert_eq!(mu(&Graph::empty(3)).0, 0);
        assert_eq!(mu(&Graph::cycle(7)).0, 3);
        assert_eq!(mu(&Graph::complete(6)).0, 3);
    }

    #[test]
    fn blossom_needed() {
        // triangle 0-1-2 with tails 0-3 and 1-4 and 2-5: greedy picks 0-1 first
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        let (k, m) = mu(&g);
        assert_eq!(k, 3);
        assert!(m.is_perfect_in(&g));
    }

    #[test]
    fn validation() {
        let p4 = Graph::path(4);
        assert!(!Matching::new([(0, 1), (1, 2)]).is_valid_in(&p4));
        assert!(!Matching::new([(0, 2)]).is_valid_in(&p4));
        assert!(Matching::new([(1, 0), (3, 2)]).is_perfect_in(&p4));
    }

    #[test]
    fn perfect_matching_counts() {
        assert_eq!(count_perfect_matchings(&Graph::path(6), 10), 1);
        let k3e = Graph::new(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        assert_eq!(count_perfect_matchings(&k3e, 10), 1);
        assert_eq!(count_perfect_matchings(&Graph::cycle(4), 10), 2);
        assert_eq!(count_perfect_matchings(&Graph::complete(6), 100), 15);
        assert_eq!(count_perfect_matchings(&Graph::complete(6), 2), 2);
        assert_eq!(count_perfect_matchings(&Graph::path(3), 10), 0);
        assert_eq!(count_perfect_matchings(&Graph::empty(0), 10), 1);
    }
}
