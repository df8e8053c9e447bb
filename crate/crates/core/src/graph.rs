//! Immutable simple undirected graphs and the structural queries the rest of
//! the crate is built on: neighborhoods, distances, the second power,
//! pendant vertices, girth, components and induced subgraphs.

use std::collections::VecDeque;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("vertex {v} is not in 0..{n}")]
    InvalidVertex { v: usize, n: usize },
}

/// A subset of the vertex range `0..universe` of some graph, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    /// Builds a set from members; panics if a member is outside the universe.
    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Self {
        let mut s = Self::empty(universe);
        for v in members {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        let (w, b) = (v / 64, 1u64 << (v % 64));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / 64, 1u64 << (v % 64));
        let present = self.words[w] & b != 0;
        self.words[w] &= !b;
        present
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] & (1u64 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_members(self.universe, self.iter().filter(|&v| other.contains(v)))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let universe = self.universe.max(other.universe);
        VertexSet::from_members(universe, self.iter().chain(other.iter()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the ascending member sequences.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Shortest-path lengths between all vertex pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    const UNREACHABLE: u32 = u32::MAX;

    pub fn order(&self) -> usize {
        self.n
    }

    /// `None` when `v` cannot be reached from `u`.
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        match self.d[u * self.n + v] {
            Self::UNREACHABLE => None,
            d => Some(d as usize),
        }
    }

    /// True when the pair is unreachable or at least `k` apart.
    pub fn at_least(&self, u: usize, v: usize, k: usize) -> bool {
        self.get(u, v).is_none_or(|d| d >= k)
    }
}

/// Length of a shortest cycle, or `Acyclic` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Girth {
    Acyclic,
    Cycle(usize),
}

impl Girth {
    /// Forests have every girth lower bound.
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Acyclic => true,
            Girth::Cycle(len) => len >= k,
        }
    }
}

/// An induced subgraph together with the original id of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub original: Vec<usize>,
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Equality and hashing are on `(n, edge set)`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut canon = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(Self::from_canonical(n, canon))
    }

    /// `edges` must be sorted, deduplicated, with `u < v < n`.
    fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_canonical(n, Vec::new())
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect::<Vec<_>>();
        Self::new(n, edges).expect("complete graph is valid")
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path is valid")
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is valid")
    }

    /// The star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        Self::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is valid")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex { v, n: self.n })
        }
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_members(self.n, self.adj[v].iter().copied())
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.neighborhood(v);
        s.insert(v);
        s
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// No two members adjacent.
    pub fn is_stable(&self, set: &VertexSet) -> bool {
        set.iter().all(|u| self.adj[u].iter().all(|&w| !set.contains(w)))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let members = set.to_vec();
        members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_members(self.n, (0..self.n).filter(|&v| self.adj[v].is_empty()))
    }

    fn bfs(&self, source: usize, dist: &mut [u32]) {
        dist.fill(DistanceMatrix::UNREACHABLE);
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == DistanceMatrix::UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    /// All-pairs shortest-path lengths by repeated BFS.
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.n;
        let mut d = vec![DistanceMatrix::UNREACHABLE; n * n];
        for (s, row) in d.chunks_mut(n.max(1)).enumerate().take(n) {
            self.bfs(s, row);
        }
        DistanceMatrix { n, d }
    }

    /// The second power: same vertices, edges between all pairs at distance 1 or 2.
    /// Unreachable pairs stay non-adjacent.
    pub fn square(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.edges.len() * 2);
        let mut seen = vec![usize::MAX; self.n];
        for u in 0..self.n {
            seen[u] = u;
            for &w in &self.adj[u] {
                if seen[w] != u {
                    seen[w] = u;
                    if u < w {
                        edges.push((u, w));
                    }
                }
                for &x in &self.adj[w] {
                    if seen[x] != u {
                        seen[x] = u;
                        if u < x {
                            edges.push((u, x));
                        }
                    }
                }
            }
        }
        edges.sort_unstable();
        Self::from_canonical(self.n, edges)
    }

    pub fn pendant_vertices(&self) -> VertexSet {
        VertexSet::from_members(self.n, (0..self.n).filter(|&v| self.adj[v].len() == 1))
    }

    pub fn girth(&self) -> Girth {
        let n = self.n;
        let mut best = usize::MAX;
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.fill(u32::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] as usize + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == u32::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min((dist[u] + dist[w] + 1) as usize);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Acyclic
        } else {
            Girth::Cycle(best)
        }
    }

    /// Component index of each vertex, numbered by smallest member.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_labels().iter().all(|&c| c == 0)
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<InducedSubgraph> {
        let labels = self.component_labels();
        let count = labels.iter().max().map_or(0, |&m| m + 1);
        let mut members = vec![Vec::new(); count];
        for (v, &c) in labels.iter().enumerate() {
            members[c].push(v);
        }
        members.into_iter().map(|vs| self.induced_subgraph(&vs)).collect()
    }

    /// Subgraph induced by `vertices` (any order, duplicates ignored); new ids
    /// follow ascending original ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> InducedSubgraph {
        let mut original = vertices.to_vec();
        original.sort_unstable();
        original.dedup();
        let mut relabel = vec![usize::MAX; self.n];
        for (i, &v) in original.iter().enumerate() {
            relabel[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| relabel[u] != usize::MAX && relabel[v] != usize::MAX)
            .map(|&(u, v)| (relabel[u], relabel[v]))
            .collect::<Vec<_>>();
        let mut edges = edges;
        edges.sort_unstable();
        InducedSubgraph {
            graph: Self::from_canonical(original.len(), edges),
            original,
        }
    }

    /// `G - W`.
    pub fn delete_vertices(&self, removed: &VertexSet) -> InducedSubgraph {
        let keep = (0..self.n).filter(|&v| !removed.contains(v)).collect::<Vec<_>>();
        self.induced_subgraph(&keep)
    }

    /// `G - N[v]`.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<InducedSubgraph, GraphError> {
        self.check_vertex(v)?;
        Ok(self.delete_vertices(&self.closed_neighborhood(v)))
    }

    /// True iff the graph is connected, has `k` vertices and is 2-regular.
    pub fn is_cycle_of_length(&self, k: usize) -> bool {
        self.n == k && k >= 3 && self.adj.iter().all(|a| a.len() == 2) && self.is_connected()
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for v in 0..self.n {
            for u in 0..v {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        edges.sort_unstable();
        Self::from_canonical(self.n, edges)
    }

    /// Vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect::<Vec<_>>();
        Self::from_canonical(self.n + other.n, edges)
    }

    /// Adds a new pendant vertex to every vertex (the corona with `K_1`).
    /// Vertex `v` receives the pendant `n + v`.
    pub fn with_pendant_at_every_vertex(&self) -> Graph {
        let n = self.n;
        let mut edges = self.edges.clone();
        edges.extend((0..n).map(|v| (v, n + v)));
        edges.sort_unstable();
        Self::from_canonical(2 * n, edges)
    }
}
