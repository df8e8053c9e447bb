//! Reproducible graph streams.
//!
//! A family is written as comma-separated parts:
//!
//! | part                     | graphs                                              |
//! |--------------------------|-----------------------------------------------------|
//! | `exhaustive:N`           | all `2^(N(N-1)/2)` labeled graphs on `N` vertices    |
//! | `gnp:N:P:COUNT`          | `COUNT` samples of G(N, P)                           |
//! | `trees:N:COUNT`          | `COUNT` uniform labeled trees (random Pruefer codes) |
//! | `all-trees:N`            | all `N^(N-2)` labeled trees                          |
//! | `fixtures`               | the named graphs of [`crate::fixtures`]              |
//! | `graph6:PATH`            | one graph6 string per line (`-` reads stdin)         |
//!
//! `N` may be a range `A-B`, which expands to one part per order. Every
//! random part draws from its own ChaCha8 stream derived from the single
//! family seed and the part's position, so adding a part never changes the
//! graphs of the parts before it.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::io::Read;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::graph6::{decode_graph6, Graph6Error};
use crate::fixtures;
use crate::graph::Graph;

/// Largest order accepted by `exhaustive:N` (`2^21` graphs).
pub const MAX_EXHAUSTIVE_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad family part `{part}`: {reason}")]
    Syntax { part: String, reason: String },
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("{path}, line {line}: {source}")]
    Graph6 {
        path: String,
        line: usize,
        source: Graph6Error,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum FamilyPart {
    Exhaustive { n: usize },
    Gnp { n: usize, p: f64, count: usize },
    RandomTrees { n: usize, count: usize },
    AllTrees { n: usize },
    Fixtures,
    Graph6File { path: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GraphFamily {
    text: String,
    parts: Vec<FamilyPart>,
    seed: u64,
    connected: bool,
}

fn syntax(part: &str, reason: impl Into<String>) -> FamilyError {
    FamilyError::Syntax {
        part: part.to_string(),
        reason: reason.into(),
    }
}

fn orders(part: &str, field: &str) -> Result<Vec<usize>, FamilyError> {
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| syntax(part, format!("`{s}` is not an order")))
    };
    let (lo, hi) = match field.split_once('-') {
        Some((a, b)) => (num(a)?, num(b)?),
        None => (num(field)?, num(field)?),
    };
    if lo > hi {
        return Err(syntax(part, "empty order range"));
    }
    Ok((lo..=hi).collect())
}

fn count(part: &str, field: &str) -> Result<usize, FamilyError> {
    field
        .parse()
        .map_err(|_| syntax(part, format!("`{field}` is not a count")))
}

impl GraphFamily {
    pub fn parse(text: &str, seed: u64, connected: bool) -> Result<GraphFamily, FamilyError> {
        let mut parts = Vec::new();
        for part in text.split(',').map(str::trim) {
            let (kind, rest) = part.split_once(':').unwrap_or((part, ""));
            let fields = if rest.is_empty() {
                vec![]
            } else {
                rest.split(':').collect::<Vec<_>>()
            };
            let arity = |k: usize| -> Result<(), FamilyError> {
                if fields.len() == k {
                    Ok(())
                } else {
                    Err(syntax(part, format!("expected {k} parameters")))
                }
            };
            match kind {
                "exhaustive" => {
                    arity(1)?;
                    for n in orders(part, fields[0])? {
                        if n > MAX_EXHAUSTIVE_ORDER {
                            return Err(syntax(
                                part,
                                format!("exhaustive enumeration stops at {MAX_EXHAUSTIVE_ORDER}"),
                            ));
                        }
                        parts.push(FamilyPart::Exhaustive { n });
                    }
                }
                "gnp" => {
                    arity(3)?;
                    let p: f64 = fields[1]
                        .parse()
                        .map_err(|_| syntax(part, "edge probability is not a number"))?;
                    if !(0.0..=1.0).contains(&p) {
                        return Err(syntax(part, "edge probability outside [0, 1]"));
                    }
                    let c = count(part, fields[2])?;
                    for n in orders(part, fields[0])? {
                        parts.push(FamilyPart::Gnp { n, p, count: c });
                    }
                }
                "trees" => {
                    arity(2)?;
                    let c = count(part, fields[1])?;
                    for n in orders(part, fields[0])? {
                        if n == 0 {
                            return Err(syntax(part, "trees need at least one vertex"));
                        }
                        parts.push(FamilyPart::RandomTrees { n, count: c });
                    }
                }
                "all-trees" => {
                    arity(1)?;
                    for n in orders(part, fields[0])? {
                        if n == 0 || n > 12 {
                            return Err(syntax(part, "all-trees needs 1 <= N <= 12"));
                        }
                        parts.push(FamilyPart::AllTrees { n });
                    }
                }
                "fixtures" => {
                    arity(0)?;
                    parts.push(FamilyPart::Fixtures);
                }
                "graph6" => {
                    if rest.is_empty() {
                        return Err(syntax(part, "missing path"));
                    }
                    parts.push(FamilyPart::Graph6File { path: rest.to_string() });
                }
                _ => return Err(syntax(part, "unknown kind")),
            }
        }
        Ok(GraphFamily {
            text: text.to_string(),
            parts,
            seed,
            connected,
        })
    }

    pub fn parts(&self) -> &[FamilyPart] {
        &self.parts
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn connected_only(&self) -> bool {
        self.connected
    }

    /// The graphs of every part in order, minus the disconnected ones when
    /// the connectivity filter is on.
    pub fn graphs(&self) -> impl Iterator<Item = Result<Graph, FamilyError>> + '_ {
        let connected = self.connected;
        self.parts
            .iter()
            .enumerate()
            .flat_map(move |(i, part)| part_stream(part, self.seed, i as u64))
            .filter(move |g| !connected || g.as_ref().map_or(true, Graph::is_connected))
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)?;
        if self.connected {
            f.write_str(" (connected)")?;
        }
        Ok(())
    }
}

type Stream<'a> = Box<dyn Iterator<Item = Result<Graph, FamilyError>> + 'a>;

fn part_stream(part: &FamilyPart, seed: u64, index: u64) -> Stream<'_> {
    let rng = move || {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        r.set_stream(index);
        r
    };
    match *part {
        FamilyPart::Exhaustive { n } => Box::new(all_labeled_graphs(n).map(Ok)),
        FamilyPart::Gnp { n, p, count } => {
            let mut r = rng();
            Box::new((0..count).map(move |_| Ok(gnp(n, p, &mut r))))
        }
        FamilyPart::RandomTrees { n, count } => {
            let mut r = rng();
            Box::new((0..count).map(move |_| Ok(random_tree(n, &mut r))))
        }
        FamilyPart::AllTrees { n } => Box::new(all_labeled_trees(n).map(Ok)),
        FamilyPart::Fixtures => Box::new(fixtures::all().into_iter().map(|f| Ok(f.graph))),
        FamilyPart::Graph6File { ref path } => match read_source(path) {
            Ok(text) => {
                let lines = text
                    .lines()
                    .enumerate()
                    .filter(|(_, l)| !l.trim().is_empty())
                    .map(|(i, l)| {
                        decode_graph6(l).map_err(|source| FamilyError::Graph6 {
                            path: path.clone(),
                            line: i + 1,
                            source,
                        })
                    })
                    .collect::<Vec<_>>();
                Box::new(lines.into_iter())
            }
            Err(e) => Box::new(std::iter::once(Err(e))),
        },
    }
}

fn read_source(path: &str) -> Result<String, FamilyError> {
    let io = |e: std::io::Error| FamilyError::Io {
        path: path.to_string(),
        reason: e.to_string(),
    };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

/// Vertex pairs in graph6 bit order: `(0,1), (0,2), (1,2), (0,3), ...`.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// All labeled graphs on `n` vertices; graph `k` has pair `b` (in graph6
/// bit order) as an edge iff bit `b` of `k` is set.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = pairs(n);
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).expect("pairs are valid")
    })
}

/// One sample of G(n, p): each pair is an edge independently with probability `p`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect::<Vec<_>>();
    Graph::new(n, edges).expect("pairs are valid")
}

/// Decodes a Pruefer code over `0..n` (length `n - 2`) into its tree.
pub fn tree_from_pruefer(n: usize, code: &[usize]) -> Graph {
    assert!(
        n >= 2 && code.len() == n - 2,
        "a Pruefer code for {n} vertices has {} entries",
        n.saturating_sub(2)
    );
    let mut degree = vec![1usize; n];
    for &x in code {
        degree[x] += 1;
    }
    let mut leaves = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect::<BinaryHeap<_>>();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in code {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(u) = leaves.pop().expect("two vertices remain");
    let Reverse(v) = leaves.pop().expect("two vertices remain");
    edges.push((u, v));
    Graph::new(n, edges).expect("Pruefer decoding yields a tree")
}

/// A uniformly random labeled tree on `n >= 1` vertices.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n < 2 {
        return Graph::empty(n);
    }
    let code = (0..n - 2).map(|_| rng.gen_range(0..n)).collect::<Vec<_>>();
    tree_from_pruefer(n, &code)
}

/// Every labeled tree on `n >= 1` vertices once, in lexicographic order of
/// Pruefer codes.
pub fn all_labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    let len = n.saturating_sub(2);
    let mut code = vec![0usize; len];
    let mut done = n == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let tree = if n < 2 {
            Graph::empty(n)
        } else {
            tree_from_pruefer(n, &code)
        };
        // odometer increment, last position fastest
        done = true;
        for slot in code.iter_mut().rev() {
            *slot += 1;
            if *slot < n {
                done = false;
                break;
            }
            *slot = 0;
        }
        Some(tree)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(text: &str, connected: bool) -> Vec<Graph> {
        GraphFamily::parse(text, 7, connected)
            .unwrap()
            .graphs()
            .map(Result::unwrap)
            .collect()
    }

    #[test]
    fn exhaustive_counts() {
        assert_eq!(collect("exhaustive:3", false).len(), 8);
        assert_eq!(collect("exhaustive:4", true).len(), 38);
        assert_eq!(collect("exhaustive:0-2", false).len(), 1 + 1 + 2);
    }

    #[test]
    fn exhaustive_graphs_are_distinct() {
        let mut gs = collect("exhaustive:5", false);
        gs.sort_by_key(|g| g.edges().to_vec());
        gs.dedup();
        assert_eq!(gs.len(), 1 << 10);
    }

    #[test]
    fn trees() {
        let ts = collect("trees:5:10", false);
        assert_eq!(ts.len(), 10);
        assert!(ts.iter().all(|t| t.size() == 4 && t.is_connected()));
        assert_eq!(collect("all-trees:1-6", false).len(), 1 + 1 + 3 + 16 + 125 + 1296);
        assert_eq!(
            tree_from_pruefer(4, &[1, 1]),
            Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap()
        );
        assert_eq!(
            tree_from_pruefer(5, &[3, 3, 3]),
            Graph::new(5, [(0, 3), (1, 3), (2, 3), (3, 4)]).unwrap()
        );
    }

    #[test]
    fn seeded_streams_repeat() {
        let a = collect("gnp:8:0.5:20,trees:9:5", false);
        let b = collect("gnp:8:0.5:20,trees:9:5", false);
        assert_eq!(a, b);
        let c = GraphFamily::parse("gnp:8:0.5:20", 8, false)
            .unwrap()
            .graphs()
            .map(Result::unwrap)
            .collect::<Vec<_>>();
        assert_ne!(a[..20], c[..]);
        // earlier parts are unaffected by later ones
        assert_eq!(collect("gnp:8:0.5:20", false), a[..20]);
    }

    #[test]
    fn rejects_bad_parts() {
        for bad in [
            "gnp:5:1.5:3",
            "exhaustive:9",
            "exhaustive:5-3",
            "wheel:5",
            "trees:0:3",
            "gnp:5:0.5",
            "graph6:",
        ] {
            assert!(GraphFamily::parse(bad, 0, false).is_err(), "{bad}");
        }
    }
}
