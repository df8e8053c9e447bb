//! Plain edge lists: a header line `n m`, then `m` lines `u v`.
//!
//! Blank lines and lines starting with `#` are skipped. Line numbers in
//! errors are 1-based and count every physical line.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("line {line}: expected {expected} integers, found `{text}`")]
    Arity { line: usize, expected: usize, text: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
}

fn integers(line: usize, text: &str, expected: usize) -> Result<Vec<usize>, EdgeListError> {
    let parsed = text
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<Vec<usize>, _>>();
    match parsed {
        Ok(v) if v.len() == expected => Ok(v),
        _ => Err(EdgeListError::Arity {
            line,
            expected,
            text: text.to_string(),
        }),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let nm = integers(hline, header, 2)?;
    let (n, m) = (nm[0], nm[1]);
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let uv = integers(line, l, 2)?;
        let (u, v) = (uv[0], uv[1]);
        if u == v {
            return Err(EdgeListError::Graph {
                line,
                source: GraphError::SelfLoop(u),
            });
        }
        if u >= n || v >= n {
            return Err(EdgeListError::Graph {
                line,
                source: GraphError::EndpointOutOfRange { u, v, n },
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Graph::new(n, edges).map_err(|source| EdgeListError::Graph { line: hline, source })
}

/// Writes `g` in the format read by [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
