//! Exact invariants, class recognizers and a theorem-checking harness for
//! square-stable graphs, i.e. graphs whose stability number equals that of
//! their second power.
//!
//! * [`graph`]: the immutable [`Graph`] value and structural queries.
//! * [`invariants`]: exact solvers with witnesses and explicit budgets.
//! * [`fixtures`]: small named graphs.
//! * [`recognizers`]: class membership with certificates.
//! * [`harness`]: statement checkers over graph families.
//! * [`io`]: graph6 and edge-list codecs, family generators, JSON records.
//! * [`cli`]: the `kesq` command line.

pub mod cli;
pub mod fixtures;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod io;
pub mod recognizers;

pub use graph::{DistanceMatrix, Girth, Graph, GraphError, InducedSubgraph, VertexSet};
pub use invariants::{InvariantReport, Matching, SolverBudget, SolverError};
