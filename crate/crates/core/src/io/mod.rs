//! Codecs, graph families and JSON records.

mod edgelist;
mod family;
mod graph6;
mod record;

pub use edgelist::{parse_edge_list, write_edge_list, EdgeListError};
pub use family::{
    all_labeled_graphs, all_labeled_trees, gnp, random_tree, tree_from_pruefer, FamilyError, FamilyPart, GraphFamily,
    MAX_EXHAUSTIVE_ORDER,
};
pub use graph6::{decode_graph6, encode_graph6, Graph6Error, GRAPH6_MAX_ORDER};
pub use record::AnalysisRecord;
