//! Recognition of path graphs and directed path graphs.
//!
//! A path graph is the intersection graph of paths in a tree; a directed
//! path graph is the intersection graph of directed paths in a directed
//! tree. Both classes sit between interval graphs and chordal graphs and are
//! characterized by the existence of a (directed) clique path tree: a tree
//! over the maximal cliques in which the cliques containing any one vertex
//! form a (directed) path.
//!
//! The recognizers here decompose the graph at clique separators, relate the
//! separated components through attachment tables, and search for a coloring
//! of the components that can be folded back into a certifying tree. On
//! acceptance the certificate is returned and can be replayed through the
//! independent checkers in [`oracle`]; on rejection the failing pipeline
//! stage is reported. The [`oracle`] module also hosts brute-force
//! recognizers (labeled-tree enumeration over Prüfer codes) used for
//! differential testing, and [`gen`] provides seeded instance generators.
//!
//! ```
//! use pathtree::{recognize_path_graph, samples};
//!
//! let cert = recognize_path_graph(&samples::path_graph_15()).unwrap();
//! assert_eq!(cert.p(), 10);
//! ```

pub mod chordal;
pub mod error;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod recognizer;
pub mod samples;
pub mod separation;
pub mod verdict;

pub use chordal::{
    clique_tree, is_chordal, maximal_cliques, mcs_order, CliqueSet, CliqueTree, EliminationOrder,
};
pub use error::Error;
pub use graph::{
    connected_components, induced_subgraph, parse_graph, parse_graph_labeled, serialize_graph,
    Graph, VertexSet,
};
pub use recognizer::{
    recognize_directed_path_graph, recognize_path_graph, recognize_with, Mode, Options, RunOutput,
    SeparatorTrace,
};
pub use verdict::{Certificate, RejectReason, Rejection};
