//! Shared instance setup for the benchmarks.

use pathtree::gen::{random_chordal, random_path_graph_with};
use pathtree::Graph;

/// A path-graph positive with roughly five edges per vertex.
pub fn positive(n: usize, seed: u64) -> Graph {
    random_path_graph_with((n / 2).max(1), n, 4, seed)
}

/// A small mixed chordal instance for the oracle benches.
pub fn small_chordal(k: usize, seed: u64) -> Graph {
    random_chordal(k, 3, seed)
}
