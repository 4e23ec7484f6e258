//! Small hand-built sample graphs used across the test suites and the docs.

use crate::graph::{Graph, VertexSet};

fn from_cliques(n: usize, cliques: &[&[usize]]) -> Graph {
    let mut edges = std::collections::BTreeSet::new();
    for k in cliques {
        for i in 0..k.len() {
            for j in i + 1..k.len() {
                edges.insert((k[i].min(k[j]), k[i].max(k[j])));
            }
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// The maximal cliques of [`path_graph_15`], as 0-based vertex sets.
pub fn path_graph_15_cliques() -> Vec<VertexSet> {
    PATH_GRAPH_15_CLIQUES
        .iter()
        .map(|k| k.iter().map(|&v| v - 1).collect())
        .collect()
}

const PATH_GRAPH_15_CLIQUES: &[&[usize]] = &[
    &[1, 2, 3, 4, 5],
    &[1, 2, 4, 5, 10],
    &[2, 3, 4, 5, 8],
    &[1, 2, 6],
    &[4, 5, 9],
    &[2, 3, 4, 7],
    &[6, 11, 12],
    &[9, 15],
    &[7, 13],
    &[7, 14],
];

/// A 15-vertex path graph with ten maximal cliques around the central
/// 5-clique `{0,1,2,3,4}`. Splitting there yields five components with
/// every dominance and antipodality pattern represented.
pub fn path_graph_15() -> Graph {
    let cliques: Vec<Vec<usize>> = PATH_GRAPH_15_CLIQUES
        .iter()
        .map(|k| k.iter().map(|&v| v - 1).collect())
        .collect();
    let refs: Vec<&[usize]> = cliques.iter().map(Vec::as_slice).collect();
    from_cliques(15, &refs)
}

/// Edge list for [`path_graph_15`] in 1-based labels.
pub fn path_graph_15_edge_list() -> String {
    let g = path_graph_15();
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// The maximal cliques of [`directed_path_graph_8`], 0-based.
pub fn directed_path_graph_8_cliques() -> Vec<VertexSet> {
    DIRECTED_PATH_GRAPH_8_CLIQUES
        .iter()
        .map(|k| k.iter().map(|&v| v - 1).collect())
        .collect()
}

const DIRECTED_PATH_GRAPH_8_CLIQUES: &[&[usize]] = &[
    &[1, 2, 3, 4],
    &[3, 4, 5],
    &[1, 2, 7],
    &[1, 3, 8],
    &[2, 4, 6],
];

/// An 8-vertex directed path graph with five maximal cliques: four pendant
/// triangles around a central 4-clique, whose attachment sets force a proper
/// 2-coloring (an even antipodality cycle).
pub fn directed_path_graph_8() -> Graph {
    let cliques: Vec<Vec<usize>> = DIRECTED_PATH_GRAPH_8_CLIQUES
        .iter()
        .map(|k| k.iter().map(|&v| v - 1).collect())
        .collect();
    let refs: Vec<&[usize]> = cliques.iter().map(Vec::as_slice).collect();
    from_cliques(8, &refs)
}

/// Edge list for [`directed_path_graph_8`] in 1-based labels.
pub fn directed_path_graph_8_edge_list() -> String {
    let g = directed_path_graph_8();
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// The smallest hole; rejected by everything.
pub fn four_cycle() -> Graph {
    Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
}

/// A chordal graph that is not a path graph: three branches with equal
/// two-vertex attachment sets into the maximal clique `{0,1,2}`, pairwise
/// antipodal around both shared vertices.
pub fn chordal_non_path_graph() -> Graph {
    // separator clique {0,1,2}; branch t in {0,1,2}: hub 3+2t adjacent to
    // {0,1}, tip 4+2t adjacent to {0, hub} for even t and {1, hub} for odd
    from_cliques(
        9,
        &[
            &[0, 1, 2],
            &[0, 1, 3],
            &[0, 3, 4],
            &[0, 1, 5],
            &[1, 5, 6],
            &[0, 1, 7],
            &[0, 7, 8],
        ],
    )
}

/// The 3-sun: a triangle with one extra vertex glued on each edge. It is a
/// path graph (star the three edge cliques around the triangle clique) but
/// not a directed path graph: the three pendant darts at the center would
/// have to be pairwise opposed.
pub fn three_sun() -> Graph {
    from_cliques(6, &[&[0, 1, 2], &[0, 1, 3], &[1, 2, 4], &[0, 2, 5]])
}
