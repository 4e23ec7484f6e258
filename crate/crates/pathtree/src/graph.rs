//! Simple undirected graphs with dense integer vertex ids, plus the edge-list
//! text format used by the command line tools.

use std::collections::HashMap;
use std::fmt;

use crate::error::Error;

/// A sorted set of vertex ids.
///
/// Used for separators, private vertex sets, attachment sets and cliques.
/// Membership queries are binary searches, set operations are merges.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from arbitrary input, sorting and deduplicating.
    pub fn from_vec(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, usize>> {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        VertexSet(out)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        VertexSet::from_vec(out)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::from_vec(v)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::from_vec(iter.into_iter().collect())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "}}")
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Immutable after construction; adjacency lists are kept sorted so that
/// membership queries and merges are cheap.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, Error> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::Contract(format!("loop edge at vertex {}", u)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Contract("duplicate edge".into()));
            }
        }
        Ok(Graph {
            n,
            m: edges.len(),
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

/// Parses the edge-list text format: one edge per line as two whitespace
/// separated non-negative integers; `#` starts a comment line; blank lines
/// are skipped. Vertex labels are renumbered densely in order of first
/// appearance.
pub fn parse_graph(text: &str) -> Result<Graph, Error> {
    parse_graph_labeled(text).map(|(g, _)| g)
}

/// Like [`parse_graph`], additionally returning the original label of every
/// renumbered vertex, so emitted certificates can use the input's names.
pub fn parse_graph_labeled(text: &str) -> Result<(Graph, Vec<u64>), Error> {
    let mut ids: HashMap<u64, usize> = HashMap::new();
    let mut labels: Vec<u64> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let stripped = raw.trim();
        if stripped.is_empty() || stripped.starts_with('#') {
            continue;
        }
        let mut tokens = stripped.split_whitespace();
        let a = tokens.next();
        let b = tokens.next();
        let extra = tokens.next();
        let (a, b) = match (a, b, extra) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected two integer tokens, got `{}`", stripped),
                })
            }
        };
        let parse_tok = |t: &str| -> Result<u64, Error> {
            t.parse::<u64>().map_err(|_| Error::Parse {
                line,
                msg: format!("invalid vertex token `{}`", t),
            })
        };
        let la = parse_tok(a)?;
        let lb = parse_tok(b)?;
        if la == lb {
            return Err(Error::Parse {
                line,
                msg: format!("loop edge at vertex {}", la),
            });
        }
        let mut id_of = |label: u64| -> usize {
            *ids.entry(label).or_insert_with(|| {
                labels.push(label);
                labels.len() - 1
            })
        };
        let u = id_of(la);
        let v = id_of(lb);
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(Error::Parse {
                line,
                msg: format!("duplicate edge {} {}", la, lb),
            });
        }
        edges.push(key);
    }

    let g = Graph::from_edges(labels.len(), &edges)?;
    Ok((g, labels))
}

/// Canonical edge-list serialization: edges are scheduled so that vertices
/// make their first appearance in id order whenever the graph allows it
/// (which every graph produced by [`parse_graph`] does). Re-parsing such
/// output reproduces the graph exactly, so parse-serialize-parse is stable.
/// Isolated vertices have no representation in the format and are dropped.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    let mut introduced = vec![false; g.n()];
    let mut emitted: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    let push = |line: (usize, usize),
                    out: &mut String,
                    introduced: &mut Vec<bool>,
                    emitted: &mut std::collections::HashSet<(usize, usize)>| {
        let key = (line.0.min(line.1), line.0.max(line.1));
        if emitted.insert(key) {
            out.push_str(&format!("{} {}\n", line.0, line.1));
            introduced[line.0] = true;
            introduced[line.1] = true;
        }
    };
    for v in 0..g.n() {
        if !introduced[v] && g.degree(v) > 0 {
            // introduce through the smallest already known neighbor, or
            // together with the smallest larger one
            let smaller = g.neighbors(v).iter().copied().find(|&u| u < v);
            match smaller {
                Some(u) => push((u, v), &mut out, &mut introduced, &mut emitted),
                None => {
                    let w = g.neighbors(v)[0];
                    push((v, w), &mut out, &mut introduced, &mut emitted);
                }
            }
        }
        for &u in g.neighbors(v) {
            if u < v {
                push((u, v), &mut out, &mut introduced, &mut emitted);
            }
        }
    }
    out
}

/// An induced subgraph together with the vertex maps in both directions.
pub struct InducedSubgraph {
    pub graph: Graph,
    /// Maps a subgraph vertex back to the ambient graph.
    pub to_super: Vec<usize>,
    /// Maps an ambient vertex into the subgraph, if present.
    pub to_sub: Vec<Option<usize>>,
}

/// The subgraph induced by `s`, with vertices renumbered to `0..s.len()` in
/// ascending order of their original ids.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<InducedSubgraph, Error> {
    let mut to_sub: Vec<Option<usize>> = vec![None; g.n()];
    let mut to_super = Vec::with_capacity(s.len());
    for (i, v) in s.iter().enumerate() {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange(v));
        }
        to_sub[v] = Some(i);
        to_super.push(v);
    }
    let mut edges = Vec::new();
    for (i, v) in s.iter().enumerate() {
        for &w in g.neighbors(v) {
            if w > v {
                if let Some(j) = to_sub[w] {
                    edges.push((i, j));
                }
            }
        }
    }
    let graph = Graph::from_edges(s.len(), &edges)?;
    Ok(InducedSubgraph {
        graph,
        to_super,
        to_sub,
    })
}

/// Connected components as sorted vertex sets, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([start]);
        seen[start] = true;
        let mut comp = vec![start];
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        out.push(VertexSet::from_vec(comp));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_two_edge_path() {
        let g = parse_graph("1 2\n2 3").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn rejects_loop() {
        let err = parse_graph("1 1").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn rejects_duplicate_edge() {
        let err = parse_graph("1 2\n2 1").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn rejects_malformed_line() {
        assert!(parse_graph("1 2 3").is_err());
        assert!(parse_graph("a b").is_err());
    }

    #[test]
    fn skips_comments_and_blanks() {
        let g = parse_graph("# header\n\n0 7\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn first_appearance_renumbering() {
        let (g, labels) = parse_graph_labeled("10 3\n3 7").unwrap();
        assert_eq!(labels, vec![10, 3, 7]);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn induced_of_triangle() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let sub = induced_subgraph(&k3, &VertexSet::from_vec(vec![0, 1])).unwrap();
        assert_eq!(sub.graph.n(), 2);
        assert_eq!(sub.graph.m(), 1);
    }

    #[test]
    fn induced_of_everything_is_identity() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let all: VertexSet = (0..4).collect();
        let sub = induced_subgraph(&g, &all).unwrap();
        assert_eq!(sub.graph, g);
    }

    #[test]
    fn components_of_edgeless_graph() {
        let g = Graph::from_edges(3, &[]).unwrap();
        let comps = connected_components(&g);
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn connected_graph_is_one_component() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(connected_components(&g).len(), 1);
    }
}
