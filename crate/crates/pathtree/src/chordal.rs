//! Chordality testing, maximal clique enumeration and clique tree
//! construction.
//!
//! Maximum cardinality search yields a perfect elimination order exactly on
//! chordal graphs; the maximal cliques then fall out of the order in linear
//! time, and a maximum-weight spanning tree of the clique intersection graph
//! is a clique tree.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// A vertex order; `order[0]` is eliminated first.
#[derive(Clone, Debug)]
pub struct EliminationOrder {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl EliminationOrder {
    fn new(order: Vec<usize>) -> Self {
        let mut pos = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        EliminationOrder { order, pos }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }
}

/// Maximum cardinality search. The reversed visit order is returned as an
/// elimination order; ties are broken towards the smallest vertex id so the
/// result is deterministic.
pub fn mcs_order(g: &Graph) -> EliminationOrder {
    let n = g.n();
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n + 1];
    let mut label = vec![0usize; n];
    let mut picked = vec![false; n];
    for v in 0..n {
        buckets[0].insert(v);
    }
    let mut high = 0usize;
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        while buckets[high].is_empty() {
            high -= 1;
        }
        let v = *buckets[high].iter().next().unwrap();
        buckets[high].remove(&v);
        picked[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !picked[w] {
                buckets[label[w]].remove(&w);
                label[w] += 1;
                buckets[label[w]].insert(w);
                high = high.max(label[w]);
            }
        }
    }
    visit.reverse();
    EliminationOrder::new(visit)
}

/// Checks the perfect elimination property: for every vertex, its neighbors
/// later in the order form a clique. Verified with the standard one-pass
/// subset test against the first later neighbor.
pub fn is_perfect_elimination(g: &Graph, ord: &EliminationOrder) -> bool {
    let n = g.n();
    let mut marker = vec![usize::MAX; n];
    for i in 0..n {
        let v = ord.order()[i];
        // first later neighbor of v
        let mut first: Option<usize> = None;
        for &w in g.neighbors(v) {
            if ord.position(w) > i {
                match first {
                    None => first = Some(w),
                    Some(f) if ord.position(w) < ord.position(f) => first = Some(w),
                    _ => {}
                }
            }
        }
        let Some(u) = first else { continue };
        for &w in g.neighbors(u) {
            marker[w] = v;
        }
        for &w in g.neighbors(v) {
            if w != u && ord.position(w) > i && marker[w] != v {
                return false;
            }
        }
    }
    true
}

/// True iff the graph has no induced cycle of length at least four.
/// Disconnected input is fine: the search order interleaves components.
pub fn is_chordal(g: &Graph) -> bool {
    is_perfect_elimination(g, &mcs_order(g))
}

/// The maximal cliques of a graph, with a per-vertex index of the cliques
/// containing it.
#[derive(Clone, Debug)]
pub struct CliqueSet {
    cliques: Vec<VertexSet>,
    member: Vec<Vec<usize>>,
}

impl CliqueSet {
    pub fn from_cliques(n: usize, cliques: Vec<VertexSet>) -> CliqueSet {
        let mut member = vec![Vec::new(); n];
        for (i, k) in cliques.iter().enumerate() {
            for v in k.iter() {
                member[v].push(i);
            }
        }
        CliqueSet { cliques, member }
    }

    pub fn p(&self) -> usize {
        self.cliques.len()
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn clique(&self, i: usize) -> &VertexSet {
        &self.cliques[i]
    }

    /// Ids of the cliques containing `v`.
    pub fn containing(&self, v: usize) -> &[usize] {
        &self.member[v]
    }

    pub fn n(&self) -> usize {
        self.member.len()
    }
}

/// Lists the maximal cliques of a chordal graph from a perfect elimination
/// order. Candidate `{v} ∪ later-neighbors(v)` survives unless it is swallowed
/// by the candidate of a vertex whose first later neighbor is `v`.
///
/// Returns `Error::NotChordal` when the order fails the elimination check.
pub fn maximal_cliques(g: &Graph, ord: &EliminationOrder) -> Result<CliqueSet, Error> {
    if !is_perfect_elimination(g, ord) {
        return Err(Error::NotChordal);
    }
    let n = g.n();
    // size of the later-neighborhood and the first later neighbor
    let mut later_deg = vec![0usize; n];
    let mut first_later: Vec<Option<usize>> = vec![None; n];
    for v in 0..n {
        let pv = ord.position(v);
        for &w in g.neighbors(v) {
            if ord.position(w) > pv {
                later_deg[v] += 1;
                match first_later[v] {
                    None => first_later[v] = Some(w),
                    Some(f) if ord.position(w) < ord.position(f) => first_later[v] = Some(w),
                    _ => {}
                }
            }
        }
    }
    // largest candidate that hangs off each vertex
    let mut best_child = vec![0usize; n];
    for v in 0..n {
        if let Some(u) = first_later[v] {
            best_child[u] = best_child[u].max(later_deg[v]);
        }
    }
    let mut cliques = Vec::new();
    for &v in ord.order() {
        if best_child[v] > later_deg[v] {
            continue; // contained in an earlier vertex's candidate
        }
        let pv = ord.position(v);
        let mut k = vec![v];
        k.extend(g.neighbors(v).iter().copied().filter(|&w| ord.position(w) > pv));
        cliques.push(VertexSet::from_vec(k));
    }
    Ok(CliqueSet::from_cliques(n, cliques))
}

/// A tree (optionally directed) over the clique ids of some [`CliqueSet`].
/// When `directed` is set, every edge `(a, b)` is a dart from `a` to `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
    pub directed: bool,
}

impl CliqueTree {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn is_tree(&self) -> bool {
        if self.nodes == 0 {
            return self.edges.is_empty();
        }
        if self.edges.len() != self.nodes - 1 {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.nodes];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.nodes
    }

    /// The same tree with every dart flipped.
    pub fn reversed(&self) -> CliqueTree {
        CliqueTree {
            nodes: self.nodes,
            edges: self.edges.iter().map(|&(a, b)| (b, a)).collect(),
            directed: self.directed,
        }
    }
}

/// Builds a clique tree of a chordal graph: a maximum-weight spanning tree of
/// the clique intersection graph, weights being shared-vertex counts. Ties are
/// broken lexicographically on the clique id pair, and the forest is joined
/// with weight-zero links when the graph is disconnected.
pub fn clique_tree(_g: &Graph, cs: &CliqueSet) -> CliqueTree {
    let p = cs.p();
    let mut weight: std::collections::HashMap<(usize, usize), usize> =
        std::collections::HashMap::new();
    for v in 0..cs.n() {
        let ids = cs.containing(v);
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                let key = (ids[i].min(ids[j]), ids[i].max(ids[j]));
                *weight.entry(key).or_insert(0) += 1;
            }
        }
    }
    let mut candidates: Vec<(usize, usize, usize)> =
        weight.into_iter().map(|((a, b), w)| (w, a, b)).collect();
    candidates.sort_unstable_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)));

    let mut parent: Vec<usize> = (0..p).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut edges = Vec::with_capacity(p.saturating_sub(1));
    for (_, a, b) in candidates {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            edges.push((a, b));
        }
    }
    // join remaining forest components (weight-0 links between cliques that
    // share nothing, e.g. across connected components of the graph)
    let mut roots: Vec<usize> = (0..p).filter(|&x| find(&mut parent, x) == x).collect();
    roots.sort_unstable();
    for w in roots.windows(2) {
        let (ra, rb) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
        if ra != rb {
            parent[ra] = rb;
            edges.push((w[0], w[1]));
        }
    }
    CliqueTree {
        nodes: p,
        edges,
        directed: false,
    }
}

/// Clique tree invariant: for every vertex, the tree nodes containing it
/// induce a connected subgraph.
pub fn has_induced_subtree_property(cs: &CliqueSet, t: &CliqueTree) -> bool {
    if !t.is_tree() {
        return false;
    }
    let adj = t.adjacency();
    for v in 0..cs.n() {
        let ids = cs.containing(v);
        if ids.len() <= 1 {
            continue;
        }
        let inside: std::collections::HashSet<usize> = ids.iter().copied().collect();
        let mut seen = std::collections::HashSet::new();
        let mut queue = std::collections::VecDeque::from([ids[0]]);
        seen.insert(ids[0]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if inside.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        if seen.len() != ids.len() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn single_vertex_order() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(mcs_order(&g).order(), &[0]);
    }

    #[test]
    fn trees_are_chordal() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        assert!(is_chordal(&g));
    }

    #[test]
    fn four_cycle_is_not_chordal() {
        assert!(!is_chordal(&cycle(4)));
        assert!(!is_chordal(&cycle(5)));
    }

    #[test]
    fn filled_square_is_chordal() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(is_chordal(&g));
    }

    #[test]
    fn complete_graph_has_one_clique() {
        let g = complete(5);
        let cs = maximal_cliques(&g, &mcs_order(&g)).unwrap();
        assert_eq!(cs.p(), 1);
        assert_eq!(cs.clique(0).len(), 5);
    }

    #[test]
    fn clique_enumeration_rejects_non_chordal() {
        let g = cycle(4);
        assert!(matches!(
            maximal_cliques(&g, &mcs_order(&g)),
            Err(Error::NotChordal)
        ));
    }

    #[test]
    fn path_graph_cliques_are_edges() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let cs = maximal_cliques(&g, &mcs_order(&g)).unwrap();
        assert_eq!(cs.p(), 3);
        for k in cs.cliques() {
            assert_eq!(k.len(), 2);
        }
    }

    #[test]
    fn two_cliques_sharing_a_vertex() {
        // triangles glued at vertex 2
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let cs = maximal_cliques(&g, &mcs_order(&g)).unwrap();
        assert_eq!(cs.p(), 2);
        let t = clique_tree(&g, &cs);
        assert_eq!(t.edges.len(), 1);
        assert!(has_induced_subtree_property(&cs, &t));
    }

    #[test]
    fn clique_tree_of_disconnected_graph() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let cs = maximal_cliques(&g, &mcs_order(&g)).unwrap();
        assert_eq!(cs.p(), 3);
        let t = clique_tree(&g, &cs);
        assert!(t.is_tree());
        assert!(has_induced_subtree_property(&cs, &t));
    }

    #[test]
    fn every_edge_lies_in_some_clique() {
        let g = Graph::from_edges(
            7,
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6)],
        )
        .unwrap();
        assert!(is_chordal(&g));
        let cs = maximal_cliques(&g, &mcs_order(&g)).unwrap();
        for (u, v) in g.edges() {
            assert!(cs
                .cliques()
                .iter()
                .any(|k| k.contains(u) && k.contains(v)));
        }
        let t = clique_tree(&g, &cs);
        assert!(has_induced_subtree_property(&cs, &t));
    }
}
