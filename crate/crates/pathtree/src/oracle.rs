//! Ground truth for differential testing: certificate checkers and
//! brute-force recognizers that enumerate every labeled tree over the maximal
//! cliques (and every orientation, in the directed case).

use std::collections::VecDeque;

use crate::chordal::{is_chordal, maximal_cliques, mcs_order, CliqueSet, CliqueTree};
use crate::error::Error;
use crate::graph::Graph;

/// Default clique-count cap for the undirected oracle (`p^(p-2)` trees).
pub const UNDIRECTED_CLIQUE_CAP: usize = 9;
/// Default cap for the directed oracle (`p^(p-2) * 2^(p-1)` candidates).
pub const DIRECTED_CLIQUE_CAP: usize = 6;

/// True iff `t` is a tree over the cliques and, for every vertex, the cliques
/// containing it induce a path in `t`.
pub fn check_clique_path_tree(g: &Graph, cs: &CliqueSet, t: &CliqueTree) -> Result<bool, Error> {
    if t.nodes != cs.p() {
        return Err(Error::Contract(format!(
            "tree has {} nodes but the graph has {} cliques",
            t.nodes,
            cs.p()
        )));
    }
    if !t.is_tree() {
        return Ok(false);
    }
    let adj = t.adjacency();
    for v in 0..g.n() {
        if !induces_path(cs.containing(v), &adj) {
            return Ok(false);
        }
    }
    // paths are connected, so accepted trees are clique trees
    debug_assert!(crate::chordal::has_induced_subtree_property(cs, t));
    Ok(true)
}

/// Like [`check_clique_path_tree`] but every vertex's path must also run in a
/// single dart direction end to end.
pub fn check_directed_clique_path_tree(
    g: &Graph,
    cs: &CliqueSet,
    t: &CliqueTree,
) -> Result<bool, Error> {
    if !check_clique_path_tree(g, cs, t)? {
        return Ok(false);
    }
    let adj = t.adjacency();
    let darts: std::collections::HashSet<(usize, usize)> = t.edges.iter().copied().collect();
    for v in 0..g.n() {
        let ids = cs.containing(v);
        if ids.len() <= 1 {
            continue;
        }
        let seq = path_order(ids, &adj);
        let forward = seq.windows(2).all(|w| darts.contains(&(w[0], w[1])));
        let backward = seq.windows(2).all(|w| darts.contains(&(w[1], w[0])));
        if !forward && !backward {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Connected, all degrees at most two, and exactly `len - 1` induced edges.
fn induces_path(ids: &[usize], adj: &[Vec<usize>]) -> bool {
    if ids.len() <= 1 {
        return true;
    }
    let inside: std::collections::HashSet<usize> = ids.iter().copied().collect();
    let mut edge_count = 0;
    for &u in ids {
        let deg = adj[u].iter().filter(|w| inside.contains(w)).count();
        if deg > 2 {
            return false;
        }
        edge_count += deg;
    }
    if edge_count != 2 * (ids.len() - 1) {
        return false;
    }
    // connectivity
    let mut seen = std::collections::HashSet::from([ids[0]]);
    let mut queue = VecDeque::from([ids[0]]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if inside.contains(&w) && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen.len() == ids.len()
}

/// Walks the induced path from one endpoint to the other. Assumes
/// [`induces_path`] holds.
fn path_order(ids: &[usize], adj: &[Vec<usize>]) -> Vec<usize> {
    let inside: std::collections::HashSet<usize> = ids.iter().copied().collect();
    let deg = |u: usize| adj[u].iter().filter(|w| inside.contains(w)).count();
    let start = ids
        .iter()
        .copied()
        .find(|&u| deg(u) <= 1)
        .expect("a path has an endpoint");
    let mut seq = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = adj[cur]
            .iter()
            .copied()
            .find(|&w| inside.contains(&w) && w != prev);
        match next {
            Some(w) => {
                seq.push(w);
                prev = cur;
                cur = w;
            }
            None => break,
        }
    }
    debug_assert_eq!(seq.len(), ids.len());
    seq
}

/// A labeled tree on `p >= 2` nodes encoded as `p - 2` digits in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PruferCode(pub Vec<usize>);

impl PruferCode {
    pub fn node_count(&self) -> usize {
        self.0.len() + 2
    }

    /// Standard decoding: repeatedly join the smallest leaf to the next code
    /// digit.
    pub fn decode(&self) -> Vec<(usize, usize)> {
        let p = self.node_count();
        let mut degree = vec![1usize; p];
        for &x in &self.0 {
            degree[x] += 1;
        }
        let mut edges = Vec::with_capacity(p - 1);
        let mut leaves: std::collections::BTreeSet<usize> = (0..p)
            .filter(|&v| degree[v] == 1)
            .collect();
        for &x in &self.0 {
            let leaf = *leaves.iter().next().expect("a tree always has a leaf");
            leaves.remove(&leaf);
            edges.push((leaf.min(x), leaf.max(x)));
            degree[x] -= 1;
            if degree[x] == 1 {
                leaves.insert(x);
            }
        }
        let mut rest = leaves.into_iter();
        let a = rest.next().unwrap();
        let b = rest.next().unwrap();
        edges.push((a.min(b), a.max(b)));
        edges
    }

    /// Inverse of [`PruferCode::decode`]: repeatedly strip the smallest leaf.
    pub fn encode(p: usize, edges: &[(usize, usize)]) -> PruferCode {
        assert!(p >= 2 && edges.len() == p - 1);
        let mut adj = vec![Vec::new(); p];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
        let mut removed = vec![false; p];
        let mut leaves: std::collections::BTreeSet<usize> =
            (0..p).filter(|&v| degree[v] == 1).collect();
        let mut code = Vec::with_capacity(p.saturating_sub(2));
        for _ in 0..p.saturating_sub(2) {
            let leaf = *leaves.iter().next().unwrap();
            leaves.remove(&leaf);
            removed[leaf] = true;
            let parent = adj[leaf]
                .iter()
                .copied()
                .find(|&w| !removed[w])
                .expect("leaf has a live neighbor");
            code.push(parent);
            degree[parent] -= 1;
            if degree[parent] == 1 {
                leaves.insert(parent);
            }
        }
        PruferCode(code)
    }
}

/// Calls `visit` with every labeled tree on `p` nodes until it returns true;
/// reports whether any call did.
fn any_labeled_tree(p: usize, mut visit: impl FnMut(&CliqueTree) -> bool) -> bool {
    if p <= 2 {
        let edges = if p == 2 { vec![(0, 1)] } else { Vec::new() };
        return visit(&CliqueTree {
            nodes: p,
            edges,
            directed: false,
        });
    }
    let mut code = vec![0usize; p - 2];
    loop {
        let tree = CliqueTree {
            nodes: p,
            edges: PruferCode(code.clone()).decode(),
            directed: false,
        };
        if visit(&tree) {
            return true;
        }
        // odometer
        let mut i = 0;
        loop {
            if i == code.len() {
                return false;
            }
            code[i] += 1;
            if code[i] < p {
                break;
            }
            code[i] = 0;
            i += 1;
        }
    }
}

fn cliques_for_oracle(g: &Graph, cap: usize) -> Result<Option<CliqueSet>, Error> {
    if !is_chordal(g) {
        return Ok(None);
    }
    let cs = maximal_cliques(g, &mcs_order(g))?;
    if cs.p() > cap {
        return Err(Error::Capacity(format!(
            "{} cliques exceed the oracle cap of {}",
            cs.p(),
            cap
        )));
    }
    Ok(Some(cs))
}

/// Exhaustive decision procedure for path graphs: some labeled tree over the
/// maximal cliques passes the checker.
pub fn oracle_is_path_graph(g: &Graph) -> Result<bool, Error> {
    oracle_is_path_graph_capped(g, UNDIRECTED_CLIQUE_CAP)
}

pub fn oracle_is_path_graph_capped(g: &Graph, cap: usize) -> Result<bool, Error> {
    let Some(cs) = cliques_for_oracle(g, cap)? else {
        return Ok(false);
    };
    Ok(any_labeled_tree(cs.p(), |t| {
        check_clique_path_tree(g, &cs, t).unwrap()
    }))
}

/// Exhaustive decision procedure for directed path graphs: some labeled tree
/// plus some orientation of its edges passes the directed checker.
pub fn oracle_is_directed_path_graph(g: &Graph) -> Result<bool, Error> {
    oracle_is_directed_path_graph_capped(g, DIRECTED_CLIQUE_CAP)
}

pub fn oracle_is_directed_path_graph_capped(g: &Graph, cap: usize) -> Result<bool, Error> {
    let Some(cs) = cliques_for_oracle(g, cap)? else {
        return Ok(false);
    };
    Ok(any_labeled_tree(cs.p(), |t| {
        // an orientation can only work if the underlying tree already does
        if !check_clique_path_tree(g, &cs, t).unwrap() {
            return false;
        }
        let e = t.edges.len();
        for mask in 0u64..(1u64 << e) {
            let edges: Vec<(usize, usize)> = t
                .edges
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if mask & (1 << i) != 0 { (b, a) } else { (a, b) })
                .collect();
            let cand = CliqueTree {
                nodes: t.nodes,
                edges,
                directed: true,
            };
            if check_directed_clique_path_tree(g, &cs, &cand).unwrap() {
                return true;
            }
        }
        false
    }))
}
