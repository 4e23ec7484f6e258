//! Seeded instance generators, built on the subtrees-of-a-tree model: the
//! intersection graph of subtrees of a tree is chordal, of paths in a tree a
//! path graph, of subpaths of a path an interval graph, and of descending
//! paths in a rooted tree a rooted path graph. Everything is deterministic
//! per seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexSet};
use crate::oracle::PruferCode;

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random labeled tree, as adjacency lists.
fn random_tree(rng: &mut ChaCha8Rng, size: usize) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); size];
    if size == 2 {
        adj[0].push(1);
        adj[1].push(0);
    } else if size > 2 {
        let code: Vec<usize> = (0..size - 2).map(|_| rng.gen_range(0..size)).collect();
        for (a, b) in PruferCode(code).decode() {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    adj
}

/// A random connected subtree grown from a random start node.
fn random_subtree(rng: &mut ChaCha8Rng, adj: &[Vec<usize>], max_size: usize) -> VertexSet {
    let start = rng.gen_range(0..adj.len());
    let target = rng.gen_range(1..=max_size.max(1));
    let mut chosen = vec![start];
    let mut in_set = std::collections::HashSet::from([start]);
    let mut frontier: Vec<usize> = adj[start].clone();
    while chosen.len() < target && !frontier.is_empty() {
        let i = rng.gen_range(0..frontier.len());
        let v = frontier.swap_remove(i);
        if in_set.insert(v) {
            chosen.push(v);
            frontier.extend(adj[v].iter().filter(|w| !in_set.contains(w)));
        }
    }
    VertexSet::from_vec(chosen)
}

/// A random path in the tree: a non-revisiting walk of at most `max_len`
/// edges from a random start.
fn random_walk_path(rng: &mut ChaCha8Rng, adj: &[Vec<usize>], max_len: usize) -> VertexSet {
    let start = rng.gen_range(0..adj.len());
    let len = rng.gen_range(0..=max_len);
    let mut nodes = vec![start];
    let mut cur = start;
    let mut prev = usize::MAX;
    for _ in 0..len {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&w| w != prev).collect();
        if next.is_empty() {
            break;
        }
        let w = next[rng.gen_range(0..next.len())];
        nodes.push(w);
        prev = cur;
        cur = w;
    }
    VertexSet::from_vec(nodes)
}

fn intersection_graph(sets: &[VertexSet]) -> Graph {
    let mut edges = Vec::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i].intersects(&sets[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(sets.len(), &edges).expect("intersection graphs are simple")
}

/// A random chordal graph with at most `k` maximal cliques: the intersection
/// graph of `k * width` random subtrees of a random tree on `k` nodes.
///
/// The size distribution is deliberately bimodal: a few hub subtrees cover
/// most of the host while the rest stay small. Uniform sizes produce almost
/// exclusively path graphs; hubs overlapping several shallow branches are
/// what creates rejectable instances.
pub fn random_chordal(k: usize, width: usize, seed: u64) -> Graph {
    random_chordal_with(k, width, 3, seed)
}

/// [`random_chordal`] with an explicit size bound for the non-hub subtrees.
pub fn random_chordal_with(k: usize, width: usize, max_subtree: usize, seed: u64) -> Graph {
    assert!(k >= 1);
    let mut rng = rng_for(seed);
    let adj = random_tree(&mut rng, k);
    let count = (k * width).max(1);
    let sets: Vec<VertexSet> = (0..count)
        .map(|_| {
            let cap = if rng.gen_ratio(1, 4) { k } else { max_subtree.min(k) };
            random_subtree(&mut rng, &adj, cap)
        })
        .collect();
    intersection_graph(&sets)
}

/// A guaranteed path graph on `2k` vertices: paths in a random tree on `k`
/// nodes (so at most `k` maximal cliques).
pub fn random_path_graph_positive(k: usize, seed: u64) -> Graph {
    assert!(k >= 1);
    random_path_graph_with(k, 2 * k, 3, seed)
}

/// The general path-in-a-tree engine: `paths` random short paths in a random
/// host tree on `host` nodes. Short walks keep the graph sparse, which is
/// what the scaling checks want.
pub fn random_path_graph_with(host: usize, paths: usize, max_len: usize, seed: u64) -> Graph {
    assert!(host >= 1 && paths >= 1);
    let mut rng = rng_for(seed);
    let adj = random_tree(&mut rng, host);
    let sets: Vec<VertexSet> = (0..paths)
        .map(|_| random_walk_path(&mut rng, &adj, max_len))
        .collect();
    intersection_graph(&sets)
}

/// A guaranteed interval graph on `2k` vertices: subpaths of a path on `k`
/// nodes.
pub fn random_interval_graph(k: usize, seed: u64) -> Graph {
    assert!(k >= 1);
    let mut rng = rng_for(seed);
    let sets: Vec<VertexSet> = (0..2 * k)
        .map(|_| {
            let a = rng.gen_range(0..k);
            let span = rng.gen_range(0..=2usize.min(k - 1));
            let b = (a + span).min(k - 1);
            (a..=b).collect()
        })
        .collect();
    intersection_graph(&sets)
}

/// A guaranteed rooted path graph on `2k` vertices: descending paths in a
/// random tree on `k` nodes rooted at node 0.
pub fn random_rooted_path_positive(k: usize, seed: u64) -> Graph {
    assert!(k >= 1);
    let mut rng = rng_for(seed);
    let adj = random_tree(&mut rng, k);
    // orient away from the root
    let mut children = vec![Vec::new(); k];
    let mut seen = vec![false; k];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                children[u].push(w);
                queue.push_back(w);
            }
        }
    }
    let sets: Vec<VertexSet> = (0..2 * k)
        .map(|_| {
            let mut cur = rng.gen_range(0..k);
            let len = rng.gen_range(0..=3usize);
            let mut nodes = vec![cur];
            for _ in 0..len {
                if children[cur].is_empty() {
                    break;
                }
                cur = children[cur][rng.gen_range(0..children[cur].len())];
                nodes.push(cur);
            }
            VertexSet::from_vec(nodes)
        })
        .collect();
    intersection_graph(&sets)
}
