//! Property tests for the structural invariants: chordality against a brute
//! hole search, clique enumeration soundness, the clique tree subtree
//! property, attachment-table geometry, relation algebra symmetries, and the
//! palette discipline of the coloring.

use proptest::prelude::*;

use pathtree::chordal::{
    clique_tree, has_induced_subtree_property, is_chordal, maximal_cliques, mcs_order,
};
use pathtree::gen::{random_chordal, random_path_graph_positive};
use pathtree::graph::{connected_components, induced_subgraph, parse_graph, serialize_graph};
use pathtree::recognizer::{recognize_with, Mode, Options};
use pathtree::separation::{
    attach_tree, compare, compute_f_table, find_clique_separator, split, Component, Relation,
};
use pathtree::{recognize_path_graph, Graph, VertexSet};

/// Dense encoding of a small graph: one bit per vertex pair.
fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask & (1 << bit) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// A hole is an induced cycle on four or more vertices: some vertex subset
/// whose induced subgraph is connected and 2-regular.
fn has_hole(g: &Graph) -> bool {
    let n = g.n();
    for mask in 0u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if verts.len() < 4 {
            continue;
        }
        let set = VertexSet::from_vec(verts.clone());
        let sub = induced_subgraph(g, &set).unwrap();
        if sub.graph.m() != verts.len() {
            continue;
        }
        if (0..verts.len()).all(|v| sub.graph.degree(v) == 2)
            && connected_components(&sub.graph).len() == 1
        {
            return true;
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn chordality_matches_brute_hole_search(n in 1usize..9, mask in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        prop_assert_eq!(is_chordal(&g), !has_hole(&g));
    }

    #[test]
    fn parse_serialize_parse_is_a_fixed_point(n in 2usize..9, mask in any::<u64>(), shuffle in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        if g.m() == 0 {
            return Ok(());
        }
        // an arbitrary text for the graph: permuted labels, scrambled lines
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = shuffle | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let mut lines: Vec<String> = g.edges().iter().map(|&(u, v)| format!("{} {}", perm[u], perm[v])).collect();
        for i in (1..lines.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            lines.swap(i, (state >> 33) as usize % (i + 1));
        }
        let text = lines.join("\n");

        let g1 = parse_graph(&text).unwrap();
        let canon = serialize_graph(&g1);
        let g2 = parse_graph(&canon).unwrap();
        // the canonical text is a fixed point of parse-then-serialize
        prop_assert_eq!(&g2, &g1);
        prop_assert_eq!(serialize_graph(&g2), canon);
    }

    #[test]
    fn components_partition_the_vertices(n in 1usize..9, mask in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        let comps = connected_components(&g);
        let mut seen = vec![false; n];
        for c in &comps {
            for v in c.iter() {
                prop_assert!(!seen[v]);
                seen[v] = true;
            }
        }
        prop_assert!(seen.into_iter().all(|b| b));
        // no edge crosses components
        for (u, v) in g.edges() {
            prop_assert!(comps.iter().any(|c| c.contains(u) && c.contains(v)));
        }
    }
}

#[test]
fn cliques_are_maximal_and_cover_all_edges() {
    for seed in 0..80u64 {
        let g = random_chordal(2 + (seed as usize % 7), 2, seed);
        let cs = maximal_cliques(&g, &mcs_order(&g)).unwrap();
        assert!(cs.p() <= g.n().max(1));
        for (u, v) in g.edges() {
            assert!(cs.cliques().iter().any(|k| k.contains(u) && k.contains(v)));
        }
        for k in cs.cliques() {
            // every pair inside is an edge
            let vs: Vec<usize> = k.iter().collect();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    assert!(g.has_edge(vs[i], vs[j]));
                }
            }
            // no outside vertex extends the clique
            for w in 0..g.n() {
                if !k.contains(w) {
                    assert!(!k.iter().all(|x| g.has_edge(w, x)));
                }
            }
        }
        let t = clique_tree(&g, &cs);
        assert!(has_induced_subtree_property(&cs, &t));
    }
}

/// Splits a graph at its heuristically chosen separator and attaches the
/// recursive certificates, or returns `None` for base cases.
fn split_and_attach(g: &Graph) -> Option<(VertexSet, Vec<Component>)> {
    if connected_components(g).len() != 1 || !is_chordal(g) {
        return None;
    }
    let cs = maximal_cliques(g, &mcs_order(g)).unwrap();
    let t = clique_tree(g, &cs);
    let sep_id = find_clique_separator(&cs, &t)?;
    let sep = cs.clique(sep_id).clone();
    let mut comps = Vec::new();
    for seed in split(g, &sep).unwrap() {
        let ind = induced_subgraph(g, &seed.ambient).unwrap();
        let cert = recognize_path_graph(&ind.graph).ok()?;
        let global: Vec<VertexSet> = cert
            .cliques
            .iter()
            .map(|k| k.iter().map(|v| ind.to_super[v]).collect())
            .collect();
        let mut comp = attach_tree(seed, &sep, global, cert.tree);
        compute_f_table(&mut comp, &sep);
        comps.push(comp);
    }
    Some((sep, comps))
}

#[test]
fn attachment_sets_are_bounded_by_the_graph_size() {
    for seed in 0..120u64 {
        let g = random_chordal(3 + (seed as usize % 6), 2, seed);
        if let Some((_, comps)) = split_and_attach(&g) {
            let total: usize = comps.iter().map(|c| c.w.len()).sum();
            assert!(total <= g.m() + g.n(), "seed {}: {} > m+n", seed, total);
        }
    }
}

#[test]
fn furthest_clique_entries_span_exact_tree_paths() {
    for seed in 0..120u64 {
        let g = random_chordal(3 + (seed as usize % 6), 2, seed);
        let Some((_, comps)) = split_and_attach(&g) else {
            continue;
        };
        for comp in &comps {
            let adj = comp.tree.adjacency();
            for v in comp.w.iter() {
                let f_node = comp.f_of(v).expect("attached vertices have entries");
                // walk the unique tree path from the separator node to f_node
                let path = tree_path(&adj, comp.c_node, f_node);
                let holding: Vec<usize> = (0..comp.tree.nodes)
                    .filter(|&x| comp.cliques[x].contains(v))
                    .collect();
                let mut path_sorted = path.clone();
                path_sorted.sort_unstable();
                assert_eq!(
                    path_sorted, holding,
                    "seed {}: vertex {} does not span the path to its furthest clique",
                    seed, v
                );
            }
            for v in 0..g.n() {
                if !comp.w.contains(v) {
                    assert_eq!(comp.f_of(v), None);
                }
            }
        }
    }
}

fn tree_path(adj: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; adj.len()];
    let mut seen = vec![false; adj.len()];
    seen[from] = true;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

#[test]
fn compare_is_antisymmetric_in_dominance_and_symmetric_otherwise() {
    for seed in 0..120u64 {
        let g = random_chordal(3 + (seed as usize % 6), 2, seed);
        let Some((_, comps)) = split_and_attach(&g) else {
            continue;
        };
        for a in 0..comps.len() {
            for b in 0..comps.len() {
                if a == b {
                    continue;
                }
                let ab = compare(&comps[a], &comps[b]);
                let ba = compare(&comps[b], &comps[a]);
                let expected = match ab {
                    Relation::LeftDominates => Relation::RightDominates,
                    Relation::RightDominates => Relation::LeftDominates,
                    sym => sym,
                };
                assert_eq!(ba, expected);
            }
        }
    }
}

#[test]
fn colors_respect_the_home_palette() {
    for seed in 0..150u64 {
        let g = random_chordal(3 + (seed as usize % 5), 3, seed);
        let out = recognize_with(
            &g,
            Mode::Undirected,
            &Options {
                forced_separator: None,
                trace: true,
            },
        )
        .unwrap();
        if out.verdict.is_err() {
            continue;
        }
        for t in &out.trace {
            let r = t.uppers.len();
            let spare = (r + 1) as u32;
            for (i, members) in t.d_single.iter().enumerate() {
                for &id in members {
                    let c = t.colors[id];
                    if t.uppers[i] == id {
                        assert_eq!(c, (i + 1) as u32, "upper off-palette");
                    } else {
                        assert!(
                            c == (i + 1) as u32 || c == spare,
                            "seed {}: member {} of set {} got color {}",
                            seed,
                            id,
                            i,
                            c
                        );
                    }
                }
            }
            for ((i, j), members) in &t.d_pair {
                for &id in members {
                    let c = t.colors[id];
                    assert!(
                        c == (*i + 1) as u32 || c == (*j + 1) as u32,
                        "seed {}: pair member {} got color {}",
                        seed,
                        id,
                        c
                    );
                }
            }
            // antipodal members of one set end up with different colors
            for (a, b, rel) in &t.relations {
                if *rel != Relation::Antipodal {
                    continue;
                }
                let same_single = t
                    .d_single
                    .iter()
                    .any(|m| m.contains(a) && m.contains(b));
                let same_pair = t
                    .d_pair
                    .iter()
                    .any(|(_, m)| m.contains(a) && m.contains(b));
                if same_single || same_pair {
                    assert_ne!(
                        t.colors[*a], t.colors[*b],
                        "seed {}: antipodal members {} and {} share a color",
                        seed, a, b
                    );
                }
            }
        }
    }
}

#[test]
fn positives_recurse_without_violating_any_internal_assertion() {
    // debug assertions inside the recognizer certify every assembled tree
    for seed in 0..60u64 {
        let g = random_path_graph_positive(2 + (seed as usize % 10), seed);
        assert!(recognize_path_graph(&g).is_ok());
    }
}

#[test]
fn long_interval_chains_recurse_cleanly() {
    // a plain path: one clique per edge, recursion halves at every level
    let n = 5000;
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    let g = Graph::from_edges(n, &edges).unwrap();
    let cert = recognize_path_graph(&g).unwrap();
    assert_eq!(cert.p(), n - 1);
    assert!(cert.tree.is_tree());
}

#[test]
fn prufer_roundtrip_on_seven_and_eight_nodes() {
    use pathtree::oracle::PruferCode;
    for p in [7usize, 8] {
        let total = p.pow(p as u32 - 2);
        let mut code = vec![0usize; p - 2];
        for _ in 0..total {
            let pc = PruferCode(code.clone());
            assert_eq!(PruferCode::encode(p, &pc.decode()), pc);
            let mut i = 0;
            while i < code.len() {
                code[i] += 1;
                if code[i] < p {
                    break;
                }
                code[i] = 0;
                i += 1;
            }
        }
    }
}
