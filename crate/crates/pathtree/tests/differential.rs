//! Differential tests: the recognizers against the enumeration oracles on
//! seeded random chordal instances, plus the class-chain sanity checks.

use pathtree::gen::{
    random_chordal, random_interval_graph, random_path_graph_positive, random_rooted_path_positive,
};
use pathtree::oracle::{
    check_clique_path_tree, check_directed_clique_path_tree, oracle_is_directed_path_graph,
    oracle_is_path_graph,
};
use pathtree::{
    recognize_directed_path_graph, recognize_path_graph, serialize_graph, CliqueSet, Graph,
};

fn assert_agreement_undirected(g: &Graph, label: &str) {
    let expected = oracle_is_path_graph(g).unwrap();
    match recognize_path_graph(g) {
        Ok(cert) => {
            assert!(
                expected,
                "{}: accepted a non-path graph\n{}",
                label,
                serialize_graph(g)
            );
            let cs = CliqueSet::from_cliques(g.n(), cert.cliques.clone());
            assert!(
                check_clique_path_tree(g, &cs, &cert.tree).unwrap(),
                "{}: certificate failed the checker\n{}",
                label,
                serialize_graph(g)
            );
        }
        Err(rej) => {
            assert!(
                !expected,
                "{}: rejected a path graph ({})\n{}",
                label,
                rej,
                serialize_graph(g)
            );
        }
    }
}

fn assert_agreement_directed(g: &Graph, label: &str) {
    let expected = oracle_is_directed_path_graph(g).unwrap();
    match recognize_directed_path_graph(g) {
        Ok(cert) => {
            assert!(
                expected,
                "{}: accepted a non directed path graph\n{}",
                label,
                serialize_graph(g)
            );
            let cs = CliqueSet::from_cliques(g.n(), cert.cliques.clone());
            assert!(
                check_directed_clique_path_tree(g, &cs, &cert.tree).unwrap(),
                "{}: directed certificate failed the checker\n{}",
                label,
                serialize_graph(g)
            );
            // class inclusion
            assert!(
                recognize_path_graph(g).is_ok(),
                "{}: directed accept but undirected reject\n{}",
                label,
                serialize_graph(g)
            );
        }
        Err(rej) => {
            assert!(
                !expected,
                "{}: rejected a directed path graph ({})\n{}",
                label,
                rej,
                serialize_graph(g)
            );
        }
    }
}

#[test]
fn recognizer_matches_oracle_on_random_chordal_instances() {
    for seed in 0..150u64 {
        let k = 2 + (seed as usize % 6); // up to 7 cliques
        let g = random_chordal(k, 2, seed);
        assert_agreement_undirected(&g, &format!("chordal k={} seed={}", k, seed));
    }
}

#[test]
fn directed_recognizer_matches_oracle_on_random_chordal_instances() {
    for seed in 0..100u64 {
        let k = 2 + (seed as usize % 5); // up to 6 cliques
        let g = random_chordal(k, 2, seed);
        assert_agreement_directed(&g, &format!("chordal k={} seed={}", k, seed));
    }
}

#[test]
fn positives_are_always_accepted() {
    for seed in 0..60u64 {
        let k = 2 + (seed as usize % 8);
        let g = random_path_graph_positive(k, seed);
        assert!(
            recognize_path_graph(&g).is_ok(),
            "path positive k={} seed={} rejected\n{}",
            k,
            seed,
            serialize_graph(&g)
        );
        let g = random_interval_graph(k, seed);
        assert!(
            recognize_path_graph(&g).is_ok() && recognize_directed_path_graph(&g).is_ok(),
            "interval positive k={} seed={} rejected",
            k,
            seed
        );
        let g = random_rooted_path_positive(k, seed);
        assert!(
            recognize_directed_path_graph(&g).is_ok(),
            "rooted positive k={} seed={} rejected\n{}",
            k,
            seed,
            serialize_graph(&g)
        );
    }
}

#[test]
fn relabeling_does_not_change_the_verdict() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    for seed in 0..40u64 {
        let k = 2 + (seed as usize % 6);
        let g = random_chordal(k, 2, seed);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng);
        let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::from_edges(g.n(), &edges).unwrap();
        assert_eq!(
            recognize_path_graph(&g).is_ok(),
            recognize_path_graph(&h).is_ok(),
            "relabeling changed the undirected verdict (seed {})",
            seed
        );
        assert_eq!(
            recognize_directed_path_graph(&g).is_ok(),
            recognize_directed_path_graph(&h).is_ok(),
            "relabeling changed the directed verdict (seed {})",
            seed
        );
    }
}

/// A chordal graph from a different family than the subtree model: a random
/// graph made chordal by playing the elimination game along 0..n.
fn filled_chordal(n: usize, threshold: u32, seed: u64) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut adj = vec![vec![false; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_range(0..100u32) < threshold {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
    }
    for v in 0..n {
        let later: Vec<usize> = (v + 1..n).filter(|&w| adj[v][w]).collect();
        for i in 0..later.len() {
            for j in i + 1..later.len() {
                adj[later[i]][later[j]] = true;
                adj[later[j]][later[i]] = true;
            }
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u][v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[test]
fn recognizers_match_oracles_on_fill_in_chordal_graphs() {
    use pathtree::chordal::{maximal_cliques, mcs_order};
    use pathtree::oracle::{
        oracle_is_directed_path_graph_capped, oracle_is_path_graph_capped,
    };
    let mut used_u = 0;
    let mut used_d = 0;
    for seed in 0..600u64 {
        let n = 5 + (seed as usize % 6);
        let threshold = 20 + (seed as u32 % 40);
        let g = filled_chordal(n, threshold, seed);
        let p = maximal_cliques(&g, &mcs_order(&g)).unwrap().p();
        if p <= 8 {
            used_u += 1;
            let want = oracle_is_path_graph_capped(&g, 8).unwrap();
            assert_eq!(
                recognize_path_graph(&g).is_ok(),
                want,
                "fill-in disagreement at seed {}\n{}",
                seed,
                serialize_graph(&g)
            );
        }
        if p <= 6 {
            used_d += 1;
            let want = oracle_is_directed_path_graph_capped(&g, 6).unwrap();
            assert_eq!(
                recognize_directed_path_graph(&g).is_ok(),
                want,
                "directed fill-in disagreement at seed {}\n{}",
                seed,
                serialize_graph(&g)
            );
        }
    }
    assert!(used_u > 200 && used_d > 100, "family too thin: {used_u}/{used_d}");
}

/// Both classes are hereditary: an intersection representation restricts to
/// any induced subgraph. Every accepted instance must therefore keep being
/// accepted after deleting vertices — a false-reject detector that works far
/// beyond the oracle's clique cap, since accepts are already certified by
/// the checker.
#[test]
fn accepted_instances_stay_accepted_under_vertex_deletion() {
    use pathtree::graph::induced_subgraph;
    use rand::{seq::SliceRandom, Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5EED);
    let mut checked = 0;
    for seed in 0..200u64 {
        let k = 6 + (seed as usize % 13); // up to 18 cliques, beyond the oracle
        let g = if seed % 2 == 0 {
            random_chordal(k, 3, 0xD1CE ^ seed)
        } else {
            random_path_graph_positive(k, 0xD1CE ^ seed)
        };
        let undirected = recognize_path_graph(&g).is_ok();
        let directed = recognize_directed_path_graph(&g).is_ok();
        if !undirected && !directed {
            continue;
        }
        for _ in 0..4 {
            let keep_count = rng.gen_range(1..=g.n().max(1));
            let mut verts: Vec<usize> = (0..g.n()).collect();
            verts.shuffle(&mut rng);
            verts.truncate(keep_count);
            let keep: pathtree::VertexSet = verts.into_iter().collect();
            let sub = induced_subgraph(&g, &keep).unwrap().graph;
            if undirected {
                assert!(
                    recognize_path_graph(&sub).is_ok(),
                    "hereditary violation (undirected) at seed {}\nparent:\n{}\nsub:\n{}",
                    seed,
                    serialize_graph(&g),
                    serialize_graph(&sub)
                );
            }
            if directed {
                assert!(
                    recognize_directed_path_graph(&sub).is_ok(),
                    "hereditary violation (directed) at seed {}\nparent:\n{}\nsub:\n{}",
                    seed,
                    serialize_graph(&g),
                    serialize_graph(&sub)
                );
            }
            checked += 1;
        }
    }
    assert!(checked > 300, "too few accepted parents: {checked}");
}

#[test]
fn directed_oracle_implies_undirected_oracle() {
    for seed in 0..60u64 {
        let g = random_chordal(2 + (seed as usize % 5), 3, 0xBEEF ^ seed);
        if oracle_is_directed_path_graph(&g).unwrap() {
            assert!(oracle_is_path_graph(&g).unwrap(), "monotonicity broken at seed {}", seed);
        }
    }
}

#[test]
fn three_sun_separates_the_two_classes() {
    let g = pathtree::samples::three_sun();
    assert!(oracle_is_path_graph(&g).unwrap());
    assert!(!oracle_is_directed_path_graph(&g).unwrap());
    assert!(recognize_path_graph(&g).is_ok());
    assert!(recognize_directed_path_graph(&g).is_err());
}

#[test]
fn accepted_directed_trees_survive_reversal() {
    for seed in 0..30u64 {
        let g = random_rooted_path_positive(3 + (seed as usize % 5), seed);
        if let Ok(cert) = recognize_directed_path_graph(&g) {
            let cs = CliqueSet::from_cliques(g.n(), cert.cliques.clone());
            let reversed = cert.tree.reversed();
            assert!(check_directed_clique_path_tree(&g, &cs, &reversed).unwrap());
        }
    }
}
