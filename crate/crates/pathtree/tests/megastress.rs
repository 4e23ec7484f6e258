//! One-shot large differential run; not part of the regular suite.
use pathtree::gen::{random_chordal, random_chordal_with};
use pathtree::oracle::{oracle_is_directed_path_graph, oracle_is_path_graph_capped};
use pathtree::{recognize_directed_path_graph, recognize_path_graph, serialize_graph};

#[test]
#[ignore]
fn megastress() {
    let mut stats = [0usize; 4];
    for seed in 0..12000u64 {
        let s = seed.wrapping_mul(0xB5AD4ECEDA1CE2A9).wrapping_add(7);
        let k = 2 + (seed as usize % 7); // up to 8 cliques
        let g = if seed % 2 == 0 {
            random_chordal(k, 3, s)
        } else {
            random_chordal_with(k, 2 + (seed as usize % 3), 2 + (seed as usize % 4), s)
        };
        let want = oracle_is_path_graph_capped(&g, 8).unwrap();
        let got = recognize_path_graph(&g).is_ok();
        assert_eq!(got, want, "undirected disagreement seed={}\n{}", seed, serialize_graph(&g));
        stats[if want { 0 } else { 1 }] += 1;
        if k <= 6 {
            let want = oracle_is_directed_path_graph(&g).unwrap();
            let got = recognize_directed_path_graph(&g).is_ok();
            assert_eq!(got, want, "directed disagreement seed={}\n{}", seed, serialize_graph(&g));
            stats[if want { 2 } else { 3 }] += 1;
        }
    }
    println!(
        "megastress: undirected {}+/{}-, directed {}+/{}-",
        stats[0], stats[1], stats[2], stats[3]
    );
}
