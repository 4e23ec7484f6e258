//! Turns a valid coloring of the separated components into a clique path
//! tree over all maximal cliques of the graph.
//!
//! Each color class hangs off the separator node: class members are placed
//! with dominating components first; a member glues below the furthest-clique
//! node of the lowest already placed dominator (the members of a class that
//! share an attachment vertex form a dominance chain, so the target is the
//! same for every shared vertex), and a member attached to nothing placed so
//! far starts a fresh branch at the separator. In the directed case, color 0
//! subtrees are oriented towards the separator and color 1 subtrees away
//! from it; a recursive subtree is reversed wholesale when its dart at the
//! separator points the wrong way.

use std::collections::{BTreeSet, HashMap};

use crate::chordal::CliqueTree;
use crate::graph::VertexSet;
use crate::separation::{dominates, dominance_order_key, Component};

pub fn assemble_clique_path_tree(
    sep: &VertexSet,
    comps: &[Component],
    colors: &[u32],
) -> (Vec<VertexSet>, CliqueTree) {
    assemble(sep, comps, colors, false)
}

pub fn assemble_directed_tree(
    sep: &VertexSet,
    comps: &[Component],
    colors: &[u32],
) -> (Vec<VertexSet>, CliqueTree) {
    assemble(sep, comps, colors, true)
}

fn assemble(
    sep: &VertexSet,
    comps: &[Component],
    colors: &[u32],
    directed: bool,
) -> (Vec<VertexSet>, CliqueTree) {
    let mut cliques: Vec<VertexSet> = vec![sep.clone()];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut node_maps: Vec<Vec<usize>> = vec![Vec::new(); comps.len()];

    let palette: BTreeSet<u32> = colors.iter().copied().collect();
    for &color in &palette {
        let mut members: Vec<usize> = (0..comps.len())
            .filter(|&id| colors[id] == color)
            .collect();
        members.sort_by_key(|&id| dominance_order_key(&comps[id]));

        // lowest placed class member containing each attachment vertex
        let mut low: HashMap<usize, usize> = HashMap::new();
        for &id in &members {
            let comp = &comps[id];
            let glue = match comp.w.first().and_then(|v0| low.get(&v0)) {
                Some(&l) => {
                    debug_assert!(dominates(&comps[l], comp));
                    let v0 = comp.w.first().unwrap();
                    node_maps[l][comps[l].f_of(v0).unwrap()]
                }
                None => 0, // fresh branch at the separator
            };
            let mut map = vec![usize::MAX; comp.tree.nodes];
            for (local, slot) in map.iter_mut().enumerate() {
                if local == comp.c_node {
                    *slot = glue;
                } else {
                    *slot = cliques.len();
                    cliques.push(comp.cliques[local].clone());
                }
            }
            let reverse = if directed {
                let inward = comp
                    .tree
                    .edges
                    .iter()
                    .any(|&(_, b)| b == comp.c_node);
                inward != (color == 0)
            } else {
                false
            };
            for &(a, b) in &comp.tree.edges {
                let (ma, mb) = (map[a], map[b]);
                edges.push(if reverse { (mb, ma) } else { (ma, mb) });
            }
            for v in comp.w.iter() {
                low.insert(v, id);
            }
            node_maps[id] = map;
        }
    }

    let tree = CliqueTree {
        nodes: cliques.len(),
        edges,
        directed,
    };
    (cliques, tree)
}
