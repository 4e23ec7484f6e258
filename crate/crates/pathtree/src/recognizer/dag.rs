//! An incremental DAG over one `D` set whose darts witness dominance.
//!
//! Members are inserted with dominating components first. Each insertion
//! probes the current minimal nodes containing one attachment vertex and
//! attaches the new node below its lowest dominating ancestors; whenever a
//! vertex would end up with three mutually undominated nodes, the insertion
//! has found a full antipodal triangle and the whole recognition rejects.

use std::collections::HashMap;

use crate::separation::{dominance_order_key, dominates, Component};
use crate::verdict::{RejectReason, Rejection};

#[derive(Clone, Debug)]
pub struct AntipodalDag {
    /// Component ids in insertion (topological) order.
    nodes: Vec<usize>,
    parents: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
    /// Ancestor bitsets per position, one bit per position.
    anc: Vec<Vec<u64>>,
}

impl AntipodalDag {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, pos: usize) -> usize {
        self.nodes[pos]
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn parents(&self, pos: usize) -> &[usize] {
        &self.parents[pos]
    }

    pub fn children(&self, pos: usize) -> &[usize] {
        &self.children[pos]
    }

    pub fn darts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.children
            .iter()
            .enumerate()
            .flat_map(|(p, ch)| ch.iter().map(move |&c| (p, c)))
    }

    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        self.anc[b][a / 64] & (1u64 << (a % 64)) != 0
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.is_ancestor(a, b) || self.is_ancestor(b, a)
    }
}

fn triangle(stage: &'static str, ids: [usize; 3], v: usize) -> Rejection {
    Rejection::new(
        RejectReason::FullAntipodalTriangle,
        stage,
        format!("components {:?} pairwise antipodal around vertex {}", ids, v),
    )
}

/// Builds the DAG for the members of one `D` set.
pub fn build_antipodal_dag(
    members: &[usize],
    comps: &[Component],
) -> Result<AntipodalDag, Rejection> {
    let mut order: Vec<usize> = members.to_vec();
    order.sort_by_key(|&id| dominance_order_key(&comps[id]));

    let mut dag = AntipodalDag {
        nodes: Vec::with_capacity(order.len()),
        parents: Vec::with_capacity(order.len()),
        children: Vec::with_capacity(order.len()),
        anc: Vec::new(),
    };
    // per attachment vertex: up to two minimal nodes (positions)
    let mut frontier: HashMap<usize, Vec<usize>> = HashMap::new();

    for (k, &id) in order.iter().enumerate() {
        let comp = &comps[id];
        let mut new_parents: Vec<usize> = Vec::new();
        if let Some(v0) = comp.w.first() {
            let front = frontier.get(&v0).cloned().unwrap_or_default();
            match front[..] {
                [] => {}
                [eta] => {
                    new_parents = walk_to_lowest_dominators(&dag, comps, eta, comp, v0)?;
                }
                [eta, eta2] => {
                    let d1 = dominates(&comps[dag.nodes[eta]], comp);
                    let d2 = dominates(&comps[dag.nodes[eta2]], comp);
                    if !d1 && !d2 {
                        return Err(triangle(
                            "antipodal-dag",
                            [id, dag.nodes[eta], dag.nodes[eta2]],
                            v0,
                        ));
                    }
                    if d1 {
                        new_parents.push(eta);
                    }
                    if d2 {
                        new_parents.push(eta2);
                    }
                }
                _ => unreachable!("frontier holds at most two nodes"),
            }
        }
        new_parents.sort_unstable();
        new_parents.dedup();
        for &p in &new_parents {
            dag.children[p].push(k);
        }
        dag.nodes.push(id);
        dag.parents.push(new_parents);
        dag.children.push(Vec::new());

        // frontier maintenance for every attachment vertex of the new node
        for v in comp.w.iter() {
            let front = frontier.entry(v).or_default();
            match front[..] {
                [] => front.push(k),
                [eta] => {
                    if dominates(&comps[dag.nodes[eta]], comp) {
                        *front = vec![k];
                    } else {
                        scan_for_branch_triangle(&dag, comps, eta, comp, id, v)?;
                        front.push(k);
                    }
                }
                [eta, eta2] => {
                    let d1 = dominates(&comps[dag.nodes[eta]], comp);
                    let d2 = dominates(&comps[dag.nodes[eta2]], comp);
                    match (d1, d2) {
                        (false, false) => {
                            return Err(triangle(
                                "antipodal-dag",
                                [id, dag.nodes[eta], dag.nodes[eta2]],
                                v,
                            ));
                        }
                        (true, true) => *front = vec![k],
                        (true, false) => *front = vec![k, eta2],
                        (false, true) => *front = vec![k, eta],
                    }
                }
                _ => unreachable!("frontier holds at most two nodes"),
            }
        }
    }

    // ancestor closure; insertion order is topological
    let words = order.len().div_ceil(64);
    dag.anc = vec![vec![0u64; words]; order.len()];
    for k in 0..order.len() {
        let mut acc = vec![0u64; words];
        for &p in &dag.parents[k] {
            for (a, b) in acc.iter_mut().zip(&dag.anc[p]) {
                *a |= b;
            }
            acc[p / 64] |= 1u64 << (p % 64);
        }
        dag.anc[k] = acc;
    }

    #[cfg(debug_assertions)]
    if dag.len() <= 10 {
        for a in 0..dag.len() {
            for b in 0..dag.len() {
                if a != b && dag.is_ancestor(a, b) {
                    debug_assert!(
                        dominates(&comps[dag.nodes[a]], &comps[dag.nodes[b]]),
                        "ancestor without dominance: {} over {}",
                        dag.nodes[a],
                        dag.nodes[b]
                    );
                }
            }
        }
    }

    Ok(dag)
}

/// Walks child-to-parent from `start` to the lowest ancestors dominating
/// `comp` (there are at most two). Stops at an undominated branching with a
/// triangle rejection, or at a root with no dart to add.
fn walk_to_lowest_dominators(
    dag: &AntipodalDag,
    comps: &[Component],
    start: usize,
    comp: &Component,
    v: usize,
) -> Result<Vec<usize>, Rejection> {
    let mut cur = start;
    loop {
        if dominates(&comps[dag.nodes[cur]], comp) {
            return Ok(vec![cur]);
        }
        match dag.parents[cur][..] {
            [] => return Ok(Vec::new()),
            [p] => cur = p,
            [p, q] => {
                let d1 = dominates(&comps[dag.nodes[p]], comp);
                let d2 = dominates(&comps[dag.nodes[q]], comp);
                if !d1 && !d2 {
                    return Err(triangle(
                        "antipodal-dag",
                        [comp.id, dag.nodes[p], dag.nodes[q]],
                        v,
                    ));
                }
                let mut out = Vec::new();
                if d1 {
                    out.push(p);
                }
                if d2 {
                    out.push(q);
                }
                return Ok(out);
            }
            _ => unreachable!("nodes have at most two parents"),
        }
    }
}

/// Triangle scan used when a second undominated node joins a vertex's
/// frontier: two undominated, mutually unrelated ancestors above the existing
/// chain would complete a full antipodal triangle with the new component.
fn scan_for_branch_triangle(
    dag: &AntipodalDag,
    comps: &[Component],
    start: usize,
    comp: &Component,
    id: usize,
    v: usize,
) -> Result<(), Rejection> {
    let mut cur = start;
    loop {
        match dag.parents[cur][..] {
            [] => return Ok(()),
            [p] => {
                if dominates(&comps[dag.nodes[p]], comp) {
                    return Ok(());
                }
                cur = p;
            }
            [p, q] => {
                let d1 = dominates(&comps[dag.nodes[p]], comp);
                let d2 = dominates(&comps[dag.nodes[q]], comp);
                if !d1 && !d2 {
                    return Err(triangle("antipodal-dag", [id, dag.nodes[p], dag.nodes[q]], v));
                }
                return Ok(());
            }
            _ => unreachable!("nodes have at most two parents"),
        }
    }
}
