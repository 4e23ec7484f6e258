//! The upper set and the dominance partition of the separated components.

use std::collections::{BTreeMap, HashMap};

use crate::separation::{dominance_order_key, dominates, Component};
use crate::verdict::{RejectReason, Rejection};

/// Where a component representative landed in the partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Home {
    /// The i-th upper itself.
    Upper(usize),
    /// Dominated by exactly the i-th upper.
    Single(usize),
    /// Dominated by exactly the uppers `i < j`.
    Pair(usize, usize),
    /// Empty attachment set; unattached to everything.
    Free,
}

/// The ordered upper set with the derived `D` sets and the per-vertex upper
/// incidence used by the coloring steps.
#[derive(Clone, Debug)]
pub struct PartitionState {
    /// Component ids of the uppers, ordered; index `i` is the color seed `i`.
    pub uppers: Vec<usize>,
    /// For each vertex of the ambient graph, the upper indexes whose
    /// attachment set contains it. At most two on any accepted input.
    pub u_of_v: Vec<Vec<usize>>,
    /// Members of each `D_i`, including the upper itself.
    pub d_single: Vec<Vec<usize>>,
    /// Members of each `D_{i,j}` for `i < j`.
    pub d_pair: BTreeMap<(usize, usize), Vec<usize>>,
    pub home: HashMap<usize, Home>,
    /// Representatives with an empty attachment set.
    pub free: Vec<usize>,
}

/// Builds the partition over the class representatives.
///
/// Representatives are processed with dominating components first, so every
/// potential dominator of a component is already registered as an upper when
/// the component is reached; the candidates are then exactly the registered
/// uppers containing any single attachment vertex. A third upper meeting at
/// one vertex is a full antipodal triangle.
pub fn build_partition(
    reps: &[usize],
    comps: &[Component],
    n: usize,
) -> Result<PartitionState, Rejection> {
    let mut order: Vec<usize> = reps.to_vec();
    order.sort_by_key(|&id| dominance_order_key(&comps[id]));

    let mut upper_by_vertex: Vec<Vec<usize>> = vec![Vec::new(); n]; // component ids
    let mut upper_ids: Vec<usize> = Vec::new();
    let mut dominated_by: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut free = Vec::new();

    for &id in &order {
        let comp = &comps[id];
        let Some(v0) = comp.w.first() else {
            free.push(id);
            continue;
        };
        let doms: Vec<usize> = upper_by_vertex[v0]
            .iter()
            .copied()
            .filter(|&u| dominates(&comps[u], comp))
            .collect();
        match doms.len() {
            0 => {
                for v in comp.w.iter() {
                    if upper_by_vertex[v].len() >= 2 {
                        return Err(Rejection::new(
                            RejectReason::FullAntipodalTriangle,
                            "partition",
                            format!(
                                "uppers {:?} and component {} all attach at vertex {}",
                                upper_by_vertex[v], id, v
                            ),
                        ));
                    }
                    upper_by_vertex[v].push(id);
                }
                upper_ids.push(id);
            }
            1 | 2 => {
                dominated_by.insert(id, doms);
            }
            _ => {
                return Err(Rejection::new(
                    RejectReason::FullAntipodalTriangle,
                    "partition",
                    format!("component {} dominated by three uppers", id),
                ));
            }
        }
    }

    upper_ids.sort_unstable();
    let index: HashMap<usize, usize> = upper_ids
        .iter()
        .enumerate()
        .map(|(i, &u)| (u, i))
        .collect();
    let r = upper_ids.len();

    let mut u_of_v: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &u) in upper_ids.iter().enumerate() {
        for v in comps[u].w.iter() {
            u_of_v[v].push(i);
        }
    }

    let mut home: HashMap<usize, Home> = HashMap::new();
    let mut d_single: Vec<Vec<usize>> = vec![Vec::new(); r];
    for (i, &u) in upper_ids.iter().enumerate() {
        d_single[i].push(u);
        home.insert(u, Home::Upper(i));
    }
    let mut d_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for &id in &order {
        let Some(doms) = dominated_by.get(&id) else {
            continue;
        };
        let mut idx: Vec<usize> = doms.iter().map(|u| index[u]).collect();
        idx.sort_unstable();
        match idx[..] {
            [i] => {
                d_single[i].push(id);
                home.insert(id, Home::Single(i));
            }
            [i, j] => {
                d_pair.entry((i, j)).or_default().push(id);
                home.insert(id, Home::Pair(i, j));
            }
            _ => unreachable!("dominator count bounded by two"),
        }
    }
    for list in d_single.iter_mut() {
        list.sort_unstable();
    }
    for list in d_pair.values_mut() {
        list.sort_unstable();
    }
    for &id in &free {
        home.insert(id, Home::Free);
    }

    Ok(PartitionState {
        uppers: upper_ids,
        u_of_v,
        d_single,
        d_pair,
        home,
        free,
    })
}
