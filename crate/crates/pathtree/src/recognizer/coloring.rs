//! Coloring of the separated components: cross constraints against the upper
//! set, and the 2-color extension inside each `D` set.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::recognizer::dag::AntipodalDag;
use crate::recognizer::partition::{Home, PartitionState};
use crate::separation::{compare, Component, Relation};
use crate::verdict::{RejectReason, Rejection};

/// Partial coloring indexed by component id. `None` is the unset sentinel.
pub type ColorMap = Vec<Option<u32>>;

/// Colors are only ever set once; a second write must agree.
pub(crate) fn set_color(f: &mut ColorMap, comp: usize, c: u32) {
    match f[comp] {
        None => f[comp] = Some(c),
        Some(old) => debug_assert_eq!(old, c, "colors are write-once"),
    }
}

fn upper_color(i: usize) -> u32 {
    (i + 1) as u32
}

/// Members of `D_i` attached to a foreign upper cannot take the spare color:
/// such a member is antipodal to that upper, so it is pinned to color `i`.
pub fn color_cross_upper(ps: &PartitionState, comps: &[Component], f: &mut ColorMap) {
    for (i, members) in ps.d_single.iter().enumerate() {
        for &id in members {
            if matches!(ps.home[&id], Home::Upper(_)) {
                continue;
            }
            let crossed = comps[id]
                .w
                .iter()
                .any(|v| ps.u_of_v[v].iter().any(|&k| k != i));
            if crossed {
                set_color(f, id, upper_color(i));
            }
        }
    }
}

/// Extends the coloring over one `D` set so that antipodal members get
/// different palette colors.
///
/// The constraints are collected per attachment vertex: two members sharing a
/// vertex and unrelated in the DAG are checked explicitly and constrained
/// exactly when antipodal (related members are dominance-comparable and never
/// constrained). Presets are propagated breadth-first; a leftover free choice
/// takes the first palette color at the smallest member id.
pub fn extend_coloring(
    dag: &AntipodalDag,
    comps: &[Component],
    palette: [u32; 2],
    f: &mut ColorMap,
    stage: &'static str,
) -> Result<(), Rejection> {
    let np = dag.len();
    if np == 0 {
        return Ok(());
    }

    let mut by_vertex: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for pos in 0..np {
        for v in comps[dag.node(pos)].w.iter() {
            by_vertex.entry(v).or_default().push(pos);
        }
    }
    let mut checked: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); np];
    for nodes in by_vertex.values() {
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                let key = (nodes[i].min(nodes[j]), nodes[i].max(nodes[j]));
                if !checked.insert(key) || dag.related(key.0, key.1) {
                    continue;
                }
                let rel = compare(&comps[dag.node(key.0)], &comps[dag.node(key.1)]);
                debug_assert_ne!(rel, Relation::Unattached);
                if rel == Relation::Antipodal {
                    adj[key.0].push(key.1);
                    adj[key.1].push(key.0);
                }
            }
        }
    }

    // palette index per position
    let mut side: Vec<Option<u8>> = vec![None; np];
    for pos in 0..np {
        if let Some(c) = f[dag.node(pos)] {
            let s = if c == palette[0] {
                0
            } else if c == palette[1] {
                1
            } else {
                unreachable!("preset color outside palette")
            };
            side[pos] = Some(s);
        }
    }

    let mut visited = vec![false; np];
    let propagate = |start: usize,
                         side: &mut Vec<Option<u8>>,
                         visited: &mut Vec<bool>|
     -> Result<(), Rejection> {
        let mut queue = VecDeque::from([start]);
        visited[start] = true;
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("queued nodes carry a side");
            for &w in &adj[u] {
                match side[w] {
                    None => side[w] = Some(1 - su),
                    Some(sw) if sw == su => {
                        return Err(Rejection::new(
                            RejectReason::TwoColoringConflict,
                            stage,
                            format!(
                                "antipodal components {} and {} forced to the same color",
                                dag.node(u),
                                dag.node(w)
                            ),
                        ));
                    }
                    Some(_) => {}
                }
                if !visited[w] {
                    visited[w] = true;
                    queue.push_back(w);
                }
            }
        }
        Ok(())
    };

    // presets first, then free constraint components seeded at their
    // smallest member id with the first palette color
    let mut by_id: Vec<usize> = (0..np).collect();
    by_id.sort_by_key(|&pos| dag.node(pos));
    for &pos in &by_id {
        if side[pos].is_some() && !visited[pos] {
            propagate(pos, &mut side, &mut visited)?;
        }
    }
    for &pos in &by_id {
        if side[pos].is_none() && !adj[pos].is_empty() && !visited[pos] {
            side[pos] = Some(0);
            propagate(pos, &mut side, &mut visited)?;
        }
    }
    for (pos, s) in side.iter().enumerate() {
        set_color(f, dag.node(pos), palette[s.unwrap_or(0) as usize]);
    }
    Ok(())
}

/// For every attachment vertex of the upper, the lowest member of its `D` set
/// that carries the wanted color and contains the vertex. Members sharing a
/// vertex and a color form a dominance chain, so the minimum under
/// (attachment size, flatness) is that lowest element.
pub fn compute_lowest_colored(
    members: &[usize],
    comps: &[Component],
    f: &ColorMap,
    want: u32,
) -> HashMap<usize, usize> {
    let key = |id: usize| (comps[id].w.len(), u8::from(comps[id].flat), id);
    let mut low: HashMap<usize, usize> = HashMap::new();
    for &id in members {
        if f[id] != Some(want) {
            continue;
        }
        for v in comps[id].w.iter() {
            low.entry(v)
                .and_modify(|cur| {
                    if key(id) < key(*cur) {
                        *cur = id;
                    }
                })
                .or_insert(id);
        }
    }
    low
}

/// True iff the component is antipodal to the lowest colored element of the
/// given side at some attachment vertex. An antipodal partner inside the
/// side always leaves such a witness vertex, but not necessarily at every
/// vertex, so the whole attachment set is scanned.
fn antipodal_into_side(id: usize, comps: &[Component], low: &HashMap<usize, usize>) -> bool {
    comps[id].w.iter().any(|v| {
        low.get(&v)
            .is_some_and(|&l| compare(&comps[id], &comps[l]) == Relation::Antipodal)
    })
}

/// Colors the members of every `D_{i,j}` that are antipodal into `D_i` or
/// `D_j`; antipodality into both sides is a rejection.
pub fn color_cross_pairs(
    ps: &PartitionState,
    comps: &[Component],
    lows: &[HashMap<usize, usize>],
    f: &mut ColorMap,
) -> Result<(), Rejection> {
    for (&(i, j), members) in &ps.d_pair {
        for &id in members {
            let into_i = antipodal_into_side(id, comps, &lows[i]);
            let into_j = antipodal_into_side(id, comps, &lows[j]);
            match (into_i, into_j) {
                (true, true) => {
                    return Err(Rejection::new(
                        RejectReason::CrossPairConflict,
                        "cross-pair",
                        format!("component {} is antipodal into both sides", id),
                    ));
                }
                (false, true) => set_color(f, id, upper_color(i)),
                (true, false) => set_color(f, id, upper_color(j)),
                (false, false) => {}
            }
        }
    }
    Ok(())
}

/// Two-colors the upper set so antipodal uppers differ. Uppers are antipodal
/// exactly when their attachment sets intersect, so the adjacency comes
/// straight out of the per-vertex upper incidence.
pub fn color_upper_bipartite(
    ps: &PartitionState,
    _comps: &[Component],
    f: &mut ColorMap,
) -> Result<(), Rejection> {
    let r = ps.uppers.len();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); r];
    for list in &ps.u_of_v {
        if let [a, b] = list[..] {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }
    let mut color: Vec<Option<u32>> = vec![None; r];
    for seed in 0..r {
        if color[seed].is_some() {
            continue;
        }
        color[seed] = Some(0);
        let mut queue = VecDeque::from([seed]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in &adj[u] {
                match color[w] {
                    None => {
                        color[w] = Some(1 - cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => {
                        return Err(Rejection::new(
                            RejectReason::UpperColoringConflict,
                            "upper-coloring",
                            format!(
                                "uppers {} and {} are antipodal but forced equal",
                                ps.uppers[u], ps.uppers[w]
                            ),
                        ));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    for (i, &u) in ps.uppers.iter().enumerate() {
        set_color(f, u, color[i].unwrap());
    }
    Ok(())
}

/// Directed cross-coloring against the uppers: a member of `D_i` antipodal to
/// foreign uppers of both colors rejects; otherwise it takes the color
/// opposite to its antipodal upper.
pub fn color_cross_upper_directed(
    ps: &PartitionState,
    comps: &[Component],
    f: &mut ColorMap,
) -> Result<(), Rejection> {
    for (i, members) in ps.d_single.iter().enumerate() {
        for &id in members {
            if matches!(ps.home[&id], Home::Upper(_)) {
                continue;
            }
            let mut seen: Option<u32> = None;
            for v in comps[id].w.iter() {
                for &k in &ps.u_of_v[v] {
                    if k == i {
                        continue;
                    }
                    let cu = f[ps.uppers[k]].expect("uppers are colored first");
                    match seen {
                        None => seen = Some(cu),
                        Some(c) if c != cu => {
                            return Err(Rejection::new(
                                RejectReason::CrossUpperConflict,
                                "cross-upper",
                                format!(
                                    "component {} is antipodal to uppers of both colors",
                                    id
                                ),
                            ));
                        }
                        Some(_) => {}
                    }
                }
            }
            if let Some(c) = seen {
                set_color(f, id, 1 - c);
            }
        }
    }
    Ok(())
}

/// Directed version of the `D_{i,j}` cross step: a member antipodal into
/// `D_j` takes the color of `u_i` and vice versa; both sides reject.
pub fn color_cross_pairs_directed(
    ps: &PartitionState,
    comps: &[Component],
    lows: &[HashMap<usize, usize>],
    f: &mut ColorMap,
) -> Result<(), Rejection> {
    for (&(i, j), members) in &ps.d_pair {
        let fui = f[ps.uppers[i]].expect("uppers are colored first");
        let fuj = f[ps.uppers[j]].expect("uppers are colored first");
        for &id in members {
            let into_i = antipodal_into_side(id, comps, &lows[i]);
            let into_j = antipodal_into_side(id, comps, &lows[j]);
            match (into_i, into_j) {
                (true, true) => {
                    return Err(Rejection::new(
                        RejectReason::CrossPairConflict,
                        "cross-pair",
                        format!("component {} is antipodal into both sides", id),
                    ));
                }
                (false, true) => set_color(f, id, fui),
                (true, false) => set_color(f, id, fuj),
                (false, false) => {}
            }
        }
    }
    Ok(())
}

/// Directed extension shares the machinery of [`extend_coloring`] with the
/// `{0, 1}` palette.
pub fn extend_coloring_directed(
    dag: &AntipodalDag,
    comps: &[Component],
    f: &mut ColorMap,
    stage: &'static str,
) -> Result<(), Rejection> {
    extend_coloring(dag, comps, [0, 1], f, stage)
}
