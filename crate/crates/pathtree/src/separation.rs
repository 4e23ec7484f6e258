//! Clique separator selection and the decomposition machinery around it:
//! separated components with their attachment sets `W` and furthest-clique
//! tables `F`, the dominance/antipodality relation between components, and
//! the equivalence quotient used before partitioning.

use std::collections::{HashMap, VecDeque};

use crate::chordal::{CliqueSet, CliqueTree};
use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::verdict::{RejectReason, Rejection};

/// Outcome of comparing two separated components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// Attachment sets are disjoint.
    Unattached,
    /// The left component dominates the right one.
    LeftDominates,
    /// The right component dominates the left one.
    RightDominates,
    /// Mutual dominance.
    Equivalent,
    /// Attached with no dominance either way.
    Antipodal,
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Relation::Unattached => "unattached",
            Relation::LeftDominates => ">=",
            Relation::RightDominates => "<=",
            Relation::Equivalent => "~",
            Relation::Antipodal => "<->",
        };
        f.write_str(s)
    }
}

/// One component of a clique-separator split, before recursion results are
/// attached.
#[derive(Clone, Debug)]
pub struct ComponentSeed {
    pub id: usize,
    pub private: VertexSet,
    pub ambient: VertexSet,
}

/// A separated component `G(C ∪ V_i)` carrying the clique path tree obtained
/// recursively, the node `c_node` equal to the separator, its unique tree
/// neighbor `n_node`, the attachment set `W`, and the furthest-clique table.
#[derive(Clone, Debug)]
pub struct Component {
    pub id: usize,
    pub private: VertexSet,
    pub ambient: VertexSet,
    /// Maximal cliques of the component, in ambient (parent graph) vertex ids.
    pub cliques: Vec<VertexSet>,
    pub tree: CliqueTree,
    pub c_node: usize,
    pub n_node: usize,
    pub w: VertexSet,
    /// For `v ∈ W`: the tree node of the clique containing `v` furthest from
    /// the separator. Absent exactly outside `W`.
    f: HashMap<usize, usize>,
    /// `F` is a single node on the whole of `W`.
    pub flat: bool,
}

impl Component {
    pub fn f_of(&self, v: usize) -> Option<usize> {
        self.f.get(&v).copied()
    }
}

/// Picks a clique separator: any internal node of a clique tree separates the
/// graph, so take the one maximizing the minimum branch size (ties towards the
/// smaller clique id). Returns `None` in the base case of at most two cliques.
pub fn find_clique_separator(cs: &CliqueSet, t: &CliqueTree) -> Option<usize> {
    debug_assert_eq!(cs.p(), t.nodes);
    let p = t.nodes;
    if p <= 2 {
        return None;
    }
    let adj = t.adjacency();
    // subtree sizes from an iterative post-order at root 0
    let mut parent = vec![usize::MAX; p];
    let mut order = Vec::with_capacity(p);
    let mut stack = vec![0usize];
    let mut seen = vec![false; p];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut size = vec![1usize; p];
    for &u in order.iter().rev() {
        if parent[u] != usize::MAX {
            size[parent[u]] += size[u];
        }
    }
    let mut best: Option<(usize, usize)> = None; // (min branch, id); maximize then minimize id
    for u in 0..p {
        if adj[u].len() < 2 {
            continue;
        }
        let mut min_branch = usize::MAX;
        for &w in &adj[u] {
            let branch = if parent[w] == u { size[w] } else { p - size[u] };
            min_branch = min_branch.min(branch);
        }
        match best {
            None => best = Some((min_branch, u)),
            Some((b, _)) if min_branch > b => best = Some((min_branch, u)),
            _ => {}
        }
    }
    Some(best.expect("a tree on >= 3 nodes has an internal node").1)
}

/// Splits the graph at a separator clique: one seed per connected component
/// of `g - C`, ordered by smallest private vertex.
pub fn split(g: &Graph, sep: &VertexSet) -> Result<Vec<ComponentSeed>, Error> {
    let mut seen = vec![false; g.n()];
    for v in sep.iter() {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange(v));
        }
        seen[v] = true;
    }
    let mut seeds = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut private = vec![start];
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    private.push(w);
                    queue.push_back(w);
                }
            }
        }
        let private = VertexSet::from_vec(private);
        let ambient = private.union(sep);
        seeds.push(ComponentSeed {
            id: seeds.len(),
            private,
            ambient,
        });
    }
    if seeds.len() < 2 {
        return Err(Error::NotASeparator);
    }
    Ok(seeds)
}

/// Attaches a recursively computed clique path tree to a component seed:
/// locates the separator clique among the component's cliques, asserts it is
/// a leaf, and records its unique neighbor and the attachment set `W`.
///
/// A non-leaf separator node signals an implementation bug, not a rejection;
/// the function panics rather than re-rooting.
pub fn attach_tree(
    seed: ComponentSeed,
    sep: &VertexSet,
    cliques: Vec<VertexSet>,
    tree: CliqueTree,
) -> Component {
    let c_node = cliques
        .iter()
        .position(|k| k == sep)
        .expect("separator must be a maximal clique of the component");
    let adj = tree.adjacency();
    assert_eq!(
        adj[c_node].len(),
        1,
        "separator clique must be a leaf of the component's clique path tree"
    );
    let n_node = adj[c_node][0];
    let w = cliques[n_node].intersect(sep);
    Component {
        id: seed.id,
        private: seed.private,
        ambient: seed.ambient,
        cliques,
        tree,
        c_node,
        n_node,
        w,
        f: HashMap::new(),
        flat: false,
    }
}

/// Fills the furthest-clique table by one breadth-first traversal of the
/// component's tree starting at `n_node` and never entering `c_node`. Each
/// visit overwrites the entry, so the last (deepest) clique containing a
/// separator vertex wins.
pub fn compute_f_table(comp: &mut Component, sep: &VertexSet) {
    let adj = comp.tree.adjacency();
    let mut seen = vec![false; comp.tree.nodes];
    seen[comp.c_node] = true;
    seen[comp.n_node] = true;
    let mut queue = VecDeque::from([comp.n_node]);
    comp.f.clear();
    while let Some(u) = queue.pop_front() {
        for v in comp.cliques[u].iter() {
            if sep.contains(v) {
                comp.f.insert(v, u);
            }
        }
        for &x in &adj[u] {
            if !seen[x] {
                seen[x] = true;
                queue.push_back(x);
            }
        }
    }
    debug_assert!(comp.w.iter().all(|v| comp.f.contains_key(&v)));
    debug_assert_eq!(comp.f.len(), comp.w.len());
    let mut values = comp.w.iter().filter_map(|v| comp.f_of(v));
    let head = values.next();
    comp.flat = head.is_some() && values.all(|x| Some(x) == head);
}

/// `F(a, ·)` takes a single non-absent value on all of `W(b)`, i.e. `b ≤ a`.
pub fn dominates(a: &Component, b: &Component) -> bool {
    if b.w.is_empty() || b.w.len() > a.w.len() {
        return false;
    }
    let mut fixed: Option<usize> = None;
    for v in b.w.iter() {
        match a.f_of(v) {
            None => return false,
            Some(x) => match fixed {
                None => fixed = Some(x),
                Some(y) if y != x => return false,
                _ => {}
            },
        }
    }
    fixed.is_some()
}

/// Classifies an ordered pair of components.
pub fn compare(a: &Component, b: &Component) -> Relation {
    if a.w.is_empty() || b.w.is_empty() || !a.w.intersects(&b.w) {
        return Relation::Unattached;
    }
    match (dominates(a, b), dominates(b, a)) {
        (true, true) => Relation::Equivalent,
        (true, false) => Relation::LeftDominates,
        (false, true) => Relation::RightDominates,
        (false, false) => Relation::Antipodal,
    }
}

/// An equivalence class of mutually dominating components.
#[derive(Clone, Debug)]
pub struct EquivClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

/// A separator with its attached components and their equivalence classes.
#[derive(Clone, Debug)]
pub struct SeparationContext {
    pub separator: VertexSet,
    pub components: Vec<Component>,
    pub classes: Vec<EquivClass>,
}

/// Computes the quotient under mutual dominance.
///
/// Mutual dominance forces equal attachment sets and a constant `F` on them,
/// so the classes are exactly the groups of flat components sharing a `W`;
/// everything else is a singleton. Three non-flat components with the same
/// non-empty `W` are pairwise antipodal and share every attachment vertex,
/// which is an immediate rejection witness.
pub fn quotient(components: &[Component]) -> Result<Vec<EquivClass>, Rejection> {
    let mut flat_groups: HashMap<&[usize], Vec<usize>> = HashMap::new();
    let mut sharp_groups: HashMap<&[usize], Vec<usize>> = HashMap::new();
    let mut classes = Vec::new();
    for comp in components {
        if comp.w.is_empty() {
            classes.push(EquivClass {
                representative: comp.id,
                members: vec![comp.id],
            });
        } else if comp.flat {
            flat_groups.entry(comp.w.as_slice()).or_default().push(comp.id);
        } else {
            sharp_groups.entry(comp.w.as_slice()).or_default().push(comp.id);
        }
    }
    for (w, group) in &sharp_groups {
        if group.len() >= 3 {
            return Err(Rejection::new(
                RejectReason::FullAntipodalTriangle,
                "quotient",
                format!(
                    "components {:?} are pairwise antipodal on attachment set {:?}",
                    &group[..3],
                    w
                ),
            ));
        }
        for &id in group.iter() {
            classes.push(EquivClass {
                representative: id,
                members: vec![id],
            });
        }
    }
    for group in flat_groups.into_values() {
        let mut members = group;
        members.sort_unstable();
        debug_assert!(members
            .windows(2)
            .all(|p| compare(&components[p[0]], &components[p[1]]) == Relation::Equivalent));
        classes.push(EquivClass {
            representative: members[0],
            members,
        });
    }
    classes.sort_by_key(|c| c.representative);
    Ok(classes)
}

/// Sort key putting dominating components first: larger attachment sets
/// first, flat before non-flat on ties (only a flat component can dominate
/// another component with an attachment set of equal size), then by id.
pub(crate) fn dominance_order_key(c: &Component) -> (std::cmp::Reverse<usize>, u8, usize) {
    (std::cmp::Reverse(c.w.len()), u8::from(!c.flat), c.id)
}
