//! The recursive recognizers for path graphs and directed path graphs.
//!
//! Recognition decomposes the graph at a clique separator, recursively builds
//! a (directed) clique path tree for every separated component, relates the
//! components through their attachment tables, colors them, and reassembles
//! the certifying tree. The undirected and directed pipelines share the
//! partition, DAG and extension machinery and differ only in how colors are
//! seeded and crossed.

mod assemble;
mod coloring;
mod dag;
mod partition;

pub use assemble::{assemble_clique_path_tree, assemble_directed_tree};
pub use coloring::{
    color_cross_pairs, color_cross_pairs_directed, color_cross_upper,
    color_cross_upper_directed, color_upper_bipartite, compute_lowest_colored,
    extend_coloring, extend_coloring_directed, ColorMap,
};
pub use dag::{build_antipodal_dag, AntipodalDag};
pub use partition::{build_partition, Home, PartitionState};

use crate::chordal::{clique_tree, is_chordal, maximal_cliques, mcs_order, CliqueSet, CliqueTree};
use crate::error::Error;
use crate::graph::{connected_components, induced_subgraph, Graph, VertexSet};
use crate::separation::{
    attach_tree, compare, compute_f_table, find_clique_separator, quotient, split, Component,
    EquivClass, Relation,
};
use crate::verdict::{Certificate, RejectReason, Rejection};

/// Which class to recognize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Undirected,
    Directed,
}

/// Knobs for reproducing a specific run.
#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Use this clique as the top-level separator instead of the heuristic
    /// choice. It must be a maximal clique of the (connected) input whose
    /// removal disconnects it.
    pub forced_separator: Option<VertexSet>,
    /// Record a [`SeparatorTrace`] per separator, including the full pairwise
    /// relation matrix of its components.
    pub trace: bool,
}

/// What happened at one separator during recognition.
#[derive(Clone, Debug)]
pub struct SeparatorTrace {
    /// Size of the graph split at this separator.
    pub graph_n: usize,
    pub graph_m: usize,
    pub separator: VertexSet,
    /// Private vertex sets of the separated components, by component id.
    pub privates: Vec<VertexSet>,
    /// Attachment sets of the components, by component id.
    pub attachments: Vec<VertexSet>,
    /// Equivalence classes over the components.
    pub classes: Vec<Vec<usize>>,
    /// Upper component ids, in order.
    pub uppers: Vec<usize>,
    /// For each upper index, the members of its `D` set (component ids).
    pub d_single: Vec<Vec<usize>>,
    pub d_pair: Vec<((usize, usize), Vec<usize>)>,
    /// Pairwise relations over all components (`id_a < id_b`).
    pub relations: Vec<(usize, usize, Relation)>,
    /// Final color per component id.
    pub colors: Vec<u32>,
}

/// Result of a full run, with the optional trace attached.
#[derive(Debug)]
pub struct RunOutput {
    pub verdict: Result<Certificate, Rejection>,
    pub trace: Vec<SeparatorTrace>,
    /// Total number of maximal cliques, when the input was chordal.
    pub clique_count: Option<usize>,
}

/// Decides whether the graph is a path graph; on acceptance the certificate
/// tree makes every vertex's cliques a path.
pub fn recognize_path_graph(g: &Graph) -> Result<Certificate, Rejection> {
    recognize_with(g, Mode::Undirected, &Options::default())
        .expect("default options cannot fail")
        .verdict
}

/// Decides whether the graph is a directed path graph; on acceptance the
/// certificate tree is directed and every vertex's cliques form a directed
/// path.
pub fn recognize_directed_path_graph(g: &Graph) -> Result<Certificate, Rejection> {
    recognize_with(g, Mode::Directed, &Options::default())
        .expect("default options cannot fail")
        .verdict
}

/// Full-control entry point. `Err` is reserved for unusable options; the
/// recognition verdict itself is inside [`RunOutput`].
pub fn recognize_with(g: &Graph, mode: Mode, opts: &Options) -> Result<RunOutput, Error> {
    let comps = connected_components(g);
    if opts.forced_separator.is_some() && comps.len() > 1 {
        return Err(Error::Contract(
            "a forced separator requires a connected graph".into(),
        ));
    }

    let mut ctx = Ctx {
        mode,
        tracing: opts.trace,
        trace: Vec::new(),
    };

    // chordality is tested once, up front, per connected component
    for cvs in &comps {
        let ind = induced_subgraph(g, cvs)?;
        if !is_chordal(&ind.graph) {
            return Ok(RunOutput {
                verdict: Err(Rejection::new(
                    RejectReason::NotChordal,
                    "chordality",
                    String::new(),
                )),
                trace: ctx.trace,
                clique_count: None,
            });
        }
    }

    if let Some(sep) = &opts.forced_separator {
        validate_forced_separator(g, sep)?;
    }

    let mut cliques: Vec<VertexSet> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut prev_root: Option<usize> = None;
    let mut offset = 0usize;
    for cvs in &comps {
        let ind = induced_subgraph(g, cvs)?;
        let verdict = ctx.solve(&ind.graph, opts.forced_separator.as_ref());
        let cert = match verdict {
            Ok(c) => c,
            Err(rej) => {
                return Ok(RunOutput {
                    verdict: Err(rej),
                    trace: ctx.trace,
                    clique_count: None,
                })
            }
        };
        for k in &cert.cliques {
            cliques.push(k.iter().map(|v| ind.to_super[v]).collect());
        }
        for &(a, b) in &cert.tree.edges {
            edges.push((a + offset, b + offset));
        }
        // stitch the forest into one tree; the linked cliques share no
        // vertex, so any edge and any orientation keeps the vertex paths
        if let Some(root) = prev_root {
            edges.push((root, offset));
        }
        prev_root = Some(offset);
        offset += cert.tree.nodes;
    }

    let clique_count = Some(cliques.len());
    let tree = CliqueTree {
        nodes: cliques.len(),
        edges,
        directed: mode == Mode::Directed,
    };
    Ok(RunOutput {
        verdict: Ok(Certificate { cliques, tree }),
        trace: ctx.trace,
        clique_count,
    })
}

fn validate_forced_separator(g: &Graph, sep: &VertexSet) -> Result<(), Error> {
    let ord = mcs_order(g);
    let cs = maximal_cliques(g, &ord)?;
    if !cs.cliques().iter().any(|k| k == sep) {
        return Err(Error::Contract(format!(
            "{} is not a maximal clique of the input",
            sep
        )));
    }
    split(g, sep).map(|_| ()).map_err(|_| {
        Error::Contract(format!("{} does not separate the input", sep))
    })
}

struct Ctx {
    mode: Mode,
    tracing: bool,
    trace: Vec<SeparatorTrace>,
}

impl Ctx {
    /// Recognizes one connected chordal graph.
    fn solve(
        &mut self,
        g: &Graph,
        forced: Option<&VertexSet>,
    ) -> Result<Certificate, Rejection> {
        let directed = self.mode == Mode::Directed;
        let ord = mcs_order(g);
        let cs = maximal_cliques(g, &ord).expect("chordality is inherited by the pieces");

        if cs.p() <= 2 {
            return Ok(base_certificate(&cs, directed));
        }

        let tree = clique_tree(g, &cs);
        let sep_id = match forced {
            Some(set) => cs
                .cliques()
                .iter()
                .position(|k| k == set)
                .expect("forced separator validated at entry"),
            None => find_clique_separator(&cs, &tree).expect("three cliques leave an internal node"),
        };
        let sep = cs.clique(sep_id).clone();

        let seeds = split(g, &sep).expect("internal clique tree nodes separate");
        let mut comps: Vec<Component> = Vec::with_capacity(seeds.len());
        for seed in seeds {
            let ind = induced_subgraph(g, &seed.ambient).expect("ambient sets are in range");
            let sub = self.solve(&ind.graph, None)?;
            let global: Vec<VertexSet> = sub
                .cliques
                .iter()
                .map(|k| k.iter().map(|v| ind.to_super[v]).collect())
                .collect();
            let mut comp = attach_tree(seed, &sep, global, sub.tree);
            compute_f_table(&mut comp, &sep);
            comps.push(comp);
        }

        // attachment bound: the W sets cannot outgrow the graph
        debug_assert!(
            comps.iter().map(|c| c.w.len()).sum::<usize>() <= g.m() + g.n(),
            "sum of attachment sets exceeds m + n"
        );

        let classes = quotient(&comps)?;
        let reps: Vec<usize> = classes.iter().map(|c| c.representative).collect();
        let ps = build_partition(&reps, &comps, g.n())?;

        let f_reps = match self.mode {
            Mode::Undirected => undirected_steps(&ps, &comps)?,
            Mode::Directed => directed_steps(&ps, &comps)?,
        };
        let default = match self.mode {
            Mode::Undirected => (ps.uppers.len() + 1) as u32,
            Mode::Directed => 0,
        };
        let colors = lift_quotient_coloring(&classes, &f_reps, default, comps.len());

        if self.tracing {
            self.trace
                .push(make_trace(g, &sep, &comps, &classes, &ps, &colors));
        }

        let (cliques, out_tree) = if directed {
            assemble_directed_tree(&sep, &comps, &colors)
        } else {
            assemble_clique_path_tree(&sep, &comps, &colors)
        };

        #[cfg(debug_assertions)]
        {
            let check_cs = CliqueSet::from_cliques(g.n(), cliques.clone());
            let ok = if directed {
                crate::oracle::check_directed_clique_path_tree(g, &check_cs, &out_tree)
            } else {
                crate::oracle::check_clique_path_tree(g, &check_cs, &out_tree)
            };
            debug_assert!(
                matches!(ok, Ok(true)),
                "assembled tree failed certification"
            );
        }

        Ok(Certificate {
            cliques,
            tree: out_tree,
        })
    }
}

fn base_certificate(cs: &CliqueSet, directed: bool) -> Certificate {
    let edges = if cs.p() == 2 { vec![(0, 1)] } else { Vec::new() };
    Certificate {
        cliques: cs.cliques().to_vec(),
        tree: CliqueTree {
            nodes: cs.p(),
            edges,
            directed,
        },
    }
}

/// Copies each representative's color onto all members of its class.
pub fn lift_quotient_coloring(
    classes: &[EquivClass],
    f_reps: &ColorMap,
    default: u32,
    count: usize,
) -> Vec<u32> {
    let mut colors = vec![default; count];
    for class in classes {
        let c = f_reps[class.representative].unwrap_or(default);
        for &m in &class.members {
            colors[m] = c;
        }
    }
    colors
}

/// Color steps of the undirected pipeline: seed the uppers, pin the members
/// antipodal across the partition, then 2-color every `D` set.
fn undirected_steps(ps: &PartitionState, comps: &[Component]) -> Result<ColorMap, Rejection> {
    let r = ps.uppers.len();
    let spare = (r + 1) as u32;
    let mut f: ColorMap = vec![None; comps.len()];
    for (i, &u) in ps.uppers.iter().enumerate() {
        coloring::set_color(&mut f, u, (i + 1) as u32);
    }
    color_cross_upper(ps, comps, &mut f);
    for (i, members) in ps.d_single.iter().enumerate() {
        let dag = build_antipodal_dag(members, comps)?;
        assert_unset_below_unset(&dag, &f);
        extend_coloring(&dag, comps, [(i + 1) as u32, spare], &mut f, "extend-single")?;
    }
    let lows: Vec<_> = (0..r)
        .map(|i| compute_lowest_colored(&ps.d_single[i], comps, &f, (i + 1) as u32))
        .collect();
    color_cross_pairs(ps, comps, &lows, &mut f)?;
    for (&(i, j), members) in &ps.d_pair {
        let dag = build_antipodal_dag(members, comps)?;
        assert_unset_below_unset(&dag, &f);
        extend_coloring(
            &dag,
            comps,
            [(i + 1) as u32, (j + 1) as u32],
            &mut f,
            "extend-pair",
        )?;
    }
    Ok(f)
}

/// Color steps of the directed pipeline, over the `{0, 1}` palette.
fn directed_steps(ps: &PartitionState, comps: &[Component]) -> Result<ColorMap, Rejection> {
    let r = ps.uppers.len();
    let mut f: ColorMap = vec![None; comps.len()];
    color_upper_bipartite(ps, comps, &mut f)?;
    color_cross_upper_directed(ps, comps, &mut f)?;
    for members in &ps.d_single {
        let dag = build_antipodal_dag(members, comps)?;
        assert_unset_below_unset(&dag, &f);
        extend_coloring_directed(&dag, comps, &mut f, "extend-single")?;
    }
    let lows: Vec<_> = (0..r)
        .map(|i| {
            let want = f[ps.uppers[i]].expect("uppers colored by the bipartite step");
            compute_lowest_colored(&ps.d_single[i], comps, &f, want)
        })
        .collect();
    color_cross_pairs_directed(ps, comps, &lows, &mut f)?;
    for members in ps.d_pair.values() {
        let dag = build_antipodal_dag(members, comps)?;
        assert_unset_below_unset(&dag, &f);
        extend_coloring_directed(&dag, comps, &mut f, "extend-pair")?;
    }
    #[cfg(debug_assertions)]
    assert_cross_antipodality_structure(ps, comps);
    Ok(f)
}

/// Cross-colored members sit above their uncolored dominatees: a colored
/// child below an uncolored parent would contradict the cross steps.
fn assert_unset_below_unset(dag: &AntipodalDag, f: &ColorMap) {
    if cfg!(debug_assertions) {
        for (p, c) in dag.darts() {
            debug_assert!(
                !(f[dag.node(c)].is_some() && f[dag.node(p)].is_none()),
                "dominated component colored before its dominator"
            );
        }
    }
}

/// On small instances, check the structural facts the directed cross steps
/// rely on: an antipodal partner outside `D_{i,j}` lies in `D_i ∪ D_j`, and a
/// partner outside `D_i` forces antipodality with the partner's upper.
#[cfg(debug_assertions)]
fn assert_cross_antipodality_structure(ps: &PartitionState, comps: &[Component]) {
    let reps: Vec<usize> = ps.home.keys().copied().collect();
    if reps.len() > 10 {
        return;
    }
    for &a in &reps {
        for &b in &reps {
            if a == b || compare(&comps[a], &comps[b]) != Relation::Antipodal {
                continue;
            }
            match (ps.home[&a], ps.home[&b]) {
                (Home::Pair(i, j), Home::Single(k) | Home::Upper(k)) => {
                    debug_assert!(
                        k == i || k == j,
                        "cross partner of a pair member outside its sides"
                    );
                }
                (Home::Single(i), Home::Single(k) | Home::Upper(k)) if i != k => {
                    debug_assert!(
                        compare(&comps[a], &comps[ps.uppers[k]]) == Relation::Antipodal,
                        "cross partner's upper must be antipodal too"
                    );
                }
                _ => {}
            }
        }
    }
}

fn make_trace(
    g: &Graph,
    sep: &VertexSet,
    comps: &[Component],
    classes: &[EquivClass],
    ps: &PartitionState,
    colors: &[u32],
) -> SeparatorTrace {
    let mut relations = Vec::new();
    for a in 0..comps.len() {
        for b in a + 1..comps.len() {
            relations.push((a, b, compare(&comps[a], &comps[b])));
        }
    }
    SeparatorTrace {
        graph_n: g.n(),
        graph_m: g.m(),
        separator: sep.clone(),
        privates: comps.iter().map(|c| c.private.clone()).collect(),
        attachments: comps.iter().map(|c| c.w.clone()).collect(),
        classes: classes.iter().map(|c| c.members.clone()).collect(),
        uppers: ps.uppers.clone(),
        d_single: ps.d_single.clone(),
        d_pair: ps.d_pair.iter().map(|(&k, v)| (k, v.clone())).collect(),
        relations,
        colors: colors.to_vec(),
    }
}
