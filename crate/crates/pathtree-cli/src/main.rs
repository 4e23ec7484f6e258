//! Command line front end: recognition with certificate emission,
//! certificate checking, differential fuzzing against the enumeration
//! oracle, instance generation, and a coarse scaling benchmark.
//!
//! Exit codes are a stable contract: 0 accept / pass, 1 reject / fail,
//! 2 usage or input error.

mod emit;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use emit::{parse_tree_file, TreeFile};
use pathtree::chordal::{maximal_cliques, mcs_order};
use pathtree::gen::{
    random_chordal, random_interval_graph, random_path_graph_positive, random_path_graph_with,
    random_rooted_path_positive,
};
use pathtree::oracle::{
    check_clique_path_tree, check_directed_clique_path_tree, oracle_is_directed_path_graph,
    oracle_is_path_graph, DIRECTED_CLIQUE_CAP, UNDIRECTED_CLIQUE_CAP,
};
use pathtree::recognizer::{recognize_with, Mode, Options};
use pathtree::{
    is_chordal, parse_graph_labeled, serialize_graph, CliqueSet, Graph, VertexSet,
};

#[derive(Parser)]
#[command(name = "pathtree", version, about = "Path graph and directed path graph recognition")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenClass {
    Chordal,
    Interval,
    Path,
    Rooted,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the input graph is a (directed) path graph and emit a
    /// certifying clique path tree on acceptance.
    Recognize {
        /// Edge-list file, `-` for standard input.
        input: PathBuf,
        /// Recognize directed path graphs instead of path graphs.
        #[arg(long)]
        directed: bool,
        /// Certificate format written to standard output.
        #[arg(long, value_enum, default_value = "dot")]
        emit: EmitFormat,
        /// Print the per-separator partition, relations and coloring.
        #[arg(long)]
        trace: bool,
    },
    /// Check a certificate produced by `recognize` against a graph.
    Check {
        /// Edge-list file of the graph.
        graph: PathBuf,
        /// Tree file (JSON or DOT) as emitted by `recognize`.
        tree: PathBuf,
        /// Require a directed clique path tree.
        #[arg(long)]
        directed: bool,
    },
    /// Run the recognizer against the brute-force oracle on random chordal
    /// instances; write a minimized witness on any disagreement.
    Fuzz {
        #[arg(long, default_value_t = 300)]
        count: usize,
        /// Maximal clique count of generated instances (bounded by the
        /// oracle's capacity).
        #[arg(long, default_value_t = 7)]
        max_cliques: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        directed: bool,
        /// Harness self-test: pretend the first instance disagreed, to
        /// exercise the witness path.
        #[arg(long, hide = true)]
        inject_disagreement: bool,
    },
    /// Generate a random instance of the given class on standard output.
    Gen {
        #[arg(value_enum)]
        class: GenClass,
        /// Size parameter: host tree nodes, which also bounds the number of
        /// maximal cliques.
        k: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Subtree count multiplier for the chordal class.
        #[arg(long, default_value_t = 2)]
        width: usize,
    },
    /// Coarse scaling benchmark on generated path-graph positives.
    Bench {
        /// Comma separated vertex counts.
        #[arg(long, default_value = "500,1000,2000")]
        sizes: String,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = move || -> Result<i32> {
        match cli.command {
            Command::Recognize {
                input,
                directed,
                emit,
                trace,
            } => cmd_recognize(&input, directed, emit, trace),
            Command::Check {
                graph,
                tree,
                directed,
            } => cmd_check(&graph, &tree, directed),
            Command::Fuzz {
                count,
                max_cliques,
                seed,
                directed,
                inject_disagreement,
            } => cmd_fuzz(
                count,
                max_cliques,
                resolve_seed(seed),
                directed,
                inject_disagreement,
            ),
            Command::Gen {
                class,
                k,
                seed,
                width,
            } => cmd_gen(class, k, resolve_seed(seed), width),
            Command::Bench { sizes, seed } => cmd_bench(&sizes, resolve_seed(seed)),
        }
    };
    // the recognizer recurses once per separator; give it room
    let code = std::thread::Builder::new()
        .stack_size(512 * 1024 * 1024)
        .spawn(run)
        .expect("worker thread")
        .join()
        .expect("worker thread completes");
    match code {
        Ok(c) => ExitCode::from(c as u8),
        Err(err) => {
            eprintln!("error: {:#}", err);
            ExitCode::from(2)
        }
    }
}

/// `--seed`, else `PATHTREE_SEED`, else a fixed default.
fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("PATHTREE_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(0xC0FFEE)
}

fn read_input(path: &std::path::Path) -> Result<String> {
    if path.as_os_str() == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading standard input")?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load_graph(path: &std::path::Path) -> Result<(Graph, Vec<u64>)> {
    let text = read_input(path)?;
    let parsed = parse_graph_labeled(&text)?;
    Ok(parsed)
}

fn cmd_recognize(
    input: &std::path::Path,
    directed: bool,
    emit: EmitFormat,
    trace: bool,
) -> Result<i32> {
    let (graph, labels) = load_graph(input)?;
    let mode = if directed {
        Mode::Directed
    } else {
        Mode::Undirected
    };
    let t0 = Instant::now();
    let out = recognize_with(
        &graph,
        mode,
        &Options {
            forced_separator: None,
            trace,
        },
    )?;
    let elapsed = t0.elapsed();

    if trace {
        for (i, t) in out.trace.iter().enumerate() {
            let mut line = String::new();
            let _ = write!(line, "separator {}: C={}", i, show_set(&t.separator, &labels));
            eprintln!("{}", line);
            for (id, p) in t.privates.iter().enumerate() {
                eprintln!(
                    "  component {}: private={} W={} color={}",
                    id,
                    show_set(p, &labels),
                    show_set(&t.attachments[id], &labels),
                    t.colors[id]
                );
            }
            eprintln!("  classes: {:?}", t.classes);
            eprintln!("  uppers: {:?}", t.uppers);
            for (i, d) in t.d_single.iter().enumerate() {
                eprintln!("  D_{}: {:?}", i + 1, d);
            }
            for ((i, j), d) in &t.d_pair {
                eprintln!("  D_{},{}: {:?}", i + 1, j + 1, d);
            }
            for (a, b, rel) in &t.relations {
                if *rel != pathtree::separation::Relation::Unattached {
                    eprintln!("  component {} {} component {}", a, rel, b);
                }
            }
        }
    }

    match out.verdict {
        Ok(cert) => {
            let file = TreeFile::from_certificate(&cert, &labels);
            match emit {
                EmitFormat::Dot => print!("{}", file.to_dot()),
                EmitFormat::Json => println!("{}", file.to_json()),
            }
            eprintln!(
                "verdict: accept ({} cliques, {} vertices, {:.3?})",
                cert.p(),
                graph.n(),
                elapsed
            );
            Ok(0)
        }
        Err(rej) => {
            let cliques = out
                .clique_count
                .map(|p| format!(", cliques: {}", p))
                .unwrap_or_default();
            eprintln!(
                "verdict: reject (reason: {}, stage: {}{}, {:.3?})",
                rej.reason, rej.stage, cliques, elapsed
            );
            if !rej.detail.is_empty() {
                eprintln!("detail: {}", rej.detail);
            }
            Ok(1)
        }
    }
}

fn show_set(s: &VertexSet, labels: &[u64]) -> String {
    let mut named: Vec<u64> = s.iter().map(|v| labels[v]).collect();
    named.sort_unstable();
    let parts: Vec<String> = named.iter().map(u64::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn cmd_check(graph_path: &std::path::Path, tree_path: &std::path::Path, directed: bool) -> Result<i32> {
    let (graph, labels) = load_graph(graph_path)?;
    let file = parse_tree_file(&read_input(tree_path)?)?;
    if directed && !file.directed {
        bail!("--directed given but the tree file is undirected");
    }

    // map the file's cliques (original labels) back into graph ids
    let mut by_label = std::collections::HashMap::new();
    for (id, &l) in labels.iter().enumerate() {
        by_label.insert(l, id);
    }
    let mut cliques = Vec::with_capacity(file.cliques.len());
    for k in &file.cliques {
        let ids: Option<Vec<usize>> = k.iter().map(|l| by_label.get(l).copied()).collect();
        let ids = ids.ok_or_else(|| anyhow!("tree file names a vertex missing from the graph"))?;
        cliques.push(VertexSet::from_vec(ids));
    }

    // the file must list exactly the maximal cliques of the graph
    if !is_chordal(&graph) {
        bail!("graph is not chordal, so it has no clique path tree");
    }
    let cs = maximal_cliques(&graph, &mcs_order(&graph))?;
    let ours: BTreeSet<&VertexSet> = cs.cliques().iter().collect();
    let theirs: BTreeSet<&VertexSet> = cliques.iter().collect();
    if ours != theirs || cliques.len() != cs.p() {
        bail!("clique set mismatch between graph and tree file");
    }

    let tree = file.tree()?;
    let file_cs = CliqueSet::from_cliques(graph.n(), cliques);
    let ok = if directed || file.directed {
        check_directed_clique_path_tree(&graph, &file_cs, &tree)
    } else {
        check_clique_path_tree(&graph, &file_cs, &tree)
    }
    .map_err(|e| anyhow!("{}", e))?;
    if ok {
        eprintln!("certificate: valid");
        Ok(0)
    } else {
        eprintln!("certificate: INVALID");
        Ok(1)
    }
}

fn cmd_fuzz(
    count: usize,
    max_cliques: usize,
    seed: u64,
    directed: bool,
    inject: bool,
) -> Result<i32> {
    let cap = if directed {
        DIRECTED_CLIQUE_CAP
    } else {
        UNDIRECTED_CLIQUE_CAP
    };
    if max_cliques > cap {
        bail!(
            "--max-cliques {} exceeds the oracle capacity of {}",
            max_cliques,
            cap
        );
    }
    let mut agree = 0usize;
    for i in 0..count {
        let k = 2 + (i % max_cliques.max(2).saturating_sub(1));
        let g = random_chordal(k, 3, seed.wrapping_add(i as u64));
        let (want, mut got) = verdict_pair(&g, directed)?;
        if inject && i == 0 {
            got = !got;
        }
        if want == got {
            agree += 1;
            continue;
        }
        let witness = minimize_witness(g, directed)?;
        let path = format!("pathtree-witness-{}.txt", seed.wrapping_add(i as u64));
        std::fs::write(&path, serialize_graph(&witness))
            .with_context(|| format!("writing {}", path))?;
        eprintln!(
            "disagreement on instance {} (oracle: {}, recognizer: {}); minimized witness in {}",
            i, want, got, path
        );
        return Ok(1);
    }
    println!("{}/{} agree", agree, count);
    Ok(0)
}

fn verdict_pair(g: &Graph, directed: bool) -> Result<(bool, bool)> {
    let (want, got) = if directed {
        (
            oracle_is_directed_path_graph(g)?,
            pathtree::recognize_directed_path_graph(g).is_ok(),
        )
    } else {
        (
            oracle_is_path_graph(g)?,
            pathtree::recognize_path_graph(g).is_ok(),
        )
    };
    Ok((want, got))
}

/// Greedily removes vertices while the disagreement persists.
fn minimize_witness(mut g: Graph, directed: bool) -> Result<Graph> {
    'outer: loop {
        for drop in 0..g.n() {
            let keep: VertexSet = (0..g.n()).filter(|&v| v != drop).collect();
            let sub = pathtree::induced_subgraph(&g, &keep)?.graph;
            let (want, got) = verdict_pair(&sub, directed)?;
            if want != got {
                g = sub;
                continue 'outer;
            }
        }
        return Ok(g);
    }
}

fn cmd_gen(class: GenClass, k: usize, seed: u64, width: usize) -> Result<i32> {
    if k == 0 {
        bail!("k must be at least 1");
    }
    let g = match class {
        GenClass::Chordal => random_chordal(k, width, seed),
        GenClass::Interval => random_interval_graph(k, seed),
        GenClass::Path => random_path_graph_positive(k, seed),
        GenClass::Rooted => random_rooted_path_positive(k, seed),
    };
    print!("{}", serialize_graph(&g));
    Ok(0)
}

fn cmd_bench(sizes: &str, seed: u64) -> Result<i32> {
    let sizes: Vec<usize> = sizes
        .split(',')
        .map(|t| t.trim().parse().context("invalid --sizes entry"))
        .collect::<Result<_>>()?;
    println!("{:>8} {:>8} {:>8} {:>12}", "n", "m", "p", "median");
    for &n in &sizes {
        let g = random_path_graph_with((n / 2).max(1), n, 4, seed);
        let mut times = Vec::new();
        let mut p = 0;
        for _ in 0..5 {
            let t0 = Instant::now();
            let cert = pathtree::recognize_path_graph(&g)
                .map_err(|r| anyhow!("generated positive rejected: {}", r))?;
            times.push(t0.elapsed());
            p = cert.p();
        }
        times.sort();
        println!(
            "{:>8} {:>8} {:>8} {:>12.3?}",
            g.n(),
            g.m(),
            p,
            times[times.len() / 2]
        );
    }
    Ok(0)
}
