//! Certificate emission and re-parsing: a self-contained JSON schema and a
//! DOT rendering. Both carry the cliques (in the input's original vertex
//! labels), the tree edges, and the darts when directed, so a certificate can
//! be checked later without rerunning recognition.

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use pathtree::{Certificate, CliqueTree};

#[derive(Serialize, Deserialize)]
pub struct TreeFile {
    pub cliques: Vec<Vec<u64>>,
    pub edges: Vec<(usize, usize)>,
    pub directed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub darts: Option<Vec<(usize, usize)>>,
}

impl TreeFile {
    pub fn from_certificate(cert: &Certificate, labels: &[u64]) -> TreeFile {
        let cliques: Vec<Vec<u64>> = cert
            .cliques
            .iter()
            .map(|k| k.iter().map(|v| labels[v]).collect())
            .collect();
        let mut edges: Vec<(usize, usize)> = cert
            .tree
            .edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        let darts = cert.tree.directed.then(|| cert.tree.edges.clone());
        TreeFile {
            cliques,
            edges,
            directed: cert.tree.directed,
            darts,
        }
    }

    pub fn tree(&self) -> Result<CliqueTree> {
        let nodes = self.cliques.len();
        let edges = if self.directed {
            self.darts
                .clone()
                .ok_or_else(|| anyhow!("directed tree file without darts"))?
        } else {
            self.edges.clone()
        };
        for &(a, b) in &edges {
            if a >= nodes || b >= nodes {
                bail!("tree edge ({}, {}) out of range", a, b);
            }
        }
        Ok(CliqueTree {
            nodes,
            edges,
            directed: self.directed,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tree files serialize")
    }

    pub fn from_json(text: &str) -> Result<TreeFile> {
        serde_json::from_str(text).context("invalid tree JSON")
    }

    /// DOT rendering with sorted vertex lists as node labels.
    pub fn to_dot(&self) -> String {
        let (kind, arrow) = if self.directed {
            ("digraph", "->")
        } else {
            ("graph", "--")
        };
        let mut out = format!("{} cliques {{\n", kind);
        for (i, k) in self.cliques.iter().enumerate() {
            let mut sorted = k.clone();
            sorted.sort_unstable();
            let label: Vec<String> = sorted.iter().map(u64::to_string).collect();
            out.push_str(&format!("  n{} [label=\"{{{}}}\"];\n", i, label.join(",")));
        }
        let pairs: &[(usize, usize)] = if self.directed {
            self.darts.as_deref().unwrap_or(&self.edges)
        } else {
            &self.edges
        };
        for &(a, b) in pairs {
            out.push_str(&format!("  n{} {} n{};\n", a, arrow, b));
        }
        out.push_str("}\n");
        out
    }

    /// Reads back the DOT form emitted by [`TreeFile::to_dot`].
    pub fn from_dot(text: &str) -> Result<TreeFile> {
        let mut cliques: Vec<(usize, Vec<u64>)> = Vec::new();
        let mut darts: Vec<(usize, usize)> = Vec::new();
        let mut directed = false;
        for raw in text.lines() {
            let line = raw.trim().trim_end_matches(';');
            if line.starts_with("digraph") {
                directed = true;
            }
            if let Some(pos) = line.find("[label=\"{") {
                let id: usize = line[1..pos]
                    .trim()
                    .parse()
                    .context("unparsable DOT node id")?;
                let rest = &line[pos + "[label=\"{".len()..];
                let end = rest.find('}').ok_or_else(|| anyhow!("unterminated label"))?;
                let vs: Vec<u64> = if end == 0 {
                    Vec::new()
                } else {
                    rest[..end]
                        .split(',')
                        .map(|t| t.trim().parse().context("unparsable vertex label"))
                        .collect::<Result<_>>()?
                };
                cliques.push((id, vs));
            } else if let Some((a, b)) = split_edge(line, "->") {
                darts.push((a, b));
            } else if let Some((a, b)) = split_edge(line, "--") {
                darts.push((a, b));
            }
        }
        cliques.sort_by_key(|&(id, _)| id);
        for (i, &(id, _)) in cliques.iter().enumerate() {
            if i != id {
                bail!("DOT nodes are not densely numbered");
            }
        }
        let cliques: Vec<Vec<u64>> = cliques.into_iter().map(|(_, k)| k).collect();
        let mut edges: Vec<(usize, usize)> = darts.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort_unstable();
        Ok(TreeFile {
            cliques,
            edges,
            directed,
            darts: directed.then_some(darts),
        })
    }
}

fn split_edge(line: &str, arrow: &str) -> Option<(usize, usize)> {
    let (lhs, rhs) = line.split_once(arrow)?;
    let a = lhs.trim().strip_prefix('n')?.parse().ok()?;
    let b = rhs.trim().strip_prefix('n')?.parse().ok()?;
    Some((a, b))
}

/// Guesses the format by content: JSON objects start with a brace.
pub fn parse_tree_file(text: &str) -> Result<TreeFile> {
    if text.trim_start().starts_with('{') {
        TreeFile::from_json(text)
    } else {
        TreeFile::from_dot(text)
    }
}
