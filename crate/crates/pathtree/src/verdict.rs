//! Outcome types shared by the recognizers.

use std::fmt;

use crate::chordal::CliqueTree;
use crate::graph::VertexSet;

/// Why an input was rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RejectReason {
    NotChordal,
    FullAntipodalTriangle,
    TwoColoringConflict,
    CrossPairConflict,
    CrossUpperConflict,
    UpperColoringConflict,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RejectReason::NotChordal => "non-chordal",
            RejectReason::FullAntipodalTriangle => "full antipodal triangle",
            RejectReason::TwoColoringConflict => "2-coloring conflict",
            RejectReason::CrossPairConflict => "cross-pair conflict",
            RejectReason::CrossUpperConflict => "cross-upper conflict",
            RejectReason::UpperColoringConflict => "upper coloring conflict",
        };
        f.write_str(s)
    }
}

/// A negative verdict together with the pipeline stage that produced it.
#[derive(Clone, Debug)]
pub struct Rejection {
    pub reason: RejectReason,
    pub stage: &'static str,
    pub detail: String,
}

impl Rejection {
    pub fn new(reason: RejectReason, stage: &'static str, detail: impl Into<String>) -> Self {
        Rejection {
            reason,
            stage,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (stage: {})", self.reason, self.stage)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// A positive verdict: the maximal cliques and a (directed) clique path tree
/// over them. The tree certifies membership and can be replayed through the
/// checkers in [`crate::oracle`].
#[derive(Clone, Debug)]
pub struct Certificate {
    pub cliques: Vec<VertexSet>,
    pub tree: CliqueTree,
}

impl Certificate {
    pub fn p(&self) -> usize {
        self.cliques.len()
    }
}
