use alloc::vec::Vec;
use core::fmt;

use crate::hypergraph::{EdgeId, VertexId};

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Every failure any operation of this crate can report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    UnknownVertex(VertexId),
    UnknownEdge(EdgeId),
    /// An edge was declared without vertices.
    EmptyEdge(EdgeId),
    DuplicateVertexInEdge {
        edge: EdgeId,
        vertex: VertexId,
    },
    /// An undirected graph edge does not have exactly two endpoints.
    NotAPair(EdgeId),
    /// An undirected graph contains two edges over the same pair.
    ParallelEdge(EdgeId),
    /// The chosen vertex of an orientation is not incident with its edge.
    NotIncident {
        edge: EdgeId,
        vertex: VertexId,
    },
    /// A per-edge or per-vertex table has the wrong length.
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    /// The brute-force oracle refuses inputs above its vertex cap.
    CapExceeded {
        vertices: usize,
        cap: usize,
    },
    NotKSparse {
        witness: Vec<VertexId>,
    },
    RankTooSmall {
        rank: usize,
    },
    NoHomomorphism,
    MalformedPartition,
    NoHyperpath {
        from: VertexId,
        to: VertexId,
    },
    Disconnected,
    ClassOverflow {
        classes: usize,
    },
    BranchCapExceeded {
        cap: usize,
    },
    MalformedTree(&'static str),
    NotATreeNode(VertexId),
    NotSparseDistribution {
        witness: Vec<VertexId>,
    },
    /// A flow is nonzero on a pair that is not an edge.
    FlowOffSupport {
        u: VertexId,
        v: VertexId,
    },
    InvalidFlow(&'static str),
    /// A set-to-vertex table maps one set to two different vertices.
    NotFunctional,
}

impl Error {
    /// Stable machine-readable code, used as the first token of CLI error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::UnknownEdge(_) => "UnknownEdge",
            Error::EmptyEdge(_) => "EmptyEdge",
            Error::DuplicateVertexInEdge { .. } => "DuplicateVertexInEdge",
            Error::NotAPair(_) => "NotAPair",
            Error::ParallelEdge(_) => "ParallelEdge",
            Error::NotIncident { .. } => "NotIncident",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::NotKSparse { .. } => "NotKSparse",
            Error::RankTooSmall { .. } => "RankTooSmall",
            Error::NoHomomorphism => "NoHomomorphism",
            Error::MalformedPartition => "MalformedPartition",
            Error::NoHyperpath { .. } => "NoHyperpath",
            Error::Disconnected => "Disconnected",
            Error::ClassOverflow { .. } => "ClassOverflow",
            Error::BranchCapExceeded { .. } => "BranchCapExceeded",
            Error::MalformedTree(_) => "MalformedTree",
            Error::NotATreeNode(_) => "NotATreeNode",
            Error::NotSparseDistribution { .. } => "NotSparseDistribution",
            Error::FlowOffSupport { .. } => "FlowOffSupport",
            Error::InvalidFlow(_) => "InvalidFlow",
            Error::NotFunctional => "NotFunctional",
        }
    }

    /// The violating vertex set carried by sparsity errors.
    pub fn witness(&self) -> Option<&[VertexId]> {
        match self {
            Error::NotKSparse { witness } | Error::NotSparseDistribution { witness } => {
                Some(witness)
            }
            _ => None,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            Error::UnknownEdge(e) => write!(f, "unknown edge {e}"),
            Error::EmptyEdge(e) => write!(f, "edge {e} has no vertices"),
            Error::DuplicateVertexInEdge { edge, vertex } => {
                write!(f, "vertex {vertex} occurs twice in edge {edge}")
            }
            Error::NotAPair(e) => write!(f, "edge {e} does not have exactly two endpoints"),
            Error::ParallelEdge(e) => write!(f, "edge {e} duplicates an earlier edge"),
            Error::NotIncident { edge, vertex } => {
                write!(f, "vertex {vertex} is not incident with edge {edge}")
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            Error::CapExceeded { vertices, cap } => {
                write!(f, "{vertices} vertices exceed the brute-force cap of {cap}")
            }
            Error::NotKSparse { witness } => {
                write!(
                    f,
                    "hypergraph is not k-sparse ({} witness vertices)",
                    witness.len()
                )
            }
            Error::RankTooSmall { rank } => write!(f, "rank {rank} is below 2"),
            Error::NoHomomorphism => f.write_str("no homomorphism into the target exists"),
            Error::MalformedPartition => f.write_str("classes do not match the target vertices"),
            Error::NoHyperpath { from, to } => write!(f, "no hyperpath from {from} to {to}"),
            Error::Disconnected => f.write_str("hypergraph is not connected"),
            Error::ClassOverflow { classes } => {
                write!(f, "no free priority class below {classes}")
            }
            Error::BranchCapExceeded { cap } => write!(f, "more than {cap} branches"),
            Error::MalformedTree(why) => write!(f, "malformed tree: {why}"),
            Error::NotATreeNode(v) => write!(f, "vertex {v} is not a tree node"),
            Error::NotSparseDistribution { witness } => {
                write!(
                    f,
                    "distribution is not k-sparse ({} witness vertices)",
                    witness.len()
                )
            }
            Error::FlowOffSupport { u, v } => write!(f, "flow is nonzero on non-edge ({u}, {v})"),
            Error::InvalidFlow(why) => write!(f, "invalid flow: {why}"),
            Error::NotFunctional => f.write_str("a set is mapped to two different vertices"),
        }
    }
}

impl core::error::Error for Error {}
