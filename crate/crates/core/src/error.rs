use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge forms have different lengths ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: VertexId, order: usize },
    #[error("duplicate edge {from} -> {to}")]
    DuplicateEdge { from: VertexId, to: VertexId },
    #[error("edge {from} -> {to} has weight zero")]
    ZeroWeight { from: VertexId, to: VertexId },
    #[error("graph has no edge weights")]
    MissingWeights,
    #[error("weight {numerator}/{denominator} is not strictly positive")]
    NonPositiveWeight { numerator: i64, denominator: u64 },
    #[error("weight has a zero denominator")]
    ZeroDenominator,
    #[error("integer overflow while scaling weights")]
    Overflow,
    #[error("layer meet is infeasible: no walk of {hops} hops")]
    InfeasibleMeet { hops: usize },
    #[error("path is empty")]
    EmptyPath,
    #[error("path is not a walk of the graph it was given for")]
    InvalidPath,
    #[error("endpoint {vertex} does not belong to coarse class {class}")]
    ClassMismatch { vertex: VertexId, class: VertexId },
    #[error("partition is malformed: {0}")]
    MalformedPartition(&'static str),
    #[error("level {level} does not exist (hierarchy has {depth} levels)")]
    LevelOutOfRange { level: usize, depth: usize },
    #[error("minimum order must be at least 1")]
    ZeroMinOrder,
    #[error("hierarchy is inconsistent: {0}")]
    InconsistentHierarchy(&'static str),
}
