use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: EdgeId, vertex: VertexId },
    #[error("edge {edge} uses vertex {vertex} but the graph has {vertex_count} vertices")]
    VertexOutOfRange { edge: EdgeId, vertex: VertexId, vertex_count: usize },
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: VertexId, degree: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("block {0} is not a proper block and cannot be the root")]
    RootNotProper(usize),
    #[error("block {0} does not exist")]
    NoSuchBlock(usize),
    #[error("no admissible matching in derived component {component}")]
    NoAdmissibleMatching { component: usize },
    #[error("size guard exceeded: {what} is {actual}, limit {limit}")]
    SizeGuard { what: &'static str, actual: usize, limit: usize },
    #[error("thread {0} is not in the odd unmatched class")]
    NotUnmatchedOdd(usize),
    #[error("weighting has {actual} entries, graph has {expected} edges")]
    WeightLength { expected: usize, actual: usize },
    #[error("exponent of the labelling is not in the weighting family")]
    ExponentNotInFamily,
    #[error("derived 2-factor of the labelling has no odd cycle")]
    NoOddCycle,
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}
