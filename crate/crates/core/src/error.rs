use thiserror::Error;

use crate::graph6::Graph6Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} outside supported range 1..=64")]
    InvalidOrder(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge endpoint {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("cannot delete the only vertex of K1")]
    DeleteFromSingleton,
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("cannot remove every vertex of the graph")]
    RemovesAllVertices,
    #[error("vertex set ranges over {got} vertices, graph has {expected}")]
    UniverseMismatch { expected: usize, got: usize },
    #[error("{operation} supports at most {limit} vertices, got {n}")]
    TooLarge {
        operation: &'static str,
        limit: usize,
        n: usize,
    },
    #[error("graph is not 3-vertex-critical (gamma = {gamma}, failing vertex {failing_vertex:?})")]
    NotThreeCritical {
        gamma: usize,
        failing_vertex: Option<usize>,
    },
    #[error("H pattern is not 2-regular: {0}")]
    InvalidPattern(String),
    #[error("unknown named graph {0:?}")]
    UnknownGraph(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("enumeration of order {n} requires min_degree >= 3 or k15_free_only")]
    UnprunedScan { n: usize },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}
