use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count {0} out of range (must be 1..=32)")]
    OrderOutOfRange(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("graph6 parse error: {0}")]
    Graph6(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("{op}: n = {n} exceeds the search budget of {max}")]
    BudgetExceeded { op: &'static str, n: usize, max: usize },

    #[error("invalid terminal set: {0}")]
    InvalidTerminals(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("unknown block name: {0}")]
    UnknownBlock(String),

    #[error("{class} is not defined for n = {n}: {reason}")]
    ClassOutOfRange { class: &'static str, n: usize, reason: &'static str },

    #[error("invalid parameters for the clique-chain construction: n = {n}, k = {k}")]
    InvalidConstruction { n: usize, k: usize },

    #[error("unsupported method for k = {k}: {reason}")]
    UnsupportedMethod { k: usize, reason: &'static str },

    #[error("unknown check id: {0}")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
