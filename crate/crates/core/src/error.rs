use thiserror::Error;

/// Errors reported by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph is not connected")]
    NotConnected,
    #[error("{what}: size {size} exceeds limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("round {0} shoots no vertex")]
    EmptyShot(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("strategy is not winning")]
    NotWinning,
    #[error("vertex set does not induce a connected non-empty subgraph")]
    InvalidSubgraph,
    #[error("invalid split partition: {0}")]
    InvalidPartition(String),
    #[error("graph is not an interval graph")]
    NotInterval,
    #[error("vertex set does not cover edge {0}-{1}")]
    NotCover(usize, usize),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
