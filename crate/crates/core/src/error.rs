use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("vertex {to} is unreachable from vertex {from}")]
    Unreachable { from: usize, to: usize },
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("graph has no product labeling")]
    NotAProduct,
    #[error("invalid probe: {0}")]
    InvalidProbe(String),
    #[error("probe must contain exactly {expected} vertices, got {got}")]
    ProbeArity { expected: usize, got: usize },
    #[error("graph must have at least two vertices")]
    TrivialGraph,
    #[error("degenerate pair: both targets are vertex {0}")]
    DegeneratePair(usize),
    #[error("graph of order {order} exceeds the knowledge-set limit of {limit} vertices")]
    GraphTooLarge { order: usize, limit: usize },
    #[error("strategy does not match graph: {0}")]
    StrategyMismatch(String),
    #[error("unexpected state at turn {turn}: {detail}")]
    UnexpectedState { turn: usize, detail: String },
    #[error("soundness violation: {0}")]
    SoundnessViolation(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
