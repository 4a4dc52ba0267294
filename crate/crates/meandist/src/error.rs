//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph has no edges")]
    EdgelessGraph,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("weight vector has length {got}, expected {expected}")]
    WeightLengthMismatch { got: usize, expected: usize },

    #[error("negative weight at vertex {0}")]
    NegativeWeight(usize),

    #[error("total weight must exceed 1, got {0}")]
    TotalWeightTooSmall(String),

    #[error("order must be at least 2")]
    OrderTooSmall,

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("field order {q} exceeds the configured cap {cap}")]
    FieldTooLarge { q: u64, cap: u64 },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("element does not belong to this field")]
    FieldMismatch,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("construction audit failed: {0}")]
    ConstructionAudit(String),

    #[error("{0} is not a positive multiple of {1}")]
    NotAMultiple(String, u64),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("internal pipeline audit failed: {0}")]
    InternalAudit(String),

    #[error("inequality violated on {graph6}: {detail}")]
    BoundViolation { graph6: String, detail: String },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("format error: {0}")]
    Format(String),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the CLI: 1 usage, 2 I/O or format,
    /// 3 hypothesis violation, 4 inequality violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameters(_) | Error::NotPrimePower(_) | Error::NotAMultiple(_, _) => 1,
            Error::HypothesisViolation(_) | Error::Disconnected => 3,
            Error::BoundViolation { .. } | Error::InternalAudit(_) => 4,
            _ => 2,
        }
    }
}
