use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) carries conflicting labels {first} and {second}")]
    ConflictingLabel {
        u: usize,
        v: usize,
        first: usize,
        second: usize,
    },
    #[error("label {label} outside 1..={delta}")]
    LabelOutOfRange { label: usize, delta: usize },
    #[error("delta must be at least {min}, got {got}")]
    DeltaTooSmall { min: usize, got: usize },
    #[error("delta mismatch: {0} vs {1}")]
    DeltaMismatch(usize, usize),
    #[error("invalid sequence: {0}")]
    BadSequence(String),
    #[error("unknown graph name `{0}`")]
    UnknownGraph(String),
    #[error("size guard: {what} has size {size}, limit {limit} (pass the override flag to force)")]
    SizeGuard {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("dead position: tree vertex {word} has no legal image below target vertex {parent_image}")]
    DeadPosition { word: String, parent_image: usize },
    #[error("labeling is not defined on homomorphism {0:?}")]
    LabelingNotTotal(Vec<usize>),
    #[error("strategy for generator {index} failed: {reason}")]
    StrategyFailed { index: usize, reason: String },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
