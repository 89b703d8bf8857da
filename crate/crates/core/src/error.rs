use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("universe size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("vertex pair must be distinct, got ({0}, {0})")]
    SameVertex(usize),

    #[error("self-loop on vertex {0}")]
    SelfLoop(String),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(String, String),

    #[error("graph parse error at line {line}: {msg}")]
    GraphParse { line: usize, msg: String },

    #[error("pauli string parse error: {0}")]
    PauliParse(String),

    #[error("measurement direction is not a unit vector (norm {0})")]
    NotUnitDirection(f64),

    #[error("observable {0} is not hermitian")]
    NotHermitian(String),

    #[error("{n} qubits exceeds the statevector cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("amplitude array of length {len} is not 2^{n}")]
    BadAmplitudeCount { len: usize, n: usize },

    #[error("state is not normalized (norm² = {0})")]
    NotNormalized(f64),

    #[error("projection onto a branch with probability {0:e}")]
    ZeroProbabilityBranch(f64),

    #[error("vertex {vertex} cannot appear in its own neighbourhood guess")]
    VertexInGuess { vertex: usize },

    #[error("mask contains a probed vertex {0}")]
    MaskOverlap(usize),

    #[error("epsilon must lie in (0, 1), got {0}")]
    BadEpsilon(f64),

    #[error("outcome stream is empty")]
    EmptyStream,

    #[error("outcome stream ended after {used} unanimous samples, {needed} required")]
    StreamExhausted { used: usize, needed: usize },

    #[error("state dump: {0}")]
    Dump(String),
}
