//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("node id {id} out of range 1..={n}")]
    NodeOutOfRange { id: usize, n: usize },
    #[error("self-loop on node {id} is not allowed")]
    SelfLoop { id: usize },
    #[error("input contains no usable data")]
    EmptyInput,
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("unsupported Matrix Market header: {0}")]
    UnsupportedHeader(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquareMatrix { rows: usize, cols: usize },
    #[error("matrix is not symmetric (max deviation {max_dev:e})")]
    NotSymmetric { max_dev: f64 },
    #[error("eigensolver failed to converge")]
    EigenConvergence,
    #[error("matrix exponential overflows f64 (max eigenvalue {max_eigenvalue})")]
    ExpOverflow { max_eigenvalue: f64 },
    #[error("state vector has norm {norm}, expected 1")]
    NotUnitNorm { norm: f64 },
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph has no degrees to weight by (no edges)")]
    EmptyDegrees,
    #[error("iteration did not converge within {max_iter} steps")]
    MaxIterationsExceeded { max_iter: usize },
    #[error("scores have zero variance, rank correlation is undefined")]
    ZeroVariance,
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
