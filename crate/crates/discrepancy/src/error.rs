//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element {element} of set {set} is out of range for ground set of size {n}")]
    ElementOutOfRange { set: usize, element: usize, n: usize },

    #[error("subset index {index} is out of range for ground set of size {n}")]
    SubsetOutOfRange { index: usize, n: usize },

    #[error("indices must be strictly increasing (set {set})")]
    NotSorted { set: usize },

    #[error("ground-set sizes differ: expected {expected}, part {part} has {found}")]
    GroundSetMismatch { expected: usize, part: usize, found: usize },

    #[error("coloring has {found} entries, ground set has {expected}")]
    ColoringLength { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("row partition invalid: {0}")]
    InvalidPartition(String),

    #[error("budget of {budget} exceeded (needed {needed})")]
    BudgetExceeded { budget: u64, needed: u64 },

    #[error("every square submatrix is singular; no determinant witness exists")]
    AllSingular,

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("order {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("parameter out of range: {0}")]
    InvalidParameter(String),

    #[error("{path}: {message}")]
    Parse { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
