//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("entry count {got} does not match shape (expected {expected})")]
    EntryCount { expected: usize, got: usize },

    #[error("matrix shapes {left:?} and {right:?} are incompatible")]
    MatrixShape {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular (rank {rank})")]
    Singular { rank: usize },

    #[error("cannot parse rational from {0:?}")]
    BadRational(String),

    #[error("invalid object: {0}")]
    BadObject(String),

    #[error("morphism domains do not match: expected {expected}, got {got}")]
    DomainMismatch { expected: String, got: String },

    #[error("morphism matrix is {rows}x{cols} but the shape lists require {want_rows}x{want_cols}")]
    MorShape {
        rows: usize,
        cols: usize,
        want_rows: usize,
        want_cols: usize,
    },

    #[error("operation requires a morphism between single objects, got {0}")]
    NotSimple(String),

    #[error("structures live on different carriers: {left} vs {right}")]
    CarrierMismatch { left: String, right: String },

    #[error("module axioms fail at construction: {0}")]
    ModuleAxiom(String),

    #[error("structure checks failed: {0}")]
    AxiomFailure(String),

    #[error("pairing is degenerate (rank {rank} of {dim})")]
    DegeneratePairing { rank: usize, dim: usize },

    #[error("pairing is not invariant")]
    NonInvariantPairing,

    #[error("not a unit: left-multiplication has rank defect {rank_defect}")]
    NotAUnit { rank_defect: usize },

    #[error("element has a one-sided inverse only")]
    OneSidedInverse,

    #[error("morphism is not an algebra automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("invalid Cayley table: {0}")]
    BadCayleyTable(String),

    #[error("invalid generator parameter: {0}")]
    BadParameter(String),

    #[error("internal verification failed: {0}")]
    Verification(String),
}
