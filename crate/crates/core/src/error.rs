//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("dimension mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },

    #[error("series has zero constant term, cannot invert")]
    ZeroConstantTerm,

    #[error("series constant term must be 1 for log")]
    ConstantTermNotOne,

    #[error("series constant term must be 0 for exp")]
    NonZeroConstantTerm,

    #[error("negative exponent in product of (1 - v^gamma) factors")]
    NegativeExponent,

    #[error("vertex set is empty")]
    EmptyVertexSet,

    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("weight vector has empty support")]
    EmptySupport,

    #[error("exact arithmetic produced a non-integer where an integer is required: {context}")]
    IntegralityViolation { context: String },

    #[error("multiplicity table bound {have} is too small, need at least {need}")]
    BoundTooSmall { need: u32, have: u32 },

    #[error("brute-force budget of {limit} steps exceeded")]
    BudgetExceeded { limit: u64 },

    #[error("graph must be connected for this operation")]
    DisconnectedGraph,

    #[error("chromatic discriminant routes disagree: {detail}")]
    DiscriminantMismatch { detail: String },

    #[error("corpus enumeration supports at most 7 vertices, got {0}")]
    CorpusTooLarge(usize),

    #[error("element not in lattice")]
    NotInLattice,
}

pub type Result<T> = std::result::Result<T, Error>;
