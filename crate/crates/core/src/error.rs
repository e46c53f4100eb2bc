use thiserror::Error;

/// Errors produced by geometric constructors and checkers.
///
/// Everything here is an input contract violation except `Internal`, which
/// marks states the fixed algorithms should never reach.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("unsupported ambient dimension {0} (supported: 1..=4)")]
    UnsupportedDimension(usize),
    #[error("body has no points")]
    EmptyBody,
    #[error("negative coefficient in nonnegative combination")]
    NegativeCoefficient,
    #[error("zero direction vector")]
    ZeroDirection,
    #[error("projection basis is not orthogonal")]
    NonOrthogonalBasis,
    #[error("projection basis vector has irrational norm; use vectors with rational length")]
    IrrationalBasisNorm,
    #[error("invalid rational literal: {0}")]
    InvalidRational(String),
    #[error("invalid fractional partition: {0}")]
    InvalidPartition(String),
    #[error("increment sets must be pairwise disjoint")]
    OverlappingSets,
    #[error("target multiset is not a compression of the source")]
    NotACompression,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("unsupported body combination: {0}")]
    UnsupportedCombination(String),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, GeometryError>;
