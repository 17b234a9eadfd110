use thiserror::Error;

/// Errors produced by diagram construction, invariants and move replay.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("malformed record on line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("non-matching arc: label {label} appears {count} times")]
    NonMatchingArc { label: i64, count: usize },
    #[error("diagram is not planar: {0}")]
    NonPlanar(String),
    #[error("invalid braid word: {0}")]
    InvalidBraid(String),
    #[error("invalid tangle: {0}")]
    InvalidTangle(String),
    #[error("arity mismatch: {0} vs {1} boundary points")]
    ArityMismatch(usize, usize),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
    #[error("need at least {needed} components, diagram has {found}")]
    TooFewComponents { needed: usize, found: usize },
    #[error("not a knot: diagram has {0} components")]
    NotAKnot(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("enumeration guard exceeded: {0} candidates")]
    GuardExceeded(u128),
    #[error("recursion budget of {0} skein nodes exceeded")]
    BudgetExceeded(u64),
    #[error("value is not of the form ±√5^λ")]
    NotSqrt5Power,
    #[error("invalid site: {0}")]
    InvalidSite(String),
    #[error("step {index} failed: {reason}")]
    StepFailed { index: usize, reason: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("empty presentation")]
    EmptyPresentation,
}

pub type Result<T> = std::result::Result<T, Error>;
