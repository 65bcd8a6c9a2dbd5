use thiserror::Error;

/// Errors surfaced by constructors and map builders.
///
/// Internal invariants (sortedness of index sets, sign bookkeeping) are
/// enforced with assertions instead; only caller-facing contract
/// violations are reported through this type.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("not a partition: parts must be weakly decreasing and positive, got {0:?}")]
    BadPartition(Vec<usize>),
    #[error("exchange vector {ks:?} invalid for lambda with column heights {mu:?}")]
    BadExchangeVector { ks: Vec<usize>, mu: Vec<usize> },
    #[error("index set {0:?} is not strictly increasing inside 1..={1}")]
    BadIndexSet(Vec<u32>, usize),
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },
    #[error("invalid map descriptor: {0}")]
    BadDescriptor(String),
    #[error("matrix dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("filling is not a column filling of the diagram: {0}")]
    BadFilling(String),
    #[error("ambient dimension must be at least 1")]
    BadAmbient,
    #[error("no summand scalar: the probe map is identically zero")]
    ScalarProbeZero,
    #[error("inconsistent summand scalar: candidate {candidate} fails on basis column {column}")]
    ScalarInconsistent { candidate: String, column: usize },
    #[error("coefficient index {t} outside the admissible window [{p}, {q}]")]
    OutsideWindow { t: usize, p: usize, q: usize },
}
