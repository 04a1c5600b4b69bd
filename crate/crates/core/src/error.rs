//! Error type shared by every module.

use thiserror::Error;

/// Failures that prevent a computation from producing a result.
///
/// Negative verdicts (an axiom that fails, a map that is not a derivation)
/// are reported in result structs, not here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("subspace b is not contained in z")]
    NotASubspace,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid factor: {0}")]
    InvalidFactor(String),
    #[error("twist map is not invertible")]
    SingularTwist,
    #[error("operands live over different algebras")]
    AlgebraMismatch,
    #[error("not a member of the declared space: {0}")]
    NotAMember(String),
    #[error("degree {n} exceeds the configured cap {cap}")]
    DegreeCap { n: usize, cap: usize },
    #[error("d^(n+1) composed with delta^n is nonzero on verified input (n = {n})")]
    ZigzagViolation { n: usize },
    #[error("operator is not a relative Rota-Baxter operator")]
    NotRotaBaxter,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("operators are defined over different representations")]
    RepresentationMismatch,
    #[error("map does not generate a linear deformation")]
    NotAGenerator,
    #[error("invalid series: {0}")]
    InvalidSeries(String),
    #[error("parse error: {context}")]
    Parse { context: String },
    #[error("conflicting products for ({left}, {right})")]
    ConflictingProduct { left: String, right: String },
}

pub type Result<T> = std::result::Result<T, Error>;
