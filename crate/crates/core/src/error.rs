use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inconsistent system")]
    InconsistentSystem,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-unit parameter: {0}")]
    NonUnitParameter(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not proper: determinant is {0}")]
    NotProper(String),

    #[error("not conjugate: the linear system has only the zero solution")]
    NotConjugate,

    #[error("no rational unit in the solution plane (norm {0} is not a sum of two rational squares)")]
    NoRationalUnit(String),

    #[error("not a left unit")]
    NotLeftUnit,

    #[error("no left unit")]
    NoLeftUnit,

    #[error("criterion fails: x^2 e != x^2")]
    CriterionFails,

    #[error("parameter square not +-1")]
    SquareNotPlusMinusOne,

    #[error("phi does not fix 1")]
    PhiDoesNotFixOne,

    #[error("hypotheses violated: {check}")]
    HypothesesViolated { check: String },

    #[error("unclassified: {0}")]
    Unclassified(String),

    #[error("unknown suite: {0}")]
    UnknownSuite(String),

    #[error("parse error: {0}")]
    Parse(String),
}
