use thiserror::Error;

/// Broad class of a failure, used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed or inconsistent input (bad syntax, wrong field, length mismatch).
    Input,
    /// A mathematical precondition does not hold for the given object.
    Precondition,
    /// The computation contradicted a structural theorem it relies on.
    Inconsistency,
}

impl ErrorClass {
    /// Process exit status: 1 input, 2 precondition, 3 inconsistency.
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorClass::Input => 1,
            ErrorClass::Precondition => 2,
            ErrorClass::Inconsistency => 3,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("divisor is not monic in Y")]
    NotMonic,

    #[error("{0}")]
    InvalidArgument(String),

    #[error("approximate root: {0}")]
    ApproximateRoot(String),

    #[error(
        "characteristic hypothesis violated: characteristic {p} divides both m = deg_Y F = {m} and n = deg_X F = {n}"
    )]
    HypothesisH { p: u32, m: u32, n: u32 },

    #[error("Y divides F; the curve contains the line Y = 0")]
    YDividesF,

    #[error("curve does not have a single rational branch at infinity: {0}")]
    NotOneBranch(String),

    #[error("not a numerical semigroup: generators have gcd {0}")]
    NotNumericalSemigroup(u64),

    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(u64),

    #[error("semigroup is not symmetric")]
    NotSymmetric,

    #[error("{0} lies outside the interval [c, 2c-2] = [{1}, {2}]")]
    OutsideSymmetricInterval(u64, u64, u64),

    #[error("zero function on the curve")]
    ZeroFunction,

    #[error("denominator vanishes identically on the curve")]
    ZeroDenominator,

    #[error("F and g share a common factor")]
    CommonFactor,

    #[error("series precision ceiling {ceiling} reached: {context}")]
    PrecisionCeiling { ceiling: usize, context: String },

    #[error("integral basis inconsistent: {0}")]
    InconsistentBasis(String),

    #[error("function has a pole at evaluation point {0}")]
    PoleAtPoint(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            Parse(_) | InvalidField(_) | FieldMismatch(..) | InvalidArgument(_)
            | LengthMismatch { .. } => ErrorClass::Input,
            DivisionByZero
            | NotMonic
            | ApproximateRoot(_)
            | HypothesisH { .. }
            | YDividesF
            | NotOneBranch(_)
            | NotNumericalSemigroup(_)
            | NotInSemigroup(_)
            | NotSymmetric
            | OutsideSymmetricInterval(..)
            | ZeroFunction
            | ZeroDenominator
            | CommonFactor
            | PrecisionCeiling { .. }
            | PoleAtPoint(_) => ErrorClass::Precondition,
            InconsistentBasis(_) | Internal(_) => ErrorClass::Inconsistency,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
