use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The valuation of the zero polynomial is infinite and has no `Value`.
    #[error("valuation of the zero polynomial is infinite")]
    ZeroPolynomial,

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("basis is not unimodular (determinant {det})")]
    NonUnimodular { det: i64 },

    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: i64, b: i64 },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// A stream comparison could not be decided within the iteration cap.
    #[error("comparison undecided after {iters} refinements")]
    Indecisive { iters: usize },

    #[error("requested {requested} convergents but only {available} digits are available")]
    InsufficientDigits { requested: usize, available: usize },

    #[error("continued fraction digit {index} is not positive")]
    InvalidDigit { index: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("nu(x) = nu(y): the positive path is degenerate")]
    DegenerateRatio,

    #[error("k[x, y] is not positive for this valuation")]
    RootNotPositive,

    #[error("chart curve does not pass through the origin")]
    NotThroughOrigin,

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
