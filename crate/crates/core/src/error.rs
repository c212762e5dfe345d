use thiserror::Error;

/// Failures raised by the slope algebra, the Möbius-band tree and the classifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a slope: ({0}, {1}) is not a primitive integer pair")]
    NotASlope(i128, i128),

    #[error("invalid filling frame: ({two_p}, {q}) admits no unimodular frame")]
    InvalidFrame { two_p: i64, q: i64 },

    #[error("not an even slope: {0}/{1} has odd first coordinate")]
    NotEvenSlope(i64, i64),

    #[error("not an even filling; no one-sided splitting exists for ({two_p}, {q})")]
    OddFilling { two_p: i64, q: i64 },

    #[error("excluded exceptional filling ({two_p}, {q})")]
    ExceptionalFilling { two_p: i64, q: i64 },

    #[error("bound too small: no path from {x}/{y} to 0/1 with |x| <= {bound}")]
    BoundTooSmall { x: i64, y: i64, bound: u64 },

    #[error("integer overflow in slope arithmetic")]
    Overflow,

    /// A computed quantity disagreed with a relation the classifier relies on.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
