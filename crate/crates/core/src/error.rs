use thiserror::Error;

/// Errors raised by the library. Every variant is a violated precondition;
/// none of the operations here fail for environmental reasons.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be positive, got {0}")]
    NonPositivePart(i128),

    #[error("the empty partition is not accepted here")]
    EmptyPartition,

    #[error("partition sum overflows u64")]
    Overflow,

    #[error("secondary addition needs at least two parts with n1 != n2, got {0}")]
    SecondaryAdditionUndefined(String),

    #[error("length bound needs n >= 1")]
    ZeroSize,

    #[error("part bound needs k >= 2, got {0}")]
    PartIndexTooSmall(u64),

    #[error("series truncations differ: {left} vs {right}")]
    MismatchedTruncation { left: usize, right: usize },

    #[error("factor exponent must be positive")]
    ZeroExponent,

    #[error("partition {partition} has cyclicity index {index}, expected 0")]
    NonzeroCyclicity { partition: String, index: i128 },

    #[error("triangular multiset is empty")]
    EmptyMultiset,

    #[error("{0} is not a triangular number")]
    NotTriangular(u64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("{operation} needs cyclicity index {expected}, got {actual}")]
    WrongCyclicitySign { operation: &'static str, expected: &'static str, actual: i128 },

    #[error("cumulative prediction needs x > 1, got {0}")]
    CutoffTooSmall(String),

    #[error("discriminant must be negative, got {0}")]
    NonNegativeDiscriminant(i64),

    #[error("{0} is not a discriminant (must be 0 or 1 mod 4)")]
    NotDiscriminant(i64),

    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),

    #[error("discriminant {0} is outside the supported range")]
    DiscriminantTooLarge(i64),

    #[error("form ({a}, {b}, {c}) is not positive definite")]
    NotPositiveDefinite { a: i64, b: i64, c: i64 },

    #[error("forms have different discriminants: {left} vs {right}")]
    MismatchedDiscriminant { left: i64, right: i64 },

    #[error("invalid discriminant range [{from}, {to}]")]
    InvalidRange { from: i64, to: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
