//! Error type shared by every module in the crate.

/// Possible failures when building fields, partitions, and enumerators.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("extension degree must be at least 1")]
    ZeroDegree,

    #[error("field size {p}^{m} exceeds the cap of {cap} elements")]
    SizeCap { p: u64, m: u32, cap: u64 },

    #[error("cyclotomy order {order} must be at least 2 and divide r - 1 = {size_minus_one}")]
    BadOrder { order: u64, size_minus_one: u64 },

    #[error(
        "cyclotomy order {order} gives classes of size (r-1)/{order} = 1; nothing to enumerate"
    )]
    DegenerateClasses { order: u64 },

    #[error(
        "order {order} does not divide (r-1)/(p-1) = {quotient}; Gaussian periods are not rational"
    )]
    NotRational { order: u64, quotient: u64 },

    #[error("no integer closed form applies: {0}")]
    NoClosedForm(String),

    #[error("invalid class index set: {0}")]
    InvalidIndexSet(String),

    #[error("discrete log of zero is undefined")]
    LogOfZero,

    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
