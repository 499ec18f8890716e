use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("field order {p}^{d} exceeds the capacity of {capacity} elements")]
    CapacityExceeded { p: u64, d: u32, capacity: u64 },
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not irreducible over F_{0}")]
    Reducible(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("index {index} out of range for a field of order {q}")]
    IndexOutOfRange { index: u64, q: u64 },
    #[error("element does not belong to this field")]
    ForeignElement,
    #[error("q = {q} is in the wrong residue class: {reason}")]
    WrongResidueClass { q: u64, reason: &'static str },
    #[error("argument must be non-zero")]
    ZeroArgument,
    #[error("quadratic has zero discriminant")]
    ZeroDiscriminant,
    #[error("operation requires characteristic {expected}, got {actual}")]
    WrongCharacteristic { expected: u64, actual: u64 },
    #[error("run length {len} exceeds the characteristic {p}")]
    RunTooLong { len: u32, p: u64 },
    #[error("run length {0} is below 2")]
    RunTooShort(u32),
    #[error("no closed form for runs of length {len} in characteristic {p}")]
    NoClosedForm { len: u32, p: u64 },
    #[error("closed form for q = {q} is not an integer")]
    NonIntegerResult { q: u64 },
    #[error("two-squares parameter for q = {q} is not unique ({count} candidates)")]
    NonUnique { q: u64, count: usize },
    #[error("q = {0} is outside the oracle range")]
    OracleRange(u64),
    #[error("malformed character table cache: {0}")]
    BadCache(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
