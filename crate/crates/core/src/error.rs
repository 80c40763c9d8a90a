use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is outside the supported range 2..=32768")]
    ModulusOutOfRange(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("determinant is {0}, expected 1")]
    DeterminantNotOne(String),
    #[error("element order exceeds cap {0}")]
    OrderCapExceeded(u64),
    #[error("closure exceeded cap after visiting {visited} elements")]
    CapExceeded { visited: usize },
    #[error("element does not belong to {0}")]
    NotMember(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("index {index} out of range for tuple of length {len}")]
    InvalidIndex { index: usize, len: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("prime {0} divides an entry denominator")]
    DenominatorClash(u64),
    #[error("prime plan has no usable primes")]
    DegeneratePlan,
    #[error("fewer than {wanted} usable primes (found {found})")]
    NotEnoughPrimes { wanted: usize, found: usize },
    #[error("tuple does not generate the group")]
    NotGenerating,
    #[error("group of order {order} exceeds the limit {limit} for this operation")]
    TooLarge { order: u128, limit: u128 },
    #[error("element is not an involution")]
    NotInvolution,
    #[error("certificate replay failed: {0}")]
    Replay(String),
}

pub type Result<T> = std::result::Result<T, Error>;
