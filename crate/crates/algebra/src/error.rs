use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("divisor is not monic in the main variable")]
    NotMonic,
    #[error("divisor has a non-unit constant term in the main variable")]
    NonUnitTrailing,
    #[error("polynomial parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
}
