use thiserror::Error;

/// Failures of the transform kernels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("signal is empty")]
    EmptySignal,
    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("length {0} is odd, half-wave split needs an even length")]
    OddLength(usize),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("plan was built for length {plan}, signal has length {signal}")]
    PlanSizeMismatch { plan: usize, signal: usize },
    #[error("order {0} exceeds the largest materialized Hadamard matrix")]
    OracleTooLarge(usize),
}
