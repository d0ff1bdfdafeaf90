use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {input:?} as a rational number")]
    ParseRational { input: String },

    #[error("table covers indices 0..={available} but index {needed} was requested")]
    TableTooShort { needed: usize, available: usize },

    #[error("modulus d = {0} is not odd; the distribution relation needs d ≡ 1 (mod 2)")]
    EvenModulus(u64),

    #[error("{0}")]
    Domain(String),

    #[error("identity violated: {0}")]
    IdentityViolated(String),

    #[error("tolerance {tolerance:e} cannot be reached: {reason}")]
    ToleranceUnreachable { tolerance: f64, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
