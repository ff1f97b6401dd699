use thiserror::Error;

/// Errors raised by the polynomial engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A pentanomial parameter pair outside the supported range.
    #[error("invalid pentanomial parameters (m={m}, n={n}): {constraint}")]
    InvalidParams {
        m: u64,
        n: u64,
        constraint: &'static str,
    },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a polynomial of degree at least 1")]
    ConstantPolynomial,
    #[error("reciprocal requires a nonzero constant term")]
    ZeroConstantTerm,
    /// Stickelberger-Swan only applies to polynomials without repeated roots.
    #[error("polynomial has repeated roots; the discriminant parity law does not apply")]
    NotSquarefree,
    #[error("integer polynomial is not monic")]
    NotMonic,
    #[error("power-sum index {index} out of range (table holds 0..={max})")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid modulus {0}; expected at least 2")]
    InvalidModulus(i64),
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
