//! Crate-wide error type.
//!
//! Structural misuse (mixing moduli, mismatched dimensions) is treated as a
//! programming error and panics at the call site; this enum covers the
//! genuinely fallible operations: constructing algebras, loading files, and
//! computations whose mathematical preconditions can fail on valid input.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0} exceeds the supported bound 2^31 - 1")]
    ModulusTooLarge(u64),

    #[error("invalid algebra selector `{0}`")]
    InvalidSelector(String),

    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),

    #[error("axiom check `{check}` failed at {witness}")]
    AxiomFailure { check: &'static str, witness: String },

    #[error("the bialgebra admits no antipode")]
    NoAntipode,

    #[error("integral pairing is zero; the pair cannot be normalized")]
    UnnormalizablePair,

    #[error("integral space has dimension {found}, expected 1 (corrupted algebra)")]
    IntegralSpaceDimension { found: usize },

    #[error("indicator methods disagree at n={n}: trace gives {trace_value}, integral gives {integral_value}")]
    MethodDisagreement {
        n: usize,
        trace_value: u64,
        integral_value: u64,
    },

    #[error("word degree {needed} exceeds the bound {bound}")]
    DegreeOverflow { bound: usize, needed: usize },

    #[error("malformed algebra file: {0}")]
    FileFormat(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Classify for the CLI exit-code contract: `true` for mathematical
    /// verification failures (exit 1), `false` for input/usage errors (exit 2).
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::AxiomFailure { .. }
                | Error::NoAntipode
                | Error::UnnormalizablePair
                | Error::IntegralSpaceDimension { .. }
                | Error::MethodDisagreement { .. }
                | Error::InvariantViolation(_)
        )
    }
}
