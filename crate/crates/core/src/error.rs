use thiserror::Error;

/// Errors raised by construction, enumeration and the grid checks.
///
/// Axiom failures are not errors: they are collected in a
/// [`ValidationReport`](crate::report::ValidationReport) so that a caller can
/// see every violated law with a witness. `Error` covers the cases where no
/// meaningful report can be produced at all.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Malformed input: missing entries, unknown identifiers, ragged tables.
    #[error("structural error: {0}")]
    Structure(String),

    /// A documented precondition of an operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An exhaustive enumeration would exceed the configured cap.
    #[error("enumeration needs {required} candidates but the cap is {cap}")]
    CapExceeded { required: u64, cap: u64 },

    /// Two functions that must share a carrier do not.
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),

    /// A real-valued argument is outside its domain.
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
