use thiserror::Error;

/// Errors produced by the operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A result (or an intermediate that must be stored) does not fit its
    /// integer type.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    /// An argument is outside the operation's domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A size parameter is larger than the configured soft cap.
    #[error("{what} = {value} exceeds the soft cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_positive(name: &str, value: u64) -> Result<()> {
    if value == 0 {
        Err(Error::InvalidArgument(format!(
            "{name} must be a positive integer"
        )))
    } else {
        Ok(())
    }
}
