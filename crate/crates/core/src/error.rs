use alloc::string::String;

/// Errors raised by the core routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument violates a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A graph could not be turned into a metric because some pair of
    /// vertices has no connecting path.
    #[error("unbounded distance: {0}")]
    UnboundedDistance(String),

    /// An exhaustive routine was asked to run above its size cap.
    #[error("{what}: size {size} exceeds the exhaustive cap of {cap}; {hint}")]
    AboveCap {
        what: &'static str,
        size: usize,
        cap: usize,
        hint: &'static str,
    },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
