use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// An enumeration or oracle would exceed its configured cap.
    #[error("{what} = {requested} exceeds the configured cap of {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    /// A cumulant specification cannot supply the requested order.
    #[error("cumulant of order {order} is not available for `{name}`")]
    Order { name: String, order: usize },

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn argument<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}
