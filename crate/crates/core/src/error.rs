use thiserror::Error;

/// Failure modes shared by every computation in the crate.
///
/// `Domain` and `Precondition` mean the caller handed in arguments outside
/// the operation's contract; `Numerical` and `Resource` mean valid input
/// that could not be carried through.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{op}: domain error: {msg}")]
    Domain { op: &'static str, msg: String },
    #[error("{op}: precondition violated: {msg}")]
    Precondition { op: &'static str, msg: String },
    #[error("{op}: numerical failure: {msg}")]
    Numerical { op: &'static str, msg: String },
    #[error("{op}: resource limit exceeded: {msg}")]
    Resource { op: &'static str, msg: String },
}

impl Error {
    pub(crate) fn domain(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Domain { op, msg: msg.into() }
    }

    pub(crate) fn precondition(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Precondition { op, msg: msg.into() }
    }

    pub(crate) fn numerical(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Numerical { op, msg: msg.into() }
    }

    pub(crate) fn resource(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Resource { op, msg: msg.into() }
    }

    /// True for errors caused by invalid arguments rather than by the computation.
    pub fn is_invalid_input(&self) -> bool {
        matches!(self, Error::Domain { .. } | Error::Precondition { .. })
    }

    pub fn op(&self) -> &'static str {
        match self {
            Error::Domain { op, .. }
            | Error::Precondition { op, .. }
            | Error::Numerical { op, .. }
            | Error::Resource { op, .. } => op,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
