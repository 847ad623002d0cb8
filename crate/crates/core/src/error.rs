use std::io;

/// Errors surfaced by the library and the command-line front end.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The caller passed arguments outside an operation's contract.
    #[error("usage error: {0}")]
    Usage(String),
    /// A parenthesis sequence or file is structurally malformed.
    #[error("integrity error: {0}")]
    Integrity(String),
    /// A fast builder disagreed with the reference implementation.
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }

    /// Process exit code used by the `lyndon` binary.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Verification(_) | Error::Integrity(_) => 1,
            Error::Usage(_) => 2,
            Error::Io(_) => 3,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
