use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Caller passed inconsistent shapes or arguments.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("quiver has an oriented cycle: {}", .0.join(" -> "))]
    Cycle(Vec<String>),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("connecting arrow `{0}` must run from a C-vertex to a B-vertex")]
    WrongDirection(String),

    #[error("modules live over different algebras")]
    AlgebraMismatch,

    #[error("representation-infinite (or cap {cap} too small): {detail}")]
    RepresentationInfinite { cap: usize, detail: String },

    #[error("enumeration cap exceeded: {0}")]
    EnumerationCap(String),

    /// A randomized search ran out of budget without a certificate either way.
    #[error("undecided: {0}")]
    Undecided(String),

    /// A theorem-level postcondition failed; the payload is the witness.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("table mismatch: {0}")]
    TableMismatch(String),
}

impl Error {
    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Cycle(_) | Error::UnknownVertex(_) | Error::WrongDirection(_) => 2,
            Error::Usage(_) | Error::AlgebraMismatch => 2,
            Error::RepresentationInfinite { .. } | Error::EnumerationCap(_) => 3,
            Error::Undecided(_) | Error::InvariantViolation(_) => 4,
            Error::TableMismatch(_) => 5,
        }
    }
}
