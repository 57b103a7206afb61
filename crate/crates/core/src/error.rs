use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Caller passed arguments outside an operation's contract.
    #[error("usage error: {0}")]
    Usage(String),
    #[error("bad prime: {0}")]
    BadPrime(String),
    #[error("degenerate point configuration: {0}")]
    DegenerateConfig(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inconsistent geometry: {0}")]
    InconsistentGeometry(String),
    #[error("retry budget exhausted: {0}")]
    RetryExhausted(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A verification compared a computed value against its expected value and failed.
    #[error("verification mismatch: {0}")]
    Mismatch(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Precondition(_) | Error::Json(_) => 2,
            Error::Mismatch(_) | Error::InconsistentGeometry(_) | Error::DegenerateConfig(_) => 3,
            Error::BadPrime(_) | Error::RetryExhausted(_) | Error::Unsupported(_) | Error::Io(_) => 4,
        }
    }
}
