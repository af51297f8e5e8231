use thiserror::Error;

/// Errors raised anywhere in the toolkit.
///
/// Each variant maps onto one CLI exit code (see [`Error::exit_code`]).
#[derive(Debug, Error)]
pub enum Error {
    /// An input lies outside the domain an operation accepts.
    #[error("domain error: {0}")]
    Domain(String),
    /// An exact/float mode request that cannot be honoured, e.g. a non-squared exact L2 norm.
    #[error("mode error: {0}")]
    Mode(String),
    /// A stated precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A construction could not be completed.
    #[error("construction failed: {0}")]
    Construction(String),
    /// A certificate check failed; `step` names the failing link of the chain.
    #[error("certification failed at step `{step}`: {detail}")]
    Certification { step: String, detail: String },
    /// A scenario configuration does not validate against its schema.
    #[error("config error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn cert(step: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Certification {
            step: step.into(),
            detail: detail.into(),
        }
    }

    /// Process exit code: 2 config, 3 construction, 4 certification, 5 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Domain(_) | Error::Mode(_) | Error::Precondition(_) | Error::Construction(_) => 3,
            Error::Certification { .. } => 4,
            Error::Io(_) => 5,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
