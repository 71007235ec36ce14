use std::path::PathBuf;

/// Errors produced by the signal generators, filter kernels, controllers,
/// and the simulation harness.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument violates an operation's preconditions.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A configuration file could not be parsed or failed validation.
    #[error("config error: {0}")]
    Config(String),

    /// An adaptive filter's error signal left the representable range.
    #[error("algorithm {algorithm} diverged at sample {sample} in run {run_id}")]
    Divergence {
        algorithm: String,
        run_id: u32,
        sample: usize,
    },

    /// An I/O failure, annotated with the path involved.
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
