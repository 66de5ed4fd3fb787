use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] pnbd_core::Error),
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("unknown law id {0:?}")]
    UnknownLaw(String),
    #[error("unknown search target {0:?}")]
    UnknownTarget(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Schema { path: path.into(), message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
