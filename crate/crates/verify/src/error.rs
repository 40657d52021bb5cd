use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Core(#[from] lmp_core::Error),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("malformed certificate file: {0}")]
    CertificateFile(String),
    #[error("failed to parse JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = VerifyError> = std::result::Result<T, E>;
