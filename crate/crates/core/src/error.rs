use crate::closedform::Validity;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("divergent: {0}")]
    Divergent(String),
    #[error("invalid parameters ({})", .0.reason.map(|r| r.as_str()).unwrap_or("?"))]
    Validation(Validity),
    #[error("unsupported case: {0}")]
    Unsupported(String),
    #[error("{what} did not converge: err {err:e} > target {target:e}")]
    NonConverged { what: String, err: f64, target: f64 },
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
