use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported base dimension {0} (expected 1..=4)")]
    UnsupportedDimension(usize),
    #[error("grade mismatch: {0}")]
    GradeMismatch(String),
    #[error("operator has no definite grade")]
    IndefiniteGrade,
    #[error("momentum is only available for order 1 or 2, got {0}")]
    UnsupportedOrder(usize),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("lie algebra axiom failed: {0}")]
    LieAxiom(String),
    #[error("momentum ({0}) is not on shell")]
    OffShell(String),
    #[error("identity failed; residual {0}")]
    Residual(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
