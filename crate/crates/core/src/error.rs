use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("matrix is not skew-symmetric: {0}")]
    NotSkew(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("interpolation produced a non-integral coefficient for {0}")]
    NonIntegral(String),
    #[error("identity violated: {0}")]
    IdentityViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("statistic {stat} does not apply to {kind}")]
    StatisticInapplicable { stat: String, kind: String },
    #[error("object is invalid: {0}")]
    InvalidObject(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
