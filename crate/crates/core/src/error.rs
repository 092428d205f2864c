use thiserror::Error;

use crate::group::GroupError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("{value} is not an element of {ring}")]
    NotInRing { value: String, ring: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("modules are defined over different groups")]
    GroupMismatch,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("lifting failed: {0}")]
    Lifting(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
