//! Error type shared by every engine in the crate.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}`")]
    UnknownVariable { name: String },

    #[error("resource bound exceeded: {0}")]
    Resource(String),

    #[error("generators are not homogeneous in the required variable block")]
    NonHomogeneous,

    #[error("matrix dimensions do not match the module presentations")]
    DimensionMismatch,

    #[error("input vector is not a relation of the restricted partials")]
    NotARelation,

    #[error("hypothesis failed: {0}")]
    Hypothesis(String),

    #[error("polynomial does not fit the target ring: involves `{var}`")]
    OutOfSubring { var: String },
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
