use thiserror::Error;

use crate::matroid::GroundElement;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("element {0} is not in the ground set")]
    OutsideGround(GroundElement),

    #[error("set member {0} is not in the declared ground set")]
    NotInGround(String),

    #[error("invalid ground element token {0:?}, expected \"v:i\"")]
    BadToken(String),

    #[error("invalid vertex list {0:?}, expected comma-separated vertex numbers")]
    BadVertexList(String),

    #[error("labeling covers {got} edges but the graph has {expected}")]
    LabelingLength { expected: usize, got: usize },

    #[error("{what}: size {size} exceeds the limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("basis list is empty")]
    EmptyBasisList,
}

impl Error {
    pub(crate) fn limit(what: &'static str, size: usize, limit: usize) -> Self {
        Error::LimitExceeded { what, size, limit }
    }
}
