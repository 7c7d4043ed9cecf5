use thiserror::Error;

use crate::graph::EdgeId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),

    #[error("vertex id {vertex} out of range (vertex count {count})")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),

    /// An exhaustive routine was asked to run past its configured size cap.
    #[error("exact search refused: {what} is {actual}, limit {limit}")]
    SizeLimit {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("search budget exceeded: {0}")]
    Budget(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is not s-bridgeless: edge e{0} lies in no signed circuit")]
    NotSBridgeless(EdgeId),

    #[error("signature is not minimal: {0}")]
    NonMinimalSignature(String),

    #[error("graph has a bridge e{0}")]
    Bridge(EdgeId),

    #[error("not a cover: {0}")]
    NotACover(String),

    /// A construction produced an output that failed post-hoc verification.
    #[error("internal construction defect: {0}")]
    Defect(String),

    #[error("bound violated: {0}")]
    BoundViolation(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn defect(msg: impl Into<String>) -> Self {
        Error::Defect(msg.into())
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
