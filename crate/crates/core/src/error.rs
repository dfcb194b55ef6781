use thiserror::Error;

/// Errors produced by graph construction, parsing, and the verification engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph order {order} exceeds the supported limit of {limit}")]
    OrderTooLarge { order: usize, limit: usize },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("block index {index} out of range ({count} blocks)")]
    BlockIndex { index: usize, count: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
