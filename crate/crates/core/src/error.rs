use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("order {0} exceeds the supported maximum of 62")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency rows not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is null")]
    NullGraph,
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("{0}")]
    Precondition(String),
    #[error("unknown gallery id `{0}`")]
    UnknownGalleryId(String),
    #[error("search: {0}")]
    Search(String),
}

pub type Result<T> = std::result::Result<T, Error>;
