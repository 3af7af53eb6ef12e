use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("vertex {vertex} out of range for a tree on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid subtree: {0}")]
    InvalidSubtree(String),

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("no related subset of the pool covers the targets")]
    Uncoverable,

    #[error("{what} has size {size}, above the cap of {cap}")]
    SizeCapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("operation requires a nonempty interval family")]
    EmptyFamily,

    #[error("interval endpoints are not pairwise distinct")]
    EndpointsNotDistinct,

    #[error("not a strict partial order: {0}")]
    NotAPartialOrder(String),

    #[error("order does not realize the given graph as its incomparability graph")]
    PosetMismatch,

    #[error("lemma violated: {0}")]
    LemmaViolation(String),

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
