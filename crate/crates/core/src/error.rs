use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graphs must have between 1 and {max} vertices, got {n}")]
    VertexCount { n: usize, max: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("operation requires a nonempty vertex set")]
    EmptyVertexSet,

    #[error("operation requires a connected graph")]
    Disconnected,

    #[error("graph on {n} vertices exceeds the bound of {bound} for {what}")]
    Budget { what: &'static str, n: usize, bound: usize },

    #[error("invalid family parameters for {family}: {reason}")]
    FamilyParams { family: String, reason: String },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("gluing structure is not a tree: {0}")]
    NotATree(String),

    #[error("map is not a valid {0}")]
    InvalidMap(&'static str),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
