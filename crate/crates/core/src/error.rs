use thiserror::Error;

use crate::vertex_set::VertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex id {0} is out of range (ids must be below 64)")]
    VertexOutOfRange(usize),

    #[error("face {face} is not contained in the vertex set {ambient}")]
    FaceOutsideAmbient { face: VertexSet, ambient: VertexSet },

    #[error("{0} is not a face of the complex")]
    NotAFace(VertexSet),

    #[error("{0} is not a free face")]
    NotFree(VertexSet),

    #[error("the operation is undefined on the void complex")]
    VoidComplex,

    #[error("vertex sets overlap: {0} and {1}")]
    OverlappingVertexSets(VertexSet, VertexSet),

    #[error("the subcomplex is not contained in the complex (offending face {0})")]
    NotASubcomplex(VertexSet),

    #[error("complexes live on different vertex sets: {0} and {1}")]
    AmbientMismatch(VertexSet, VertexSet),

    #[error("empty family")]
    EmptyFamily,

    #[error("hypergraph is not uniform: edge {edge} has size {found}, expected {expected}")]
    NonUniform { edge: VertexSet, expected: usize, found: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("input refused: {0}")]
    Refused(String),

    #[error("arithmetic overflow computing {0}")]
    Overflow(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition(message.into())
    }
}
