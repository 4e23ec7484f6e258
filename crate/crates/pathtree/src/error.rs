use thiserror::Error;

/// Errors for contract violations and bad input, as opposed to a negative
/// recognition verdict (see [`crate::recognizer::Rejection`] for that).
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),

    #[error("graph is not chordal")]
    NotChordal,

    #[error("clique does not separate the graph")]
    NotASeparator,

    #[error("instance exceeds capacity: {0}")]
    Capacity(String),

    #[error("{0}")]
    Contract(String),
}
