use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a hypergraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("notion {0} needs a parameter t >= 1")]
    MissingParameter(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("size limit exceeded: {what} (limit {limit})")]
    SizeLimit { what: String, limit: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("auxiliary colouring returned {got} colours for {expected} vertices")]
    AuxContract { expected: usize, got: usize },

    #[error("result too large: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
