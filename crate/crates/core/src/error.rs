use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Reasons a graph fails validation after it has been tokenized.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("vertex {vertex} outside 1..={vertex_count}")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("{what} exceeds guard: {actual} > {limit}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("not a facet: minimizer set has dimension {dim}, expected {expected}")]
    NotAFacet { dim: usize, expected: usize },
    #[error("zero normal vector")]
    ZeroNormal,
    #[error("vector has length {actual}, expected {expected}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("edge {{{0}, {1}}} belongs to the spanning tree")]
    EdgeInTree(usize, usize),
    #[error("index {index} out of range (size {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("empty point subset")]
    EmptySubset,
    #[error("empty face")]
    EmptyFace,
    #[error("face must be positive-dimensional")]
    DegenerateFace,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    pub(crate) fn too_large(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::TooLarge {
            what,
            limit,
            actual,
        }
    }

    /// Process exit code for this error: 1 for bad input, 2 for guard
    /// violations, 3 for internal inconsistencies.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::TooLarge { .. } => 2,
            Error::InternalInconsistency(_) => 3,
            _ => 1,
        }
    }
}
