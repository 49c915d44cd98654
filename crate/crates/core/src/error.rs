use thiserror::Error;

/// Errors produced while building instances, solving them or running reductions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("{field}: expected {expected} entries, found {found}")]
    Length {
        field: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("weights: vertex {0} has weight 0, weights must be positive")]
    ZeroWeight(usize),

    #[error("vertex {vertex} is mapped to {image}, which is not a vertex of the target")]
    ImageOutOfRange { vertex: usize, image: usize },

    #[error("edge ({u}, {v}) is mapped to ({fu}, {fv}), which is not an edge of the target")]
    NotAnEdge {
        u: usize,
        v: usize,
        fu: usize,
        fv: usize,
    },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("{what}: size {found} exceeds the configured limit {limit}")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        found: usize,
    },

    #[error("min-max ordering search cap exceeded: a side has {found} vertices, cap is {cap}")]
    SearchCap { cap: usize, found: usize },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("target is not a proper interval bigraph")]
    NotProperIntervalBigraph,

    #[error("invalid min-max ordering: {0}")]
    InvalidOrdering(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
