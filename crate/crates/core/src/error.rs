use thiserror::Error;

use crate::reducer::UnclassifiedFixpoint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph6: {msg} (byte {pos})")]
    Graph6 { pos: usize, msg: String },

    #[error("graph6 short form supports at most 62 vertices, got {0}")]
    Graph6TooLarge(usize),

    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("edge ({u}, {v}) has multiplicity above 2")]
    Multiplicity { u: usize, v: usize },

    #[error("({u}, {v}) is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },

    #[error("assignment covers {got} edges but the graph has {expected}")]
    AssignmentShape { expected: usize, got: usize },

    #[error("degree bounds must satisfy g(v) < f(v); violated at vertex {vertex} (g={g}, f={f})")]
    NonStrictBounds { vertex: usize, g: u32, f: u32 },

    #[error("degree bounds cover {got} vertices but the graph has {expected}")]
    BoundsShape { expected: usize, got: usize },

    #[error("exhaustive search is limited to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },

    #[error("not a valid base tree: {0}")]
    NotABaseTree(String),

    #[error("unknown component class {0:?}")]
    UnknownClass(String),

    #[error("parameter k must be at least 1")]
    InvalidK,

    #[error("invalid ratio {0:?}: expected p/q with p, q positive integers")]
    InvalidRatio(String),

    #[error("invalid corpus spec: {0}")]
    Corpus(String),

    #[error("assignment is not a fractional [1,k+1/2]-factor for k={k} (vertex {vertex})")]
    Unverified { k: u32, vertex: usize },

    #[error("rule {rule} produced an invalid factor at vertex {vertex}")]
    InvalidRewrite { rule: &'static str, vertex: usize },

    #[error("rule catalog for k={k} cannot be applied to a factor built for k={factor_k}")]
    CatalogMismatch { k: u32, factor_k: u32 },

    #[error("FIXPOINT_UNCLASSIFIED: {0}")]
    FixpointUnclassified(Box<UnclassifiedFixpoint>),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
