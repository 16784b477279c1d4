use thiserror::Error;

use crate::graph6::ParseError;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not planar")]
    NotPlanar,

    #[error("graph is not cubic (vertex {vertex} has degree {degree})")]
    NotCubic { vertex: usize, degree: usize },

    #[error("graph is not 3-connected")]
    NotThreeConnected,

    /// Two primal faces share more than one edge, or an edge bounds a single face.
    #[error("dual graph is not simple (primal edges {first} and {second})")]
    DualNotSimple { first: usize, second: usize },

    #[error("inconsistent surface: euler characteristic {chi} with orientable={orientable}")]
    InconsistentSurface { chi: i64, orientable: bool },

    #[error("oracle sweep over {edges} edges exceeds the cap of {cap}")]
    SweepTooLarge { edges: usize, cap: usize },

    #[error("no edge {0}-{1} in graph")]
    UnknownEdge(usize, usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
