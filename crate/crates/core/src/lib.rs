//! Strong re-embeddings of 3-connected cubic planar graphs on the
//! projective plane, torus and Klein bottle.
//!
//! A planar graph is re-embedded by twisting a set of edges of its unique
//! spherical embedding. Twist sets are searched as pattern subgraphs of the
//! dual ([`pattern`]), evaluated by face tracing ([`scheme`], [`engine`]),
//! and cross-checked against an exhaustive sweep over all twist sets
//! ([`census`]).

pub mod canon;
pub mod census;
pub mod dual;
pub mod engine;
pub mod error;
pub mod exec;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod pattern;
pub mod planar;
pub mod scheme;

pub use dual::{dual, DualGraph};
pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{EdgeSet, Graph};
pub use graph6::{emit_graph6, parse_graph6, ParseError};
pub use pattern::{PatternKind, TwistedSubgraph};
pub use engine::{enumerate_reembeddings, reembed, ReEmbedding};
pub use planar::{planar_embed, PlanarEmbedding, RotationSystem};
pub use scheme::{EmbeddingScheme, FacialWalk, Signature, Surface, SurfaceClass};
