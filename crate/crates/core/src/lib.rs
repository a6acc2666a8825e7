//! Metric subgraphs (center, annulus, periphery) of small graphs.

pub mod canon;
pub mod certify;
pub mod cli;
pub mod codec;
pub mod construct;
pub mod error;
pub mod graph;
pub mod metric;
pub mod search;

pub use error::{Error, Result};
pub use graph::{Graph, StandardKind, VertexSet, MAX_ORDER};
