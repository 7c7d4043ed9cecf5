//! Signed-circuit covers of signed multigraphs: constructions, verification,
//! theorem bounds and exact oracles.

pub mod barbell;
pub mod circuit;
pub mod decomp;
pub mod engine;
pub mod enumerate;
pub mod error;
pub mod fixtures;
mod flow;
pub mod format;
pub mod generate;
pub mod graph;
pub mod limits;
mod multicover;
pub mod structure;
pub mod switching;
pub mod unsigned;

pub use circuit::{Circuit, CircuitDiagnostic, CoverFamily, CoverStats, SignedCircuit};
pub use error::{Error, Result};
pub use graph::{EdgeId, Sign, SignedGraph, VertexId};
pub use limits::Limits;
