//! Toolkit around a single extremal quantity: over all r-colourings of the
//! edges of K_n, the guaranteed order of a k-connected subgraph using few
//! colours. The crate provides the extremal colourings (constructions), the
//! matching extraction procedures that find large single-colour k-connected
//! subgraphs in arbitrary colourings, an exact small-n oracle, an adversarial
//! search driver, and a bounds table.
//!
//! Conventions used throughout:
//! - vertices are 0-indexed, colours are 1-indexed;
//! - a graph is k-connected only if it has at least k+1 vertices and stays
//!   connected after deleting any k-1 of them (so K_k is not k-connected,
//!   and "no witness" is representable as order 0).

pub mod algebra;
pub mod connectivity;
pub mod constructions;
pub mod error;
pub mod extractors;
pub mod graph;
pub mod oracle;
pub mod tools;

pub use error::Error;
pub use graph::{
    BipartiteColouring, ColouredCompleteGraph, CutCertificate, SimpleGraph, SubgraphWitness,
    VertexSet,
};

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
