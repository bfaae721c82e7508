//! Graph representations: vertex sets over a fixed universe, simple graphs,
//! edge-coloured complete (and complete bipartite) graphs, and the witness /
//! certificate types the rest of the crate trades in.

mod colouring;
mod simple;
mod vertex_set;
mod witness;

pub use colouring::{BipartiteColouring, ColouredCompleteGraph};
pub use simple::SimpleGraph;
pub use vertex_set::VertexSet;
pub use witness::{CutCertificate, SubgraphWitness};
