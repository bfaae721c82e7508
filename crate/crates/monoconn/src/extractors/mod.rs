//! Constructive proofs turned into algorithms.
//!
//! Each extractor takes a colouring (and parameters), walks the steps of the
//! argument that guarantees a large k-connected monochromatic subgraph, and
//! returns the subgraph it found as a re-checkable [`SubgraphWitness`]
//! together with the promised order and a trace of the steps taken.  The
//! inequalities the argument relies on are asserted at every step, so a
//! witness is never returned on faith: if an extractor's reasoning breaks on
//! some input, the call fails with an internal error instead of producing an
//! unverified answer.

mod bipartite;
mod components;
mod degs;
mod mader;
mod multi_colour;
mod three_colour;
mod two_colour;

pub use bipartite::{extract_31kbip, extract_r1kbip, turan_edge_budget, BipOutcome};
pub use components::{extract_bip_component, extract_r11};
pub use degs::extract_degs;
pub use mader::extract_mader;
pub use multi_colour::extract_thm_r1k;
pub use three_colour::extract_thm31k;
pub use two_colour::{extract_thm21k, extract_thm21k_with, ThresholdMode};

use serde::Serialize;

use crate::graph::{SubgraphWitness, VertexSet};

/// One named step in an extraction, with an optional vertex set attached.
///
/// Entries are ordered and compared exactly, so two runs on the same input
/// can be checked for determinism by comparing whole traces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub label: String,
    pub note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<usize>>,
}

/// The ordered list of proof steps an extractor walked through.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Trace(pub Vec<TraceEntry>);

impl Trace {
    pub fn new() -> Self {
        Trace(Vec::new())
    }

    /// Record a step with a free-form note.
    pub fn note(&mut self, label: &str, note: impl Into<String>) {
        self.0.push(TraceEntry {
            label: label.into(),
            note: note.into(),
            vertices: None,
        });
    }

    /// Record a step together with the vertex set it produced.
    pub fn set(&mut self, label: &str, note: impl Into<String>, set: &VertexSet) {
        self.0.push(TraceEntry {
            label: label.into(),
            note: note.into(),
            vertices: Some(set.to_vec()),
        });
    }

    pub fn entries(&self) -> &[TraceEntry] {
        &self.0
    }
}

/// A verified extraction: the witness, the order the theorem promised for
/// these parameters, and the steps that led there.
///
/// Invariants (checked before the report is built): the witness re-verifies
/// under the connectivity test, and `witness.order() >= guarantee`.
#[derive(Clone, Debug, Serialize)]
pub struct ExtractionReport {
    pub witness: SubgraphWitness,
    pub guarantee: usize,
    pub trace: Trace,
}

impl ExtractionReport {
    pub fn order(&self) -> usize {
        self.witness.order()
    }
}
