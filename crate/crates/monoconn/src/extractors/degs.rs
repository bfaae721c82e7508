//! Minimum-degree dichotomy for two colours.
//!
//! If every vertex of a 2-coloured complete graph has at least 2k-2 edges of
//! colour 1, then either the colour-1 graph is already k-connected, or
//! removing a cut of at most k-1 vertices leaves colour-1 components of order
//! at least k each, and the colour-2 edges between those components form a
//! complete multipartite graph that is k-connected on the remaining n-|S|
//! vertices.

use crate::connectivity::{components, is_k_connected, KConnectivity};
use crate::graph::{ColouredCompleteGraph, SimpleGraph, SubgraphWitness, VertexSet};
use crate::{hypothesis_check, internal_check};
use crate::{Error, Result};

use super::{ExtractionReport, Trace};

/// Outcome of testing a minimum-degree-2k-2 graph for k-connectivity.
pub(crate) enum MinDegreeSplit {
    /// The graph itself is k-connected.
    Primary,
    /// A cut of at most k-1 vertices splits it into components of order
    /// at least k each.
    Secondary { separator: Vec<usize> },
}

/// Classify a graph with minimum degree at least 2k-2 on at least k+1
/// vertices: k-connected, or split by a small cut into large components.
pub(crate) fn min_degree_split(primary: &SimpleGraph, k: usize) -> Result<MinDegreeSplit> {
    match is_k_connected(primary, k) {
        KConnectivity::Connected => Ok(MinDegreeSplit::Primary),
        KConnectivity::TooSmall => Err(Error::Internal(format!(
            "degree split needs at least {} vertices, got {}",
            k + 1,
            primary.order()
        ))),
        KConnectivity::Cut(cert) => {
            internal_check!(
                cert.separator.len() < k,
                "separator of size {} returned for a {}-connectivity cut",
                cert.separator.len(),
                k
            );
            let mut keep = primary.vertices().clone();
            for &v in &cert.separator {
                keep.remove(v);
            }
            let parts = components(&primary.induced(&keep));
            internal_check!(
                parts.len() >= 2,
                "cut separator left {} component(s), expected at least 2",
                parts.len()
            );
            for part in &parts {
                internal_check!(
                    part.len() >= k,
                    "component of order {} below the degree-forced minimum {}",
                    part.len(),
                    k
                );
            }
            Ok(MinDegreeSplit::Secondary {
                separator: cert.separator,
            })
        }
    }
}

/// Extract a k-connected monochromatic subgraph of order at least n-k+1
/// from a 2-colouring whose colour-1 graph has minimum degree at least 2k-2.
///
/// Returns the whole vertex set in colour 1 when that graph is k-connected,
/// and otherwise all vertices outside a small colour-1 cut, in colour 2.
pub fn extract_degs(f: &ColouredCompleteGraph, k: usize) -> Result<ExtractionReport> {
    if f.colour_count() != 2 {
        return Err(Error::Parameter(format!(
            "expected 2 colours, got {}",
            f.colour_count()
        )));
    }
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    let n = f.order();
    if n < k + 1 {
        return Err(Error::Parameter(format!(
            "need at least {} vertices for a {}-connected subgraph, got {}",
            k + 1,
            k,
            n
        )));
    }
    let all = VertexSet::full(n);
    for v in 0..n {
        let d = f.colour_degree_into(v, 1, &all);
        hypothesis_check!(
            d + 2 >= 2 * k,
            "vertex {} has colour-1 degree {}, below the required {}",
            v,
            d,
            2 * k - 2
        );
    }

    let mut trace = Trace::new();
    trace.note(
        "hypothesis",
        format!("minimum colour-1 degree at least {}", 2 * k - 2),
    );
    let primary = f.colour_graph(1);
    let (witness, guarantee) = match min_degree_split(&primary, k)? {
        MinDegreeSplit::Primary => {
            trace.set("primary", "colour-1 graph is k-connected", &all);
            let witness = SubgraphWitness::new((0..n).collect(), vec![1], k);
            (witness, n)
        }
        MinDegreeSplit::Secondary { separator } => {
            let mut keep = all.clone();
            for &v in &separator {
                keep.remove(v);
            }
            trace.set(
                "separator",
                "colour-1 cut with large components on both sides",
                &VertexSet::from_iter(n, separator.iter().copied()),
            );
            trace.set(
                "secondary",
                "colour-2 spans the components left by the cut",
                &keep,
            );
            let witness = SubgraphWitness::new(keep.to_vec(), vec![2], k);
            (witness, n - k + 1)
        }
    };

    internal_check!(
        witness.order() >= guarantee,
        "witness order {} below guarantee {}",
        witness.order(),
        guarantee
    );
    internal_check!(
        witness.verify(f),
        "extracted witness failed re-verification"
    );
    Ok(ExtractionReport {
        witness,
        guarantee,
        trace,
    })
}
