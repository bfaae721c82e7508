//! Dense graphs contain highly connected subgraphs.
//!
//! A graph with average degree at least 4t has a t-connected subgraph.  The
//! proof peels low-degree vertices and, whenever a small cut appears, keeps a
//! side of the cut that still carries enough edges; both steps preserve the
//! invariant e(H) > (2t-3)(|H|-t+1) while shrinking H, so the loop ends in a
//! t-connected subgraph.

use crate::connectivity::{components, is_k_connected, KConnectivity};
use crate::graph::SimpleGraph;
use crate::{hypothesis_check, internal_check};
use crate::{Error, Result};

/// True when H is still dense enough for the argument to continue: at least
/// 2t-1 vertices and e(H) > (2t-3)(|H|-t+1).  For t = 1 this degenerates to
/// "has an edge".
fn qualifies(h: &SimpleGraph, t: usize) -> bool {
    let order = h.order() as i64;
    let t = t as i64;
    let bound = ((2 * t - 3) * (order - t + 1) + 1).max(1);
    order >= (2 * t - 1).max(2) && h.edge_count() as i64 >= bound
}

/// Core of the density argument: given a graph satisfying the edge invariant
/// for t, return an induced t-connected subgraph.
pub(crate) fn mader_core(g: &SimpleGraph, t: usize) -> Result<SimpleGraph> {
    internal_check!(t >= 1, "connectivity target must be at least 1");
    internal_check!(
        qualifies(g, t),
        "entry graph with {} vertices and {} edges is too sparse for target {}",
        g.order(),
        g.edge_count(),
        t
    );
    let mut h = g.clone();
    loop {
        // Shed vertices of degree at most 2t-3; each removal keeps the edge
        // invariant, and the extremal case K_{2t-1} has no such vertex, so
        // the order never drops below 2t-1.
        if t >= 2 {
            loop {
                let low = h.vertices().iter().find(|&v| h.degree(v) <= 2 * t - 3);
                match low {
                    Some(v) => {
                        let mut keep = h.vertices().clone();
                        keep.remove(v);
                        h = h.induced(&keep);
                    }
                    None => break,
                }
            }
            internal_check!(
                qualifies(&h, t),
                "edge invariant lost while shedding low-degree vertices"
            );
        }
        let cert = match is_k_connected(&h, t) {
            KConnectivity::Connected => return Ok(h),
            KConnectivity::TooSmall => {
                return Err(Error::Internal(format!(
                    "graph shrank to {} vertices, below the {} needed",
                    h.order(),
                    t + 1
                )))
            }
            KConnectivity::Cut(cert) => cert,
        };
        // Split along the cut: each child is one side plus the separator.
        let mut keep = h.vertices().clone();
        for &v in &cert.separator {
            keep.remove(v);
        }
        let parts = components(&h.induced(&keep));
        internal_check!(
            parts.len() >= 2,
            "cut certificate left {} component(s)",
            parts.len()
        );
        let mut side1 = parts[0].clone();
        for &v in &cert.separator {
            side1.insert(v);
        }
        let h1 = h.induced(&side1);
        let rest = h.vertices().difference(&parts[0]);
        let h2 = h.induced(&rest);
        let q1 = qualifies(&h1, t);
        let q2 = qualifies(&h2, t);
        internal_check!(
            q1 || q2,
            "neither side of a {}-cut keeps the edge invariant",
            cert.separator.len()
        );
        h = if q1 && q2 {
            // Both sides qualify: continue with the denser one.
            if h2.edge_count() > h1.edge_count() {
                h2
            } else {
                h1
            }
        } else if q1 {
            h1
        } else {
            h2
        };
    }
}

/// Extract an induced k-connected subgraph from any graph of average degree
/// at least 4k.
pub fn extract_mader(g: &SimpleGraph, k: usize) -> Result<SimpleGraph> {
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    let (num, den) = g.average_degree_num_den();
    hypothesis_check!(
        num >= 4 * k * den,
        "average degree {}/{} is below the required {}",
        num,
        den,
        4 * k
    );
    mader_core(g, k)
}
