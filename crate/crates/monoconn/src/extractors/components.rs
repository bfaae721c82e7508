//! Large connected pieces from edge counts alone.
//!
//! In a bipartite graph with parts of sizes m and n and e edges, some edge
//! (x, y) has d(x) + d(y) >= e(m+n)/(mn), and its component contains all of
//! N(x) and N(y).  Applied to the majority colour between a maximal
//! monochromatic component and its complement, this yields a monochromatic
//! connected subgraph on at least n/(r-1) vertices in any r-colouring.

use crate::connectivity::components;
use crate::graph::{ColouredCompleteGraph, SimpleGraph, SubgraphWitness, VertexSet};
use crate::{hypothesis_check, internal_check};
use crate::{Error, Result};

use super::{ExtractionReport, Trace};

/// Return the component of a bipartite graph that contains an edge
/// maximizing the endpoint degree sum.  Its order is at least
/// e(m+n)/(mn), which is checked before returning.
pub fn extract_bip_component(
    g: &SimpleGraph,
    left: &VertexSet,
    right: &VertexSet,
) -> Result<SimpleGraph> {
    if !left.is_disjoint_from(right) {
        return Err(Error::Parameter("parts must be disjoint".into()));
    }
    for u in g.vertices().iter() {
        for v in g.neighbours(u).iter() {
            if u < v {
                let crosses = (left.contains(u) && right.contains(v))
                    || (right.contains(u) && left.contains(v));
                if !crosses {
                    return Err(Error::Parameter(format!(
                        "edge ({u}, {v}) does not cross the given parts"
                    )));
                }
            }
        }
    }
    let e = g.edge_count();
    hypothesis_check!(e >= 1, "graph has no edges");

    let mut best = (0usize, usize::MAX, usize::MAX);
    for u in g.vertices().iter() {
        for v in g.neighbours(u).iter() {
            if u < v {
                let score = g.degree(u) + g.degree(v);
                if score > best.0 {
                    best = (score, u, v);
                }
            }
        }
    }
    let (_, u, _) = best;
    let comp = components(g)
        .into_iter()
        .find(|c| c.contains(u))
        .ok_or_else(|| Error::Internal("chosen edge lost its component".into()))?;
    let (m, n) = (left.len() as u64, right.len() as u64);
    internal_check!(
        comp.len() as u64 * m * n >= e as u64 * (m + n),
        "component of order {} is below the density bound",
        comp.len()
    );
    Ok(g.induced(&comp))
}

/// Extract a monochromatic connected subgraph of order at least
/// ceil(n/(r-1)) from any r-colouring of a complete graph (all n vertices
/// when r = 1).
///
/// Takes the largest monochromatic component; if it does not span, all edges
/// to its complement avoid its colour, and the majority colour among them
/// connects a large bipartite piece.
pub fn extract_r11(f: &ColouredCompleteGraph) -> Result<ExtractionReport> {
    let n = f.order();
    let r = f.colour_count();
    let guarantee = if r == 1 { n } else { n.div_ceil(r - 1) };
    let mut trace = Trace::new();

    // Largest monochromatic component; ties prefer the smaller colour, then
    // the component with the smallest vertex.
    let mut best: Option<(usize, usize, VertexSet)> = None;
    for c in 1..=r {
        for comp in components(&f.colour_graph(c)) {
            let better = match &best {
                None => true,
                Some((len, _, _)) => comp.len() > *len,
            };
            if better {
                best = Some((comp.len(), c, comp));
            }
        }
    }
    let (_, colour, comp) =
        best.ok_or_else(|| Error::Internal("colouring has no components".into()))?;
    trace.set(
        "component",
        format!("largest monochromatic component, colour {colour}"),
        &comp,
    );

    let witness = if comp.len() == n {
        trace.note("spanning", "component covers every vertex");
        SubgraphWitness::new(comp.to_vec(), vec![colour as u8], 1)
    } else {
        let rest = VertexSet::full(n).difference(&comp);
        internal_check!(
            f.colour_bipartite(colour, &comp, &rest).edge_count() == 0,
            "maximal component has colour-{} edges leaving it",
            colour
        );
        // Majority colour across the split; ties prefer the smaller colour.
        let mut cross = (0usize, 0usize);
        for c in (1..=r).filter(|&c| c != colour) {
            let count = f.colour_bipartite(c, &comp, &rest).edge_count();
            if count > cross.0 {
                cross = (count, c);
            }
        }
        let (count, c2) = cross;
        internal_check!(count >= 1, "no edges cross the component boundary");
        trace.note(
            "crossing",
            format!("majority crossing colour {c2} with {count} edges"),
        );
        let sub = extract_bip_component(&f.colour_bipartite(c2, &comp, &rest), &comp, &rest)?;
        trace.set("bipartite", "component of the densest crossing edge", sub.vertices());
        SubgraphWitness::new(sub.vertices().to_vec(), vec![c2 as u8], 1)
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
