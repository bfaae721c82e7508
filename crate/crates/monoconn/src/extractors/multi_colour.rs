//! The r-colour extraction: a k-connected monochromatic subgraph on roughly
//! n/(r-1) vertices whenever n exceeds a polynomial in k and r.
//!
//! The majority colour is dense enough for the density extraction; closing
//! the resulting core under k-attachment gives a maximal set C.  Either C is
//! already large, or its complement sends so few majority-colour edges back
//! that some other colour is forced to carry a dense bipartite pattern
//! between C and the rest, and the bipartite recursion digs a k-connected
//! subgraph out of it.  When n is large enough a second round, seeded from
//! the first witness, upgrades the order to the tighter bound.

use crate::graph::{ColouredCompleteGraph, SubgraphWitness, VertexSet};
use crate::tools::closure_addvtx;
use crate::{hypothesis_check, internal_check};
use crate::{Error, Result};

use super::components::extract_r11;
use super::mader::mader_core;
use super::{extract_r1kbip, BipOutcome, ExtractionReport, Trace, TraceEntry};

/// Extract a k-connected monochromatic subgraph from an r-coloured complete
/// graph with r >= 3, under the hypothesis n > 11(k^2-k)(r^2-r).
///
/// The guaranteed order is ceil((n - 11(k^2-k)r(r-1)) / (r-1)), improved to
/// ceil((n - 2k^2 r(r-1)) / (r-1)) when n >= 44 k^2 r^2.
pub fn extract_thm_r1k(f: &ColouredCompleteGraph, k: usize) -> Result<ExtractionReport> {
    let r = f.colour_count();
    let n = f.order();
    if r < 3 {
        return Err(Error::Parameter(format!("expected at least 3 colours, got {r}")));
    }
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    hypothesis_check!(
        n > 11 * (k * k - k) * (r * r - r),
        "n = {} is not above 11(k^2-k)(r^2-r) = {}",
        n,
        11 * (k * k - k) * (r * r - r)
    );

    if k == 1 {
        // Connectivity alone: the largest monochromatic component argument
        // already yields ceil(n/(r-1)) vertices.
        let mut report = extract_r11(f)?;
        report.trace.0.insert(
            0,
            TraceEntry {
                label: "delegate".into(),
                note: "k = 1 reduces to the component argument".into(),
                vertices: None,
            },
        );
        return Ok(report);
    }

    let mut trace = Trace::new();

    // Majority colour, smallest index on ties.
    let mut majority = 1;
    for c in 2..=r {
        if f.colour_edge_count(c) > f.colour_edge_count(majority) {
            majority = c;
        }
    }
    let e_majority = f.colour_edge_count(majority);
    let t = e_majority / (2 * n);
    internal_check!(
        t >= k,
        "majority colour supports average degree target {} below k = {}",
        t,
        k
    );
    trace.note(
        "majority",
        format!("colour {majority} with {e_majority} edges, density target {t}"),
    );

    let majority_graph = f.colour_graph(majority);
    let core = mader_core(&majority_graph, t)?;
    trace.set("core", format!("{t}-connected core of colour {majority}"), core.vertices());
    let seed = closure_addvtx(&majority_graph, core.vertices(), k)?;

    let std_target = (n - 11 * (k * k - k) * r * (r - 1)).div_ceil(r - 1);
    let tight = n >= 44 * k * k * r * r;
    let guarantee = if tight {
        (n - 2 * k * k * r * (r - 1)).div_ceil(r - 1)
    } else {
        std_target
    };
    trace.note(
        "target",
        if tight {
            format!("guarantee {guarantee} via the two-round bound")
        } else {
            format!("guarantee {guarantee} via the one-round bound")
        },
    );

    let (mut best, mut best_colour) =
        bipartite_round(f, &seed, majority, std_target, k, "round-1", &mut trace)?;
    if tight && best.len() < guarantee {
        // Round 2: the first witness is k-connected in its colour, so its
        // closure there is a fresh maximal seed with a higher yield.
        let seed2 = closure_addvtx(&f.colour_graph(best_colour), &best, k)?;
        let (set, colour) =
            bipartite_round(f, &seed2, best_colour, guarantee, k, "round-2", &mut trace)?;
        best = set;
        best_colour = colour;
    }

    let witness = SubgraphWitness::new(best.to_vec(), vec![best_colour as u8], k);
    internal_check!(
        witness.order() >= guarantee,
        "witness order {} below guarantee {}",
        witness.order(),
        guarantee
    );
    internal_check!(witness.verify(f), "extracted witness failed re-verification");
    Ok(ExtractionReport {
        witness,
        guarantee,
        trace,
    })
}

/// One round of the closure-or-bipartite dichotomy.  `seed` is k-connected
/// in `seed_colour` and closed under k-attachment; returns a k-connected
/// monochromatic set of at least `target` vertices and its colour.
fn bipartite_round(
    f: &ColouredCompleteGraph,
    seed: &VertexSet,
    seed_colour: usize,
    target: usize,
    k: usize,
    label: &str,
    trace: &mut Trace,
) -> Result<(VertexSet, usize)> {
    let r = f.colour_count();
    let n = f.order();
    let c = seed.len();
    if c * (r - 1) >= n {
        trace.set(
            label,
            format!("closed colour-{seed_colour} set already spans {c} >= n/(r-1) vertices"),
            seed,
        );
        return Ok((seed.clone(), seed_colour));
    }
    let rest = VertexSet::full(n).difference(seed);
    let d = rest.len();
    internal_check!(
        c > k && d >= k,
        "degenerate split of {c} against {d} vertices"
    );

    // Every outside vertex has at most k-1 seed-colour edges into the closed
    // set, so the other r-1 colours carry at least d(c-k+1) crossing edges;
    // take the busiest of them.
    let mut cross_colour = 0;
    let mut cross_edges = 0;
    for i in 1..=r {
        if i == seed_colour {
            continue;
        }
        let e = f.colour_bipartite(i, seed, &rest).edge_count();
        if cross_colour == 0 || e > cross_edges {
            cross_colour = i;
            cross_edges = e;
        }
    }
    internal_check!(
        (r as u128 - 1) * cross_edges as u128 >= d as u128 * (c - k + 1) as u128,
        "busiest crossing colour {} carries only {} edges",
        cross_colour,
        cross_edges
    );

    let ell = k - 1;
    let span = (c + d - 2 * ell) as i128;
    let prod = (d - ell) as i128 * (c - ell) as i128;
    let margin = (cross_edges as i128 - (ell * ell + ell) as i128 * span) * span;
    internal_check!(
        margin >= 1,
        "crossing colour {} is not above the degenerate edge budget",
        cross_colour
    );
    // Largest q for which cross_edges still exceeds the bipartite budget.
    let q = ((margin - 1) / prod) as usize;
    internal_check!(
        q >= target,
        "budget yield {} falls short of the target {}",
        q,
        target
    );
    trace.note(
        label,
        format!(
            "colour {cross_colour} carries {cross_edges} of the {c}x{d} crossing edges, yield {q}"
        ),
    );

    let bip = f.colour_bipartite(cross_colour, seed, &rest);
    let outcome = extract_r1kbip(&bip, seed, &rest, ell, q).map_err(|e| match e {
        Error::Parameter(m) | Error::Hypothesis(m) => {
            Error::Internal(format!("bipartite recursion rejected its input: {m}"))
        }
        other => other,
    })?;
    match outcome {
        BipOutcome::Subgraph(h) => {
            trace.set(
                label,
                format!("k-connected colour-{cross_colour} bipartite subgraph"),
                h.vertices(),
            );
            Ok((h.vertices().clone(), cross_colour))
        }
        BipOutcome::Refused { edges, budget } => Err(Error::Internal(format!(
            "bipartite recursion refused {edges} edges against budget {budget}"
        ))),
    }
}
