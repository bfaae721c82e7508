//! Highly connected subgraphs of dense bipartite graphs.
//!
//! A bipartite graph with parts of sizes m and n that has no (l+1)-connected
//! subgraph on at least q vertices can carry at most
//! q(n-l)(m-l)/(m+n-2l) + (l*l+l)(m+n-2l) edges.  [`extract_r1kbip`] runs the
//! inductive proof forwards: while the current piece is above its budget but
//! not (l+1)-connected, it splits along a small cut padded to exactly l
//! vertices per side, and descends into a side that is again above budget;
//! one always is, because the two budgets merge into the parent's.
//!
//! [`extract_31kbip`] handles 3-coloured complete bipartite graphs in which
//! colours 2 and 3 are sparse on one side each: discarding the few vertices
//! with low colour-1 degree leaves a k-connected colour-1 subgraph.

use crate::connectivity::{components, is_k_connected, KConnectivity};
use crate::graph::{BipartiteColouring, SimpleGraph, SubgraphWitness, VertexSet};
use crate::tools::certify_intersect;
use crate::{hypothesis_check, internal_check};
use crate::{Error, Result};

use super::{ExtractionReport, Trace};

/// Largest edge count a bipartite graph with parts of sizes `m` and `n` can
/// have without being forced to contain an (l+1)-connected subgraph on at
/// least `q` vertices: floor(q(n-l)(m-l)/(m+n-2l)) + (l*l+l)(m+n-2l).
///
/// Requires m >= l, n >= l and m + n >= 2l + 1.
pub fn turan_edge_budget(m: usize, n: usize, ell: usize, q: usize) -> usize {
    assert!(
        m >= ell && n >= ell && m + n > 2 * ell,
        "parts of sizes {m} and {n} are too small for cut size {ell}"
    );
    let (m, n, ell, q) = (m as u128, n as u128, ell as u128, q as u128);
    let span = m + n - 2 * ell;
    let budget = (ell * ell + ell) * span + q * (n - ell) * (m - ell) / span;
    usize::try_from(budget).unwrap_or(usize::MAX)
}

/// Result of the bipartite budget extraction.
pub enum BipOutcome {
    /// An induced (l+1)-connected subgraph on at least q vertices.
    Subgraph(SimpleGraph),
    /// The edge count is within budget, so no subgraph is promised.
    Refused { edges: usize, budget: usize },
}

impl std::fmt::Debug for BipOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BipOutcome::Subgraph(g) => write!(f, "Subgraph(order {})", g.order()),
            BipOutcome::Refused { edges, budget } => {
                write!(f, "Refused {{ edges: {edges}, budget: {budget} }}")
            }
        }
    }
}

/// True when the piece with the given part sizes carries more edges than its
/// budget allows, forcing an (l+1)-connected subgraph on >= q vertices.
fn over_budget(edges: usize, m: usize, n: usize, ell: usize, q: usize) -> bool {
    let span = (m + n - 2 * ell) as u128;
    let lhs = edges as u128 * span;
    let rhs = q as u128 * (n - ell) as u128 * (m - ell) as u128
        + (ell * ell + ell) as u128 * span * span;
    lhs > rhs
}

/// Extract an induced (ell+1)-connected subgraph on at least `q` vertices
/// from a bipartite graph whose edge count exceeds [`turan_edge_budget`];
/// refuse (without error) when the count is within budget.
pub fn extract_r1kbip(
    g: &SimpleGraph,
    left: &VertexSet,
    right: &VertexSet,
    ell: usize,
    q: usize,
) -> Result<BipOutcome> {
    if q == 0 {
        return Err(Error::Parameter("q must be at least 1".into()));
    }
    if !left.is_disjoint_from(right) {
        return Err(Error::Parameter("parts must be disjoint".into()));
    }
    let (m0, n0) = (left.len(), right.len());
    if m0 < ell || n0 < ell || m0 + n0 <= 2 * ell {
        return Err(Error::Parameter(format!(
            "parts of sizes {m0} and {n0} are too small for cut size {ell}"
        )));
    }
    if *g.vertices() != left.union(right) {
        return Err(Error::Parameter(
            "graph vertices must be exactly the union of the parts".into(),
        ));
    }
    for u in g.vertices().iter() {
        for v in g.neighbours(u).iter() {
            if u < v && !(left.contains(u) ^ left.contains(v)) {
                return Err(Error::Parameter(format!(
                    "edge ({u}, {v}) does not cross the given parts"
                )));
            }
        }
    }

    let mut h = g.clone();
    let mut depth = 0usize;
    loop {
        internal_check!(
            depth <= m0 + n0,
            "descent depth exceeded the total number of vertices"
        );
        depth += 1;
        let m = left.intersection_len(h.vertices());
        let n = right.intersection_len(h.vertices());
        let edges = h.edge_count();
        if !over_budget(edges, m, n, ell, q) {
            internal_check!(
                depth == 1,
                "descended into a piece that is not over budget"
            );
            return Ok(BipOutcome::Refused {
                edges,
                budget: turan_edge_budget(m, n, ell, q),
            });
        }
        // Over budget forces both parts strictly above ell.
        internal_check!(m > ell && n > ell, "over-budget piece has a bare part");

        let cert = match is_k_connected(&h, ell + 1) {
            KConnectivity::Connected => {
                internal_check!(
                    h.order() >= q,
                    "connected piece of order {} is below the target {}",
                    h.order(),
                    q
                );
                return Ok(BipOutcome::Subgraph(h));
            }
            KConnectivity::TooSmall => {
                return Err(Error::Internal(format!(
                    "piece shrank to {} vertices, below the {} needed",
                    h.order(),
                    ell + 2
                )))
            }
            KConnectivity::Cut(cert) => cert,
        };
        internal_check!(
            cert.separator.len() <= ell,
            "separator of size {} for an {}-connectivity cut",
            cert.separator.len(),
            ell + 1
        );

        // Pick a separated pair with one vertex per part: the smallest left
        // vertex with a right vertex outside its component, then the
        // smallest such right vertex.
        let mut active = h.vertices().clone();
        for &v in &cert.separator {
            active.remove(v);
        }
        let split = components(&h.induced(&active));
        let comp_of = |v: usize| split.iter().position(|c| c.contains(v));
        let mut pair = None;
        'outer: for x in active.iter().filter(|&v| left.contains(v)) {
            let cx = comp_of(x);
            for y in active.iter().filter(|&v| right.contains(v)) {
                if comp_of(y) != cx {
                    pair = Some((x, y));
                    break 'outer;
                }
            }
        }
        let (x, y) = pair.ok_or_else(|| {
            Error::Internal("no separated pair crosses the parts".into())
        })?;

        // Pad the separator to exactly ell vertices on each part, avoiding
        // the separated pair; both parts have enough room because the piece
        // is over budget.
        let mut cut = VertexSet::from_iter(h.universe(), cert.separator.iter().copied());
        for part in [left, right] {
            let banned = if std::ptr::eq(part, left) { x } else { y };
            let mut have = cut.intersection_len(part);
            for v in h.vertices().iter() {
                if have == ell {
                    break;
                }
                if part.contains(v) && !cut.contains(v) && v != banned {
                    cut.insert(v);
                    have += 1;
                }
            }
            internal_check!(have == ell, "could not pad the cut to {} on one part", ell);
        }
        internal_check!(
            !cut.contains(x) && !cut.contains(y),
            "padded cut swallowed the separated pair"
        );

        let mut remaining = h.vertices().difference(&cut);
        let parts = components(&h.induced(&remaining));
        internal_check!(
            parts.len() >= 2,
            "padded cut left {} component(s)",
            parts.len()
        );
        let side = parts[0].clone();
        let child1 = h.induced(&side.union(&cut));
        remaining = h.vertices().difference(&side);
        let child2 = h.induced(&remaining);
        internal_check!(
            child1.order() < h.order() && child2.order() < h.order(),
            "cut split failed to shrink the piece"
        );

        let qualifies = |c: &SimpleGraph| {
            let cm = left.intersection_len(c.vertices());
            let cn = right.intersection_len(c.vertices());
            over_budget(c.edge_count(), cm, cn, ell, q)
        };
        let (q1, q2) = (qualifies(&child1), qualifies(&child2));
        internal_check!(q1 || q2, "neither side of the padded cut is over budget");
        h = if q1 && q2 {
            if child2.edge_count() > child1.edge_count() {
                child2
            } else {
                child1
            }
        } else if q1 {
            child1
        } else {
            child2
        };
    }
}

/// Extract a k-connected colour-1 subgraph on at least p+q-24k vertices from
/// a 3-colouring of K_{p,q} (parts P and Q, p <= q <= 3p, p >= 24k) in which
/// every P-vertex has at most k colour-3 edges and every Q-vertex has at
/// most k colour-2 edges.
pub fn extract_31kbip(b: &BipartiteColouring, k: usize) -> Result<ExtractionReport> {
    if b.colour_count() != 3 {
        return Err(Error::Parameter(format!(
            "expected 3 colours, got {}",
            b.colour_count()
        )));
    }
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    let p = b.left_order();
    let q = b.right_order();
    hypothesis_check!(
        p >= 24 * k && q >= p && 3 * p >= q,
        "part sizes {} and {} violate 24k <= p <= q <= 3p for k = {}",
        p,
        q,
        k
    );
    let (left, right) = b.parts();
    for u in left.iter() {
        let d = b.colour_degree_into(u, 3, &right);
        hypothesis_check!(
            d <= k,
            "left vertex {} has {} colour-3 edges, above the cap {}",
            u,
            d,
            k
        );
    }
    for w in right.iter() {
        let d = b.colour_degree_into(w, 2, &left);
        hypothesis_check!(
            d <= k,
            "right vertex {} has {} colour-2 edges, above the cap {}",
            w,
            d,
            k
        );
    }

    let mut trace = Trace::new();
    // Vertices with low colour-1 degree; only a bounded number can exist,
    // because their missing edges all land in the capped colours.
    let slow_left: Vec<usize> = left
        .iter()
        .filter(|&u| 4 * b.colour_degree_into(u, 1, &right) <= 3 * q)
        .collect();
    let slow_right: Vec<usize> = right
        .iter()
        .filter(|&w| 4 * b.colour_degree_into(w, 1, &left) <= 3 * p)
        .collect();
    internal_check!(
        slow_left.len() <= 8 * k,
        "{} low-degree left vertices, above the 8k bound",
        slow_left.len()
    );
    internal_check!(
        slow_right.len() <= 16 * k,
        "{} low-degree right vertices, above the 16k bound",
        slow_right.len()
    );
    trace.set(
        "drop-left",
        format!(
            "{} left vertices below 3q/4 colour-1 degree (bound 8k; the transposed bound 16k also holds)",
            slow_left.len()
        ),
        &VertexSet::from_iter(b.order(), slow_left.iter().copied()),
    );
    trace.set(
        "drop-right",
        format!(
            "{} right vertices below 3p/4 colour-1 degree (bound 16k; the transposed bound 8k also holds)",
            slow_right.len()
        ),
        &VertexSet::from_iter(b.order(), slow_right.iter().copied()),
    );

    let mut kept_left = left.clone();
    for &u in &slow_left {
        kept_left.remove(u);
    }
    let mut kept_right = right.clone();
    for &w in &slow_right {
        kept_right.remove(w);
    }
    internal_check!(
        certify_intersect(&b.colour_graph(1), &kept_left, &kept_right, k),
        "kept vertices fail the common-neighbour certificate"
    );
    trace.set("kept", "colour-1 core after the drops", &kept_left.union(&kept_right));

    let vertices: Vec<usize> = kept_left.union(&kept_right).to_vec();
    let witness = SubgraphWitness::new(vertices, vec![1], k);
    let guarantee = p + q - 24 * k;
    internal_check!(
        witness.order() >= guarantee,
        "witness order {} below guarantee {}",
        witness.order(),
        guarantee
    );
    internal_check!(
        witness.verify_bipartite(b),
        "extracted witness failed re-verification"
    );
    Ok(ExtractionReport {
        witness,
        guarantee,
        trace,
    })
}
