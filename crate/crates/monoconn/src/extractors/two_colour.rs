//! The two-colour extraction: a k-connected monochromatic subgraph on at
//! least n-2k+2 vertices whenever n is large enough relative to k.
//!
//! The argument peels low-degree vertices from each colour graph.  One of
//! the two peeled sets is small; removing it leaves the other colour with
//! minimum degree 2k-2, and the degree dichotomy applies.  If that colour is
//! k-connected on the remainder, the peeled vertices are migrated back one
//! by one; the stragglers force a dense bipartite pattern in the opposite
//! colour, certified by common-neighbour counts.

use crate::graph::{ColouredCompleteGraph, SubgraphWitness, VertexSet};
use crate::tools::certify_intersect;
use crate::{hypothesis_check, internal_check};
use crate::{Error, Result};

use super::degs::{min_degree_split, MinDegreeSplit};
use super::{ExtractionReport, Trace};

/// Which lower bound on n gates the extraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThresholdMode {
    /// n >= 13k - 15.
    Standard,
    /// k >= 18 and n >= (9 + sqrt(10))k, checked as (n-9k)^2 >= 10k^2.
    RemarkAlpha,
}

/// Remove vertices of colour-`colour` degree at most 2k-3, smallest index
/// first, until none remain; returns the removed vertices in peel order.
fn peel(f: &ColouredCompleteGraph, colour: usize, k: usize) -> Vec<usize> {
    let n = f.order();
    let mut remaining = VertexSet::full(n);
    let mut degree: Vec<usize> = (0..n)
        .map(|v| f.colour_degree_into(v, colour, &remaining))
        .collect();
    let mut peeled = Vec::new();
    loop {
        let next = remaining.iter().find(|&v| degree[v] + 3 <= 2 * k);
        let Some(v) = next else {
            return peeled;
        };
        remaining.remove(v);
        peeled.push(v);
        for u in remaining.iter() {
            if f.colour(u, v) == colour {
                degree[u] -= 1;
            }
        }
    }
}

/// Extract with the standard threshold n >= 13k - 15.
pub fn extract_thm21k(f: &ColouredCompleteGraph, k: usize) -> Result<ExtractionReport> {
    extract_thm21k_with(f, k, ThresholdMode::Standard)
}

/// Extract a k-connected monochromatic subgraph on at least n-2k+2 vertices
/// from a 2-coloured complete graph, under the chosen threshold on n.
pub fn extract_thm21k_with(
    f: &ColouredCompleteGraph,
    k: usize,
    mode: ThresholdMode,
) -> Result<ExtractionReport> {
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
    match mode {
        ThresholdMode::Standard => {
            hypothesis_check!(
                n + 15 >= 13 * k,
                "n = {} is below the threshold 13k - 15 = {}",
                n,
                13 * k - 15
            );
        }
        ThresholdMode::RemarkAlpha => {
            hypothesis_check!(k >= 18, "relaxed threshold requires k >= 18, got {}", k);
            let ok = n >= 9 * k && (n - 9 * k) * (n - 9 * k) >= 10 * k * k;
            hypothesis_check!(
                ok,
                "n = {} is below the relaxed threshold (9 + sqrt(10))k for k = {}",
                n,
                k
            );
        }
    }
    let guarantee = n + 2 - 2 * k;
    let mut trace = Trace::new();
    trace.note("mode", format!("{mode:?} threshold, guarantee {guarantee}"));

    // Peel both colours at degree 2k-3.
    let peel1 = peel(f, 1, k);
    let peel2 = peel(f, 2, k);
    let all = VertexSet::full(n);

    // A colour whose peel is empty already has minimum degree 2k-2
    // everywhere, and the degree dichotomy finishes immediately.
    for (colour, peeled) in [(1, &peel1), (2, &peel2)] {
        if peeled.is_empty() {
            trace.note(
                "dichotomy",
                format!("colour {colour} has minimum degree at least {}", 2 * k - 2),
            );
            let other = 3 - colour;
            let report = dichotomy_witness(f, colour, other, k, &all, &mut trace)?;
            return finish(f, report, guarantee, trace);
        }
    }

    // Both peels are nonempty; the smaller one is bounded.
    let (side_vertices, primary, secondary) = if peel1.len() <= peel2.len() {
        (&peel1, 1, 2)
    } else {
        (&peel2, 2, 1)
    };
    let p = peel1.len().min(peel2.len());
    internal_check!(
        p + 11 <= 8 * k,
        "both peeled sets have at least {} vertices, above the 8k-11 bound",
        p
    );
    trace.note(
        "overlap",
        format!(
            "{} vertices peeled in both colours",
            peel1.iter().filter(|v| peel2.contains(v)).count()
        ),
    );
    let side = VertexSet::from_iter(n, side_vertices.iter().copied());
    trace.set(
        "peeled",
        format!("smaller peeled set, colour {primary}"),
        &side,
    );

    let core = all.difference(&side);
    internal_check!(
        core.len() >= k + 1,
        "only {} vertices remain after removing the peeled set",
        core.len()
    );
    let primary_graph = f.colour_graph(primary).induced(&core);
    for v in core.iter() {
        internal_check!(
            f.colour_degree_into(v, primary, &core) + 2 >= 2 * k,
            "vertex {} kept colour-{} degree below {} after peeling",
            v,
            primary,
            2 * k - 2
        );
    }

    let witness = match min_degree_split(&primary_graph, k)? {
        MinDegreeSplit::Secondary { separator } => {
            // A small cut splits the primary remainder, so the secondary
            // colour is k-connected across the pieces; the peeled vertices
            // rejoin it one by one through their secondary edges.
            let mut kept = core.clone();
            for &v in &separator {
                kept.remove(v);
            }
            trace.set(
                "separator",
                format!("colour-{primary} cut on the remainder"),
                &VertexSet::from_iter(n, separator.iter().copied()),
            );
            for v in side.iter() {
                internal_check!(
                    f.colour_degree_into(v, secondary, &kept) >= k,
                    "peeled vertex {} has too few colour-{} edges to rejoin",
                    v,
                    secondary
                );
                kept.insert(v);
            }
            trace.set("rejoined", "cut complement plus the peeled set", &kept);
            SubgraphWitness::new(kept.to_vec(), vec![secondary as u8], k)
        }
        MinDegreeSplit::Primary => {
            // Migrate peeled vertices back while they have k primary edges
            // into the growing set.
            let mut migrated = core.clone();
            let mut stragglers = side.clone();
            loop {
                let next = stragglers
                    .iter()
                    .find(|&v| f.colour_degree_into(v, primary, &migrated) >= k);
                match next {
                    Some(v) => {
                        stragglers.remove(v);
                        migrated.insert(v);
                    }
                    None => break,
                }
            }
            trace.set("stragglers", "peeled vertices that cannot migrate", &stragglers);
            if stragglers.len() <= 2 * k - 2 {
                SubgraphWitness::new(migrated.to_vec(), vec![primary as u8], k)
            } else {
                // Too many stragglers: they force the secondary colour.
                // Vertices with few secondary edges into the stragglers are
                // rare, and dropping them leaves a certified core.
                let light: Vec<usize> = migrated
                    .iter()
                    .filter(|&v| f.colour_degree_into(v, secondary, &stragglers) < k)
                    .collect();
                internal_check!(
                    light.len() <= 2 * k - 2,
                    "{} vertices are light towards the stragglers, above 2k-2",
                    light.len()
                );
                let mut m_side = migrated.clone();
                for &v in &light {
                    m_side.remove(v);
                }
                internal_check!(
                    m_side.len() + 2 >= 3 * k,
                    "certified side shrank to {} vertices, below 3k-2",
                    m_side.len()
                );
                internal_check!(
                    certify_intersect(&f.colour_graph(secondary), &m_side, &stragglers, k),
                    "secondary graph fails the common-neighbour certificate"
                );
                trace.set("dropped", "vertices light towards the stragglers",
                    &VertexSet::from_iter(n, light.iter().copied()));
                let joint = m_side.union(&stragglers);
                SubgraphWitness::new(joint.to_vec(), vec![secondary as u8], k)
            }
        }
    };

    finish(
        f,
        witness,
        guarantee,
        trace,
    )
}

/// Run the degree dichotomy on `primary` over `all` vertices: the whole set
/// in `primary`, or everything outside a small cut in `secondary`.
fn dichotomy_witness(
    f: &ColouredCompleteGraph,
    primary: usize,
    secondary: usize,
    k: usize,
    all: &VertexSet,
    trace: &mut Trace,
) -> Result<SubgraphWitness> {
    let graph = f.colour_graph(primary);
    match min_degree_split(&graph, k)? {
        MinDegreeSplit::Primary => {
            trace.set("primary", format!("colour-{primary} graph is k-connected"), all);
            Ok(SubgraphWitness::new(
                all.to_vec(),
                vec![primary as u8],
                k,
            ))
        }
        MinDegreeSplit::Secondary { separator } => {
            let mut keep = all.clone();
            for &v in &separator {
                keep.remove(v);
            }
            trace.set(
                "secondary",
                format!("colour-{secondary} spans the colour-{primary} cut pieces"),
                &keep,
            );
            Ok(SubgraphWitness::new(keep.to_vec(), vec![secondary as u8], k))
        }
    }
}

fn finish(
    f: &ColouredCompleteGraph,
    witness: SubgraphWitness,
    guarantee: usize,
    trace: Trace,
) -> Result<ExtractionReport> {
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
