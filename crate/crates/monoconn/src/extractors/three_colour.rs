//! The three-colour extraction: a k-connected monochromatic subgraph on more
//! than (n-k)/2 vertices (one more when n+k = 3 mod 4) for n >= 480k.
//!
//! The argument builds up to three maximal k-connected closures A1, A2, A3,
//! one per colour, each found through a density core in the right auxiliary
//! graph.  Any closure past half the cap finishes immediately.  Otherwise
//! the closures cover the graph, and counting their overlaps shows that for
//! some colour the closure can absorb enough stragglers that its union with
//! the matching cover set is past the cap after all.  Every counting step is
//! asserted; a failed assertion means the extraction (not the input) is
//! wrong, and surfaces as an internal error rather than a bad witness.

use crate::graph::{BipartiteColouring, ColouredCompleteGraph, SubgraphWitness, VertexSet};
use crate::tools::{certify_intersect, closure_addvtx};
use crate::{hypothesis_check, internal_check};
use crate::{Error, Result};

use super::mader::mader_core;
use super::{extract_31kbip, ExtractionReport, Trace, TraceEntry};

fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// Extract a k-connected monochromatic subgraph from a 3-coloured complete
/// graph on n >= 480k vertices.
///
/// The guaranteed order is (n-k)/2 + 1, rounding down; when n+k = 3 mod 4 a
/// parity argument tightens the cap by one, to (n-k+1)/2 + 1.
pub fn extract_thm31k(f: &ColouredCompleteGraph, k: usize) -> Result<ExtractionReport> {
    if f.colour_count() != 3 {
        return Err(Error::Parameter(format!(
            "expected 3 colours, got {}",
            f.colour_count()
        )));
    }
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    let n = f.order();
    hypothesis_check!(n >= 480 * k, "n = {} is below 480k = {}", n, 480 * k);

    // Cap on the order of any monochromatic k-connected subgraph we have not
    // already returned: anything past half of it is a valid answer.
    let refined = (n + k) % 4 == 3;
    let slack = usize::from(refined);
    let cap = n - k + slack;
    let guarantee = cap / 2 + 1;
    let big = |s: &VertexSet| 2 * s.len() > cap;
    let mut trace = Trace::new();
    trace.note(
        "mode",
        if refined {
            format!("guarantee {guarantee} using the parity-tightened cap {cap}")
        } else {
            format!("guarantee {guarantee} using the cap {cap}")
        },
    );

    // Local colours 1..3 ordered by decreasing edge count, ties by index.
    let mut sigma = [1usize, 2, 3];
    sigma.sort_by_key(|&c| (std::cmp::Reverse(f.colour_edge_count(c)), c));

    // --- First closure: density core of the busiest colour. ---
    let e1 = f.colour_edge_count(sigma[0]);
    let t1 = e1 / (2 * n);
    // e1 >= n(n-1)/6, so t1 >= floor((n-1)/12) >= k once n >= 480k.
    internal_check!(t1 >= k, "busiest colour has density target {} below k", t1);
    let g1 = f.colour_graph(sigma[0]);
    let core1 = mader_core(&g1, t1)?;
    let a1 = closure_addvtx(&g1, core1.vertices(), k)?;
    internal_check!(
        12 * a1.len() >= n,
        "first closure holds only {} vertices",
        a1.len()
    );
    trace.set("A1", format!("closure of colour {} around its core", sigma[0]), &a1);
    if big(&a1) {
        return finish(f, &a1, sigma[0], k, cap, guarantee, trace);
    }

    // --- Second closure: the complement side sends its crossing edges into
    // the other two colours; the busier of them carries a dense bipartite
    // pattern. ---
    let a1c = VertexSet::full(n).difference(&a1);
    internal_check!(2 * a1c.len() >= n, "the complement of A1 is below n/2");
    let (mut lo2, mut lo3) = (sigma[1], sigma[2]);
    let mut h2_edges = f.colour_bipartite(lo2, &a1, &a1c).edge_count();
    let mut h3_edges = f.colour_bipartite(lo3, &a1, &a1c).edge_count();
    if h3_edges > h2_edges {
        std::mem::swap(&mut lo2, &mut lo3);
        std::mem::swap(&mut h2_edges, &mut h3_edges);
    }
    // Maximality of A1: each outside vertex keeps at most k-1 edges of the
    // first colour into A1, so the two others carry almost the whole cross.
    internal_check!(
        h2_edges + h3_edges >= a1c.len() * (a1.len() + 1 - k),
        "crossing colours carry only {} edges",
        h2_edges + h3_edges
    );
    internal_check!(
        15 * (h2_edges + h3_edges) > n * n,
        "crossing colours are below the n^2/15 threshold"
    );
    internal_check!(
        30 * h2_edges > n * n,
        "the busier crossing colour is below the n^2/30 threshold"
    );
    let t2 = h2_edges / (2 * n);
    internal_check!(
        t2 >= 8 * k,
        "crossing density target {} is below 8k",
        t2
    );
    let h2 = f.colour_bipartite(lo2, &a1, &a1c);
    let core2 = mader_core(&h2, t2)?;
    // A t2-connected bipartite subgraph keeps at least t2 vertices per side.
    internal_check!(
        core2.vertices().intersection_len(&a1) >= 8 * k,
        "crossing core meets A1 in under 8k vertices"
    );
    let g2 = f.colour_graph(lo2);
    let a2 = closure_addvtx(&g2, core2.vertices(), k)?;
    trace.set("A2", format!("closure of colour {lo2} around the crossing core"), &a2);
    if big(&a2) {
        return finish(f, &a2, lo2, k, cap, guarantee, trace);
    }

    // --- Third closure: X = A1 and A2 overlap, Y = untouched vertices.
    // Y-vertices are capped towards both closures, so the third colour joins
    // X and Y into one k-connected pattern. ---
    let x_set = a1.intersection(&a2);
    internal_check!(
        x_set.len() >= 8 * k,
        "A1 and A2 overlap in only {} vertices",
        x_set.len()
    );
    let y_set = VertexSet::full(n).difference(&a1.union(&a2));
    // |Y| = n - |A1| - |A2| + |X| and both closures stay within cap/2.
    internal_check!(
        y_set.len() + slack >= x_set.len() + k,
        "only {} vertices avoid both closures",
        y_set.len()
    );
    let g3 = f.colour_graph(lo3);
    let u_set = VertexSet::from_iter(
        n,
        x_set
            .iter()
            .filter(|&v| f.colour_degree_into(v, lo3, &y_set) < k),
    );
    // Each Y-vertex is capped at k-1 towards X in both closure colours, so
    // the third colour covers all but 2k-2 of its X-edges; averaging leaves
    // fewer than 3k exceptions on the X side.
    internal_check!(
        u_set.len() < 3 * k,
        "{} overlap vertices are light towards Y",
        u_set.len()
    );
    let x_prime = x_set.difference(&u_set);
    internal_check!(
        certify_intersect(&g3, &x_prime, &y_set, k),
        "third colour fails the common-neighbour certificate between X and Y"
    );
    trace.set("Y", "vertices outside both closures", &y_set);
    let a3 = closure_addvtx(&g3, &x_prime.union(&y_set), k)?;
    trace.set("A3", format!("closure of colour {lo3} around X and Y"), &a3);
    if big(&a3) {
        return finish(f, &a3, lo3, k, cap, guarantee, trace);
    }

    // --- The closures now cover the graph; count the overlap pattern. ---
    let sets = [&a1, &a2, &a3];
    let cols = [sigma[0], lo2, lo3];
    let mut a = [0usize; 3];
    let mut b = [0usize; 3];
    for i in 0..3 {
        let (j, l) = others(i);
        a[i] = sets[i].difference(&sets[j].union(sets[l])).len();
        b[i] = sets[j].intersection(sets[l]).difference(sets[i]).len();
    }
    let c_all = a1.intersection(&a2).intersection_len(&a3);
    let sb: usize = b.iter().sum();
    internal_check!(
        a.iter().sum::<usize>() + sb + c_all == n,
        "the closures fail to cover the graph"
    );
    // Total size of the closures is at most 3 cap/2.
    internal_check!(
        2 * (sb + 2 * c_all) + 3 * k <= n + 3 * slack,
        "the closures overlap more than the cap allows"
    );
    // Pairwise: two closures fit in cap together.
    for i in 0..3 {
        internal_check!(
            a[i] + slack >= b[i] + c_all + k,
            "closure {} has an exclusive part of only {} vertices",
            i,
            a[i]
        );
    }
    trace.note(
        "cover",
        format!("exclusive {a:?}, pairwise-only {b:?}, triple {c_all}"),
    );

    // --- Emergency exit: a closure whose exclusive part is below n/6 forces
    // its own colour to span the difference sets of the other two. ---
    for i in 0..3 {
        if 6 * a[i] >= n {
            continue;
        }
        let (j0, l0) = others(i);
        let d_jl = sets[j0].difference(sets[l0]);
        let d_lj = sets[l0].difference(sets[j0]);
        let (p_owner, q_owner, p_set, q_set) = if d_lj.len() < d_jl.len() {
            (l0, j0, d_lj, d_jl)
        } else {
            (j0, l0, d_jl, d_lj)
        };
        // Both difference sets are within k of each other's closures, and a
        // small exclusive part forces them to be large and balanced.
        internal_check!(
            p_set.len() >= 24 * k && 3 * p_set.len() >= q_set.len(),
            "difference sets of {} and {} are unbalanced",
            p_set.len(),
            q_set.len()
        );
        trace.note(
            "emergency",
            format!(
                "closure {i} is thin; colour {} must span the {}x{} difference pair",
                cols[i],
                p_set.len(),
                q_set.len()
            ),
        );
        let w = capped_pair_extraction(
            f,
            &p_set,
            &q_set,
            cols[i],
            cols[q_owner],
            cols[p_owner],
            k,
            "emergency",
            &mut trace,
        )?;
        internal_check!(
            big(&w),
            "the emergency pair produced only {} vertices",
            w.len()
        );
        return finish(f, &w, cols[i], k, cap, guarantee, trace);
    }

    // --- Main exit: for each pair of closures, the third colour spans their
    // difference sets; closing it gives M_l.  Counting what the M-sets miss
    // against what they add shows one closure can absorb k stragglers. ---
    let mut m_sets = vec![VertexSet::empty(n); 3];
    let pairs = [(0usize, 1usize, 2usize), (0, 2, 1), (1, 2, 0)];
    for &(i0, j0, l) in &pairs {
        let d_ij = sets[i0].difference(sets[j0]);
        let d_ji = sets[j0].difference(sets[i0]);
        let (p_owner, q_owner, p_set, q_set) = if d_ji.len() < d_ij.len() {
            (j0, i0, d_ji, d_ij)
        } else {
            (i0, j0, d_ij, d_ji)
        };
        // p >= a_i >= n/6 >= 24k and q <= cap/2 < n/2 <= 3p.
        internal_check!(
            p_set.len() >= 24 * k && 3 * p_set.len() >= q_set.len(),
            "difference sets of {} and {} are unbalanced",
            p_set.len(),
            q_set.len()
        );
        let label = format!("pair-{i0}{j0}");
        let l_set = capped_pair_extraction(
            f,
            &p_set,
            &q_set,
            cols[l],
            cols[q_owner],
            cols[p_owner],
            k,
            &label,
            &mut trace,
        )?;
        let m_l = closure_addvtx(&f.colour_graph(cols[l]), &l_set, k)?;
        trace.set(
            &label,
            format!("closure of colour {} around the spanning pattern", cols[l]),
            &m_l,
        );
        if big(&m_l) {
            return finish(f, &m_l, cols[l], k, cap, guarantee, trace);
        }
        m_sets[l] = m_l;
    }

    let mut x_sets = vec![vec![VertexSet::empty(n); 3]; 3];
    let mut x = [[0usize; 3]; 3];
    let mut z = [0usize; 3];
    for &(i0, j0, l) in &pairs {
        for (i, j) in [(i0, j0), (j0, i0)] {
            let xs = sets[i].difference(&sets[j].union(&m_sets[l]));
            // The spanning pattern misses at most 16k of either side.
            internal_check!(
                xs.len() <= 16 * k,
                "{} vertices of a difference set avoid their spanning closure",
                xs.len()
            );
            x[i][j] = xs.len();
            x_sets[i][j] = xs;
        }
        z[l] = m_sets[l].difference(&sets[i0].union(sets[j0])).len();
        // M_l contains both difference sets up to the misses, plus what it
        // adds outside the pair.
        internal_check!(
            a[i0] + a[j0] + b[i0] + b[j0] + z[l]
                <= m_sets[l].len() + x[i0][j0] + x[j0][i0],
            "spanning closure bookkeeping failed for pair {}{}",
            i0,
            j0
        );
    }
    let sx: usize = x.iter().flatten().sum();
    let sz: usize = z.iter().sum();
    // Summing the bookkeeping over the pairs against the cap.
    internal_check!(
        sx as i64 - sz as i64 >= sb as i64 + 3 * (k as i64) - 3 * (slack as i64),
        "misses {} against additions {} leave no colour to grow",
        sx,
        sz
    );
    trace.note("exchange", format!("misses {x:?}, additions {z:?}"));

    // Some colour's misses outweigh what its own spanning closure added; in
    // the tightened mode equality throughout would contradict n+k = 3 mod 4.
    let chosen = (0..3).find(|&i| {
        let (j, l) = others(i);
        x[i][j] + x[i][l] >= z[i] + k
    });
    let Some(ci) = chosen else {
        return Err(Error::Internal(
            "no colour can absorb its misses; this must never fire".into(),
        ));
    };
    let (j, l) = others(ci);
    let xu = x_sets[ci][j].union(&x_sets[ci][l]);
    // A missed vertex keeps so many edges of colour ci into M_ci that the
    // closure must already contain it.
    internal_check!(
        xu.is_subset_of(&m_sets[ci]),
        "missed vertices failed to join their own spanning closure"
    );
    internal_check!(xu.len() >= k, "only {} missed vertices to absorb", xu.len());
    internal_check!(
        sets[ci].intersection_len(&m_sets[ci]) >= k,
        "closure {} and its spanning closure barely meet",
        ci
    );
    let final_set = sets[ci].union(&m_sets[ci]);
    internal_check!(
        4 * final_set.len() >= 3 * n,
        "the final union holds only {} vertices",
        final_set.len()
    );
    trace.note(
        "exchange",
        format!("colour {} absorbs {} missed vertices", cols[ci], xu.len()),
    );
    finish(f, &final_set, cols[ci], k, cap, guarantee, trace)
}

/// Run the bipartite spanning extraction on a capped pair (P, Q) of global
/// vertex sets and map the witness back to global labels.
///
/// `extract_colour` is the colour required to span the pair; P avoids the
/// closure of `left_cap_colour` and Q the closure of `right_cap_colour`, so
/// those colours are capped at k-1 per vertex across the pair.
#[allow(clippy::too_many_arguments)]
fn capped_pair_extraction(
    f: &ColouredCompleteGraph,
    p_set: &VertexSet,
    q_set: &VertexSet,
    extract_colour: usize,
    left_cap_colour: usize,
    right_cap_colour: usize,
    k: usize,
    label: &str,
    trace: &mut Trace,
) -> Result<VertexSet> {
    let pv = p_set.to_vec();
    let qv = q_set.to_vec();
    let p = pv.len();
    let bip = BipartiteColouring::new_with(p, qv.len(), 3, |u, w| {
        let c = f.colour(pv[u], qv[w - p]);
        if c == extract_colour {
            1
        } else if c == right_cap_colour {
            2
        } else {
            debug_assert_eq!(c, left_cap_colour);
            3
        }
    })
    .map_err(|e| Error::Internal(format!("building the capped pair failed: {e}")))?;
    let inner = extract_31kbip(&bip, k).map_err(|e| match e {
        Error::Parameter(m) | Error::Hypothesis(m) => Error::Internal(format!(
            "the spanning extraction rejected the capped pair: {m}"
        )),
        other => other,
    })?;
    let to_global = |v: usize| if v < p { pv[v] } else { qv[v - p] };
    for entry in inner.trace.0 {
        trace.0.push(TraceEntry {
            label: format!("{label}.{}", entry.label),
            note: entry.note,
            vertices: entry
                .vertices
                .map(|vs| vs.into_iter().map(to_global).collect()),
        });
    }
    let global = VertexSet::from_iter(
        f.order(),
        inner.witness.vertices.iter().map(|&v| to_global(v)),
    );
    trace.set(
        label,
        format!(
            "colour {extract_colour} spans the pair, missing {} of {} vertices",
            (p + qv.len()) - global.len(),
            p + qv.len()
        ),
        &global,
    );
    Ok(global)
}

fn finish(
    f: &ColouredCompleteGraph,
    set: &VertexSet,
    colour: usize,
    k: usize,
    cap: usize,
    guarantee: usize,
    mut trace: Trace,
) -> Result<ExtractionReport> {
    trace.set(
        "result",
        format!("colour {colour} on {} vertices", set.len()),
        set,
    );
    let witness = SubgraphWitness::new(set.to_vec(), vec![colour as u8], k);
    internal_check!(
        2 * witness.order() > cap,
        "result order {} is not past half the cap {}",
        witness.order(),
        cap
    );
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::construct_affine;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_colour_exits_at_the_first_closure() {
        let f = ColouredCompleteGraph::new_with(480, 3, |_, _| 1).unwrap();
        let report = extract_thm31k(&f, 1).unwrap();
        assert_eq!(report.order(), 480);
        assert_eq!(report.witness.colours, vec![1]);
        assert_eq!(report.guarantee, 240);
    }

    #[test]
    fn random_colourings_meet_the_guarantee() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x31f);
        for _ in 0..3 {
            let f = ColouredCompleteGraph::random(480, 3, &mut rng).unwrap();
            let report = extract_thm31k(&f, 1).unwrap();
            assert!(report.order() >= 240);
            assert!(report.witness.verify(&f));
        }
    }

    #[test]
    fn affine_colouring_is_extracted_exactly_at_the_tightened_bound() {
        let rep = construct_affine(482, 3, 1).unwrap();
        let report = extract_thm31k(&rep.colouring, 1).unwrap();
        // n+k = 3 mod 4, so the guarantee is (n-k+1)/2 + 1 = 242, and the
        // colouring is built to allow no more.
        assert_eq!(report.guarantee, 242);
        assert_eq!(report.order(), 242);
        assert_eq!(rep.claimed_bound, 242);
        assert!(report.witness.verify(&rep.colouring));
    }

    #[test]
    fn affine_with_side_cliques_is_extracted_exactly_at_the_base_bound() {
        let rep = construct_affine(962, 3, 2).unwrap();
        let report = extract_thm31k(&rep.colouring, 2).unwrap();
        assert_eq!(report.guarantee, 481);
        assert_eq!(report.order(), 481);
        assert_eq!(rep.claimed_bound, 481);
    }

    #[test]
    fn wrong_colour_count_is_a_parameter_error() {
        let f = ColouredCompleteGraph::new_with(480, 2, |_, _| 1).unwrap();
        assert!(matches!(extract_thm31k(&f, 1), Err(Error::Parameter(_))));
    }

    #[test]
    fn small_n_is_a_hypothesis_error() {
        let f = ColouredCompleteGraph::new_with(479, 3, |_, _| 1).unwrap();
        assert!(matches!(extract_thm31k(&f, 1), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn capped_pairs_map_back_to_global_labels() {
        // P = evens below 50, Q = odds below 50 plus 50..60; all crossing
        // edges take colour 2 except one each of the capped colours.
        let in_p = |x: usize| x < 50 && x % 2 == 0;
        let f = ColouredCompleteGraph::new_with(60, 3, |u, v| {
            if in_p(u) != in_p(v) {
                let (pu, qv) = if in_p(u) { (u, v) } else { (v, u) };
                match (pu, qv) {
                    (0, 3) => 1,
                    (2, 1) => 3,
                    _ => 2,
                }
            } else {
                1
            }
        })
        .unwrap();
        let p_set = VertexSet::from_iter(60, (0..50).step_by(2));
        let q_set = VertexSet::full(60).difference(&p_set);
        let mut trace = Trace::new();
        let got = capped_pair_extraction(&f, &p_set, &q_set, 2, 3, 1, 1, "test", &mut trace)
            .unwrap();
        assert_eq!(got, p_set.union(&q_set));
        let witness = SubgraphWitness::new(got.to_vec(), vec![2], 1);
        assert!(witness.verify(&f));
        assert!(trace.entries().iter().all(|e| e.label.starts_with("test")));
    }

    #[test]
    fn extraction_is_deterministic() {
        let rep = construct_affine(482, 3, 1).unwrap();
        let a = extract_thm31k(&rep.colouring, 1).unwrap();
        let b = extract_thm31k(&rep.colouring, 1).unwrap();
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.trace, b.trace);
    }
}
