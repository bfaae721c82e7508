//! Growing and certifying k-connected vertex sets.
//!
//! `closure_addvtx` repeatedly absorbs any vertex with at least k neighbours
//! in the current set; absorbing such a vertex preserves k-connectivity, so
//! the closure of a k-connected seed is k-connected. `certify_intersect`
//! checks a degree/common-neighbourhood condition on a bipartite split that
//! forces k-connectivity without running any flow.

use crate::connectivity::is_k_connected;
use crate::graph::{SimpleGraph, VertexSet};
use crate::{Error, Result};

/// Grow `seed` inside g by adding every vertex that has at least k
/// neighbours in the current set, until nothing more can be added. The seed
/// must induce a k-connected subgraph of g; the result then does too, and it
/// does not depend on the order in which vertices are examined.
pub fn closure_addvtx(g: &SimpleGraph, seed: &VertexSet, k: usize) -> Result<VertexSet> {
    if !seed.is_subset_of(g.vertices()) {
        return Err(Error::Parameter(
            "seed is not a vertex subset of the host graph".into(),
        ));
    }
    if !is_k_connected(&g.induced(seed), k).is_connected() {
        return Err(Error::Hypothesis(format!(
            "closure seed of order {} does not induce a {k}-connected subgraph",
            seed.len()
        )));
    }
    Ok(closure_core(g, seed, k, false))
}

/// The closure loop without the seed check, for callers that have already
/// established k-connectivity of the seed by construction.
pub(crate) fn closure_core(
    g: &SimpleGraph,
    seed: &VertexSet,
    k: usize,
    descending: bool,
) -> VertexSet {
    let mut set = seed.clone();
    let mut candidates: Vec<usize> = g.vertices().difference(&set).to_vec();
    if descending {
        candidates.reverse();
    }
    let mut count: Vec<usize> = candidates
        .iter()
        .map(|&v| g.neighbours(v).intersection_len(&set))
        .collect();
    loop {
        let mut added = false;
        for i in 0..candidates.len() {
            let v = candidates[i];
            if set.contains(v) || count[i] < k {
                continue;
            }
            set.insert(v);
            added = true;
            for (j, &w) in candidates.iter().enumerate() {
                if !set.contains(w) && g.has_edge(v, w) {
                    count[j] += 1;
                }
            }
        }
        if !added {
            return set;
        }
    }
}

/// Certify k-connectivity of the subgraph induced on `m_side` and `n_side`
/// from bipartite degree data alone: every m_side vertex needs at least k
/// neighbours in n_side, and every pair of n_side vertices needs at least k
/// common neighbours in m_side. Removing at most k-1 vertices then leaves
/// every surviving n_side pair joined through m_side and every surviving
/// m_side vertex attached, so no small separator exists. Only returns true
/// when the combined side order exceeds k, which the definition requires.
pub fn certify_intersect(
    g: &SimpleGraph,
    m_side: &VertexSet,
    n_side: &VertexSet,
    k: usize,
) -> bool {
    debug_assert!(m_side.is_disjoint_from(n_side));
    if m_side.len() + n_side.len() < k + 1 {
        return false;
    }
    for v in m_side.iter() {
        if g.neighbours(v).intersection_len(n_side) < k {
            return false;
        }
    }
    let n_verts: Vec<usize> = n_side.to_vec();
    for (i, &x) in n_verts.iter().enumerate() {
        for &y in &n_verts[i + 1..] {
            let common = g.neighbours(x).intersection(g.neighbours(y));
            if common.intersection_len(m_side) < k {
                return false;
            }
        }
    }
    true
}
