//! Exhaustive ground truth for small hosts: the exact maximum order of a
//! k-connected subgraph spanned by at most s colours, over every vertex
//! subset and admissible colour set.
//!
//! The host is capped at 64 vertices so subsets live in single machine words;
//! the practical default is far lower because the scan is exponential.
//! Subsets of each size are enumerated in ascending mask order and sizes run
//! from the top down, so the first hit is the answer and, together with the
//! (size, lexicographic) order on colour sets, the reported witness is
//! deterministic. The parallel path scans mask chunks with `find_first`,
//! which preserves exactly that order.

pub mod bounds;
pub mod search;

pub use bounds::{theorem_bounds, Bound, BoundsRow};
pub use search::{adversarial_search, InitKind, ObjectiveKind, SearchOutcome, SearchParams};

use serde::Serialize;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::graph::{ColouredCompleteGraph, SubgraphWitness};
use crate::{Error, Result};

/// Vertex count beyond which `exact_m` refuses to run unless the caller
/// raises the limit explicitly.
pub const DEFAULT_ORACLE_LIMIT: usize = 16;

/// Masks are 64-bit; no limit override can pass this.
pub const HARD_ORACLE_LIMIT: usize = 64;

#[derive(Clone, Debug, Serialize)]
pub struct OracleResult {
    /// Largest order of a k-connected subgraph on at most s colours, 0 when
    /// no such subgraph exists.
    pub value: usize,
    pub witness: Option<SubgraphWitness>,
}

/// Compute the exact value by exhaustive scan. `limit` overrides the default
/// vertex cap (up to 64); pass None for the default.
pub fn exact_m(
    f: &ColouredCompleteGraph,
    s: usize,
    k: usize,
    limit: Option<usize>,
) -> Result<OracleResult> {
    exact_core(f, s, k, limit, cfg!(feature = "parallel"))
}

/// Single-threaded twin of `exact_m` for benchmark comparison; same answer,
/// same witness.
pub fn exact_m_sequential(
    f: &ColouredCompleteGraph,
    s: usize,
    k: usize,
    limit: Option<usize>,
) -> Result<OracleResult> {
    exact_core(f, s, k, limit, false)
}

fn exact_core(
    f: &ColouredCompleteGraph,
    s: usize,
    k: usize,
    limit: Option<usize>,
    parallel: bool,
) -> Result<OracleResult> {
    if k == 0 {
        return Err(Error::Parameter("connectivity target k must be >= 1".into()));
    }
    if s == 0 {
        return Err(Error::Parameter("colour budget s must be >= 1".into()));
    }
    let cap = limit.unwrap_or(DEFAULT_ORACLE_LIMIT);
    if cap > HARD_ORACLE_LIMIT {
        return Err(Error::Parameter(format!(
            "oracle subsets are 64-bit masks; the limit may not exceed {HARD_ORACLE_LIMIT}, got {cap}"
        )));
    }
    let n = f.order();
    if n > cap {
        return Err(Error::Resource(format!(
            "exact oracle capped at {cap} vertices, host has {n}; raise the limit to force the scan"
        )));
    }
    if n < k + 1 {
        return Ok(OracleResult { value: 0, witness: None });
    }

    let r = f.colour_count();
    let mut by_colour = vec![vec![0u64; n]; r];
    for (u, v, c) in f.edges() {
        by_colour[c - 1][u] |= 1 << v;
        by_colour[c - 1][v] |= 1 << u;
    }
    // Colour sets of size 1..=s paired with the adjacency of their union.
    let subsets: Vec<(Vec<u8>, Vec<u64>)> = colour_subsets(r, s.min(r))
        .into_iter()
        .map(|cs| {
            let mut adj = vec![0u64; n];
            for &c in &cs {
                for v in 0..n {
                    adj[v] |= by_colour[c as usize - 1][v];
                }
            }
            (cs, adj)
        })
        .collect();

    for size in (k + 1..=n).rev() {
        for (cs, adj) in &subsets {
            if let Some(mask) = scan_masks(adj, n, size, k, parallel) {
                let vertices: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
                let witness = SubgraphWitness::new(vertices, cs.clone(), k);
                return Ok(OracleResult { value: size, witness: Some(witness) });
            }
        }
    }
    Ok(OracleResult { value: 0, witness: None })
}

/// Non-empty subsets of {1..r} up to the given size, ordered by size then
/// lexicographically.
fn colour_subsets(r: usize, max_size: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for t in 1..=max_size {
        let mut idx: Vec<usize> = (0..t).collect();
        loop {
            out.push(idx.iter().map(|&i| (i + 1) as u8).collect());
            let mut i = t;
            while i > 0 && idx[i - 1] == r - t + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..t {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    out
}

/// All masks of the given popcount over n bits, ascending.
struct MaskIter {
    next: Option<u64>,
    bound: u128,
}

impl MaskIter {
    fn new(n: usize, size: usize) -> MaskIter {
        debug_assert!(size >= 1 && size <= n && n <= 64);
        let first = if size == 64 { u64::MAX } else { (1u64 << size) - 1 };
        MaskIter { next: Some(first), bound: 1u128 << n }
    }
}

impl Iterator for MaskIter {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        // Gosper's hack for the next mask with the same popcount.
        self.next = cur.checked_add(cur & cur.wrapping_neg()).and_then(|ripple| {
            let low = cur & cur.wrapping_neg();
            let next = (((ripple ^ cur) >> 2) / low) | ripple;
            ((next as u128) < self.bound).then_some(next)
        });
        Some(cur)
    }
}

#[cfg(feature = "parallel")]
const CHUNK: usize = 1 << 14;

fn scan_masks(adj: &[u64], n: usize, size: usize, k: usize, parallel: bool) -> Option<u64> {
    let mut masks = MaskIter::new(n, size);
    #[cfg(feature = "parallel")]
    if parallel {
        // Chunked so memory stays bounded; find_first keeps the scan order
        // identical to the sequential path.
        loop {
            let chunk: Vec<u64> = masks.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                return None;
            }
            let hit = chunk
                .par_iter()
                .copied()
                .find_first(|&m| mask_k_connected(adj, m, k));
            if hit.is_some() {
                return hit;
            }
        }
    }
    let _ = parallel;
    masks.find(|&m| mask_k_connected(adj, m, k))
}

/// k-connectivity of the subgraph induced on `mask`, which must have at
/// least k+1 bits: min-degree prefilter, connectivity, then every possible
/// separator of exactly k-1 vertices. Any smaller separator extends to one
/// of that size without reconnecting the rest, so checking size k-1 alone is
/// complete.
fn mask_k_connected(adj: &[u64], mask: u64, k: usize) -> bool {
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        if ((adj[v] & mask).count_ones() as usize) < k {
            return false;
        }
        m &= m - 1;
    }
    if !mask_connected(adj, mask) {
        return false;
    }
    if k < 2 {
        return true;
    }
    let bits: Vec<u32> = {
        let mut bits = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            bits.push(m.trailing_zeros());
            m &= m - 1;
        }
        bits
    };
    let t = k - 1;
    let mut idx: Vec<usize> = (0..t).collect();
    loop {
        let sep = idx.iter().fold(0u64, |acc, &i| acc | 1u64 << bits[i]);
        if !mask_connected(adj, mask & !sep) {
            return false;
        }
        let mut i = t;
        while i > 0 && idx[i - 1] == bits.len() - t + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return true;
        }
        idx[i - 1] += 1;
        for j in i..t {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn mask_connected(adj: &[u64], mask: u64) -> bool {
    debug_assert!(mask != 0);
    let mut seen = mask & mask.wrapping_neg();
    loop {
        let mut next = seen;
        let mut m = seen;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            next |= adj[v] & mask;
            m &= m - 1;
        }
        if next == seen {
            return seen == mask;
        }
        seen = next;
    }
}
