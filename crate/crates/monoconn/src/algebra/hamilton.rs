//! Hamilton path decompositions of complete graphs on an even vertex count.
//!
//! K_{2r} decomposes into r Hamilton paths by the classical zigzag walk:
//! path t starts at t and alternates outward, t, t+1, t-1, t+2, t-2, ...
//! (mod 2r), finishing at t+r. Consecutive steps realise every cyclic
//! difference exactly once, so translating the walk r times covers each edge
//! exactly once, and every vertex is an end of exactly one path.

/// The r paths of the decomposition of K_{2r}; path t is returned as its
/// vertex sequence, running from t to t+r.
pub fn hamilton_path_decomposition(r: usize) -> Vec<Vec<usize>> {
    assert!(r >= 1);
    let m = 2 * r;
    (0..r)
        .map(|t| {
            let mut path = Vec::with_capacity(m);
            path.push(t);
            for step in 1..=r {
                path.push((t + step) % m);
                if step < r {
                    path.push((t + m - step) % m);
                }
            }
            path
        })
        .collect()
}
