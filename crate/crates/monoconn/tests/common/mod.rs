//! Independent reference implementations for the acceptance gate. Nothing
//! here touches the crate's bitset machinery: adjacency is `Vec<Vec<usize>>`,
//! reachability is a plain queue BFS, connectivity is checked by enumerating
//! candidate separators, and the exhaustive M enumeration walks colour sets
//! first. Agreement between these and the crate is the point of the tests.

use monoconn::{ColouredCompleteGraph, SimpleGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Adjacency lists indexed by vertex label (universe size), plus the live
/// vertex labels.
pub fn adjacency(g: &SimpleGraph) -> (Vec<usize>, Vec<Vec<usize>>) {
    let verts: Vec<usize> = g.vertices().iter().collect();
    let mut adj = vec![Vec::new(); g.universe()];
    for &u in &verts {
        adj[u] = g.neighbours(u).iter().collect();
    }
    (verts, adj)
}

/// BFS over `adj` restricted to `alive`; true when one search reaches every
/// alive vertex. Zero or one alive vertices count as connected.
fn spans(alive: &[usize], adj: &[Vec<usize>]) -> bool {
    if alive.len() <= 1 {
        return true;
    }
    let mut member = vec![false; adj.len()];
    for &v in alive {
        member[v] = true;
    }
    let mut seen = vec![false; adj.len()];
    let mut queue = std::collections::VecDeque::from([alive[0]]);
    seen[alive[0]] = true;
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if member[w] && !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached == alive.len()
}

/// Visit every `t`-subset of `items`, stopping early when `visit` says so.
/// Returns true when every visited subset returned true.
fn all_subsets(items: &[usize], t: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        items: &[usize],
        t: usize,
        from: usize,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if chosen.len() == t {
            return visit(chosen);
        }
        for i in from..items.len() {
            chosen.push(items[i]);
            let ok = rec(items, t, i + 1, chosen, visit);
            chosen.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    rec(items, t, 0, &mut Vec::new(), visit)
}

/// Definition-chasing k-connectivity of the subgraph induced on `verts`: at
/// least k+1 vertices, and no removal of k-1 of them disconnects the rest.
pub fn brute_is_k_connected(verts: &[usize], adj: &[Vec<usize>], k: usize) -> bool {
    if verts.len() < k + 1 {
        return false;
    }
    if k == 0 {
        return true;
    }
    all_subsets(verts, k - 1, &mut |removed| {
        let alive: Vec<usize> = verts.iter().copied().filter(|v| !removed.contains(v)).collect();
        spans(&alive, adj)
    })
}

/// Exact vertex connectivity by separator enumeration: the largest j such
/// that the graph has more than j vertices and no j-1 of them separate it.
pub fn brute_vertex_connectivity(g: &SimpleGraph) -> usize {
    let (verts, adj) = adjacency(g);
    let mut kappa = 0;
    for j in 1..verts.len() {
        if brute_is_k_connected(&verts, &adj, j) {
            kappa = j;
        } else {
            break;
        }
    }
    kappa
}

/// Exhaustive M by a second route: colour subsets outermost (at most s of
/// them), then every vertex subset, keeping the largest k-connected one.
pub fn brute_exact_m(f: &ColouredCompleteGraph, s: usize, k: usize) -> usize {
    let n = f.order();
    let r = f.colour_count();
    assert!(n <= 20, "the reference enumeration is for tiny hosts");
    let mut best = 0;
    for cmask in 1u32..(1 << r) {
        if cmask.count_ones() as usize > s {
            continue;
        }
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                if cmask >> (f.colour(u, v) - 1) & 1 == 1 {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        for vmask in 0u32..(1 << n) {
            if (vmask.count_ones() as usize) <= best {
                continue;
            }
            let verts: Vec<usize> = (0..n).filter(|&v| vmask >> v & 1 == 1).collect();
            if brute_is_k_connected(&verts, &adj, k) {
                best = verts.len();
            }
        }
    }
    best
}

pub fn random_colouring(n: usize, r: usize, seed: u64) -> ColouredCompleteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ColouredCompleteGraph::random(n, r, &mut rng).expect("valid parameters")
}

/// G(n, p) with p = num/den, a fixed seed, and every vertex present.
pub fn random_graph(n: usize, num: u32, den: u32, seed: u64) -> SimpleGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_ratio(num, den) {
                edges.push((u, v));
            }
        }
    }
    let mut g = SimpleGraph::from_edges(n, &edges);
    for v in 0..n {
        g.add_vertex(v);
    }
    g
}

/// Random bipartite graph on parts {0..m} and {m..m+n} with crossing edge
/// probability num/den.
pub fn random_bipartite(m: usize, n: usize, num: u32, den: u32, seed: u64) -> SimpleGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..m {
        for v in m..m + n {
            if rng.gen_ratio(num, den) {
                edges.push((u, v));
            }
        }
    }
    let mut g = SimpleGraph::from_edges(m + n, &edges);
    for v in 0..m + n {
        g.add_vertex(v);
    }
    g
}
