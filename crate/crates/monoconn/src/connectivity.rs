//! Vertex connectivity testing via maximum flow.
//!
//! The workhorse is `is_k_connected`, which decides whether a graph is
//! k-connected using the classical two-phase scheme: pick the k smallest
//! vertices as a pivot set L, check every non-adjacent pair inside L with a
//! pairwise flow, then check a fan of k paths from every remaining vertex
//! into L. Both phases run on a vertex-split unit-capacity network that is
//! built once and reused across queries by resetting capacities.
//!
//! `vertex_connectivity` computes the exact connectivity number with the
//! non-adjacent-pair schedule and can report a minimum separator.

use std::collections::VecDeque;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::graph::{CutCertificate, SimpleGraph, VertexSet};
use crate::{internal_check, Error, Result};

const INF: u32 = u32::MAX / 2;

/// Outcome of a k-connectivity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KConnectivity {
    Connected,
    /// Fewer than k+1 vertices; such graphs are never considered k-connected.
    TooSmall,
    /// A separator of size < k together with a pair it separates.
    Cut(CutCertificate),
}

impl KConnectivity {
    pub fn is_connected(&self) -> bool {
        matches!(self, KConnectivity::Connected)
    }

    pub fn cut(&self) -> Option<&CutCertificate> {
        match self {
            KConnectivity::Cut(c) => Some(c),
            _ => None,
        }
    }
}

/// Dinic maximum flow on a fixed network. Capacities can be frozen once the
/// network is complete and restored before each query, so one network serves
/// many flow computations.
#[derive(Clone)]
struct Dinic {
    adj: Vec<Vec<u32>>,
    to: Vec<u32>,
    cap: Vec<u32>,
    base: Vec<u32>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(nodes: usize) -> Self {
        Dinic {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            base: Vec::new(),
            level: vec![-1; nodes],
            iter: vec![0; nodes],
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, c: u32) {
        let id = self.to.len() as u32;
        self.to.push(v as u32);
        self.cap.push(c);
        self.adj[u].push(id);
        self.to.push(u as u32);
        self.cap.push(0);
        self.adj[v].push(id + 1);
    }

    fn freeze(&mut self) {
        self.base = self.cap.clone();
    }

    fn reset(&mut self) {
        self.cap.copy_from_slice(&self.base);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        let mut queue = VecDeque::new();
        self.level[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e as usize] as usize;
                if self.cap[e as usize] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, f: u32) -> u32 {
        if u == t {
            return f;
        }
        while self.iter[u] < self.adj[u].len() {
            let e = self.adj[u][self.iter[u]] as usize;
            let v = self.to[e] as usize;
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let d = self.dfs(v, t, f.min(self.cap[e]));
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    /// Maximum flow from s to t, capped at `limit`. The cap only ever cuts
    /// the search short when the answer is "at least limit", so min-cut
    /// extraction below the cap stays exact.
    fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit && self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, limit - flow);
                if f == 0 {
                    break;
                }
                flow += f;
                if flow >= limit {
                    break;
                }
            }
        }
        flow
    }

    /// Nodes reachable from s in the residual network after a max flow run.
    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        let mut queue = vec![s];
        seen[s] = true;
        while let Some(u) = queue.pop() {
            for &e in &self.adj[u] {
                let v = self.to[e as usize] as usize;
                if self.cap[e as usize] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push(v);
                }
            }
        }
        seen
    }
}

#[derive(Clone, Copy, Debug)]
enum Query {
    /// Pairwise connectivity between two pivot vertices (compact indices).
    Pair(usize, usize),
    /// Fan from one outside vertex (compact index) into the pivot set.
    Fan(usize),
}

/// Both query networks for one graph, over the compacted active vertices.
/// Vertex i splits into nodes 2i (in) and 2i+1 (out); the fan network has an
/// extra sink node behind the pivot set.
#[derive(Clone)]
struct Networks {
    verts: Vec<usize>,
    pairs: Dinic,
    fan: Dinic,
    k: usize,
}

impl Networks {
    fn build(g: &SimpleGraph, k: usize) -> Networks {
        let verts: Vec<usize> = g.vertices().iter().collect();
        let m = verts.len();
        let mut index = vec![usize::MAX; g.universe()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }

        let mut pairs = Dinic::new(2 * m);
        let sink = 2 * m;
        let mut fan = Dinic::new(2 * m + 1);
        for i in 0..m {
            pairs.add_edge(2 * i, 2 * i + 1, 1);
            if i < k {
                // Pivot vertices terminate fan paths instead of relaying them.
                fan.add_edge(2 * i, 2 * i + 1, 0);
                fan.add_edge(2 * i, sink, 1);
            } else {
                fan.add_edge(2 * i, 2 * i + 1, 1);
            }
        }
        for &u in &verts {
            let iu = index[u];
            for v in g.neighbours(u).iter() {
                if v > u {
                    let iv = index[v];
                    pairs.add_edge(2 * iu + 1, 2 * iv, INF);
                    pairs.add_edge(2 * iv + 1, 2 * iu, INF);
                    fan.add_edge(2 * iu + 1, 2 * iv, INF);
                    fan.add_edge(2 * iv + 1, 2 * iu, INF);
                }
            }
        }
        pairs.freeze();
        fan.freeze();
        Networks { verts, pairs, fan, k }
    }

    /// Run one query; on failure return the separator read off the residual
    /// cut, in ascending vertex order.
    fn run(&mut self, q: Query) -> Option<(Vec<usize>, Query)> {
        let k = self.k as u32;
        match q {
            Query::Pair(i, j) => {
                self.pairs.reset();
                let flow = self.pairs.max_flow(2 * i + 1, 2 * j, k);
                if flow >= k {
                    return None;
                }
                let reach = self.pairs.residual_reachable(2 * i + 1);
                let sep: Vec<usize> = (0..self.verts.len())
                    .filter(|&x| reach[2 * x] && !reach[2 * x + 1])
                    .map(|x| self.verts[x])
                    .collect();
                Some((sep, q))
            }
            Query::Fan(u) => {
                self.fan.reset();
                let sink = self.fan.adj.len() - 1;
                let flow = self.fan.max_flow(2 * u + 1, sink, k);
                if flow >= k {
                    return None;
                }
                let reach = self.fan.residual_reachable(2 * u + 1);
                let sep: Vec<usize> = (0..self.verts.len())
                    .filter(|&x| {
                        if x < self.k {
                            // A pivot vertex is cut when its sink edge crosses.
                            reach[2 * x]
                        } else {
                            reach[2 * x] && !reach[2 * x + 1]
                        }
                    })
                    .map(|x| self.verts[x])
                    .collect();
                Some((sep, q))
            }
        }
    }
}

fn certificate_for(
    g: &SimpleGraph,
    nets: &Networks,
    sep: Vec<usize>,
    q: Query,
) -> CutCertificate {
    match q {
        Query::Pair(i, j) => CutCertificate {
            a: nets.verts[i],
            b: nets.verts[j],
            separator: sep,
        },
        Query::Fan(u) => {
            // The fan failed, so removing the separator strands u away from
            // at least one pivot vertex; find the first one by BFS.
            let a = nets.verts[u];
            let mut keep = g.vertices().clone();
            for &v in &sep {
                keep.remove(v);
            }
            let mut seen = VertexSet::empty(g.universe());
            seen.insert(a);
            let mut stack = vec![a];
            while let Some(x) = stack.pop() {
                for y in g.neighbours(x).intersection(&keep).iter() {
                    if !seen.contains(y) {
                        seen.insert(y);
                        stack.push(y);
                    }
                }
            }
            let b = nets.verts[..nets.k]
                .iter()
                .copied()
                .find(|&w| !sep.contains(&w) && !seen.contains(w))
                .expect("residual cut must strand some pivot vertex");
            CutCertificate { a, b, separator: sep }
        }
    }
}

fn pivot_queries(g: &SimpleGraph, nets: &Networks) -> Vec<Query> {
    let k = nets.k;
    let m = nets.verts.len();
    let mut queries = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if !g.has_edge(nets.verts[i], nets.verts[j]) {
                queries.push(Query::Pair(i, j));
            }
        }
    }
    for u in k..m {
        queries.push(Query::Fan(u));
    }
    queries
}

fn check_k_connected(g: &SimpleGraph, k: usize, parallel: bool) -> KConnectivity {
    let order = g.order();
    if k == 0 {
        return if order >= 1 {
            KConnectivity::Connected
        } else {
            KConnectivity::TooSmall
        };
    }
    if order < k + 1 {
        return KConnectivity::TooSmall;
    }
    if k == 1 {
        // Plain reachability is enough and much cheaper.
        let start = g.vertices().first().unwrap();
        let comp = component_of(g, start);
        return if comp.len() == order {
            KConnectivity::Connected
        } else {
            let b = g.vertices().difference(&comp).first().unwrap();
            KConnectivity::Cut(CutCertificate { separator: Vec::new(), a: start, b })
        };
    }

    let nets = Networks::build(g, k);
    let queries = pivot_queries(g, &nets);
    let failure = run_queries(&nets, &queries, parallel);
    match failure {
        None => KConnectivity::Connected,
        Some((sep, q)) => KConnectivity::Cut(certificate_for(g, &nets, sep, q)),
    }
}

fn run_queries(
    nets: &Networks,
    queries: &[Query],
    parallel: bool,
) -> Option<(Vec<usize>, Query)> {
    #[cfg(feature = "parallel")]
    if parallel {
        return queries
            .par_iter()
            .map_init(|| nets.clone(), |n, &q| n.run(q))
            .find_first(Option::is_some)
            .flatten();
    }
    let _ = parallel;
    let mut nets = nets.clone();
    for &q in queries {
        if let Some(hit) = nets.run(q) {
            return Some(hit);
        }
    }
    None
}

/// Decide whether g is k-connected. A graph with fewer than k+1 vertices is
/// not k-connected; otherwise the answer comes with a separating certificate
/// when it is negative. Runs flow queries in parallel when the `parallel`
/// feature is enabled; the answer is identical either way because the first
/// failing query in schedule order wins.
pub fn is_k_connected(g: &SimpleGraph, k: usize) -> KConnectivity {
    check_k_connected(g, k, cfg!(feature = "parallel"))
}

/// Single-threaded twin of `is_k_connected`, kept unconditionally compiled so
/// the two can be compared in benchmarks.
pub fn is_k_connected_sequential(g: &SimpleGraph, k: usize) -> KConnectivity {
    check_k_connected(g, k, false)
}

/// Exact vertex connectivity together with a minimum separator (None for a
/// complete graph, which has no separator at all). Among the separators the
/// pair schedule discovers, the lexicographically smallest one is returned.
pub fn vertex_connectivity(g: &SimpleGraph) -> Result<(usize, Option<CutCertificate>)> {
    let order = g.order();
    if order < 2 {
        return Err(Error::Parameter(format!(
            "connectivity needs at least 2 vertices, got {order}"
        )));
    }
    if g.is_complete() {
        return Ok((order - 1, None));
    }
    let verts: Vec<usize> = g.vertices().iter().collect();
    let mut index = vec![usize::MAX; g.universe()];
    for (i, &v) in verts.iter().enumerate() {
        index[v] = i;
    }
    // Reuse the pair network from the two-phase tester; pivot size is
    // irrelevant for pair queries.
    let mut nets = Networks::build(g, 0);

    let mut best = order - 2;
    let mut i = 0;
    while i < verts.len() && i <= best {
        let vi = verts[i];
        for &u in &verts {
            if u == vi || g.has_edge(vi, u) {
                continue;
            }
            nets.pairs.reset();
            let flow = nets.pairs.max_flow(2 * i + 1, 2 * index[u], best as u32) as usize;
            if flow < best {
                best = flow;
            }
        }
        i += 1;
    }

    // Second pass over the same schedule: collect every separator of the
    // minimum size and keep the lexicographically smallest.
    let mut cert: Option<CutCertificate> = None;
    let mut i = 0;
    while i < verts.len() && i <= best {
        let vi = verts[i];
        for &u in &verts {
            if u == vi || g.has_edge(vi, u) {
                continue;
            }
            nets.pairs.reset();
            let flow = nets.pairs.max_flow(2 * i + 1, 2 * index[u], best as u32 + 1) as usize;
            if flow == best {
                let reach = nets.pairs.residual_reachable(2 * i + 1);
                let sep: Vec<usize> = (0..verts.len())
                    .filter(|&x| reach[2 * x] && !reach[2 * x + 1])
                    .map(|x| verts[x])
                    .collect();
                internal_check!(
                    sep.len() == best,
                    "residual cut size {} does not match connectivity {best}",
                    sep.len()
                );
                let better = match &cert {
                    None => true,
                    Some(c) => sep < c.separator,
                };
                if better {
                    cert = Some(CutCertificate { separator: sep, a: vi, b: u });
                }
            }
        }
        i += 1;
    }
    internal_check!(
        cert.is_some(),
        "non-complete graph produced no separator at connectivity {best}"
    );
    Ok((best, cert))
}

fn component_of(g: &SimpleGraph, start: usize) -> VertexSet {
    let mut comp = VertexSet::empty(g.universe());
    comp.insert(start);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for v in g.neighbours(u).iter() {
            if !comp.contains(v) {
                comp.insert(v);
                stack.push(v);
            }
        }
    }
    comp
}

/// Connected components, ordered by their smallest vertex.
pub fn components(g: &SimpleGraph) -> Vec<VertexSet> {
    let mut seen = VertexSet::empty(g.universe());
    let mut out = Vec::new();
    for v in g.vertices().iter() {
        if seen.contains(v) {
            continue;
        }
        let comp = component_of(g, v);
        seen = seen.union(&comp);
        out.push(comp);
    }
    out
}

pub fn largest_component_order(g: &SimpleGraph) -> usize {
    components(g).iter().map(|c| c.len()).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force check: try every vertex subset of size < k as a separator.
    fn brute_is_k_connected(g: &SimpleGraph, k: usize) -> bool {
        let order = g.order();
        if k == 0 {
            return order >= 1;
        }
        if order < k + 1 {
            return false;
        }
        let verts: Vec<usize> = g.vertices().iter().collect();
        // All subsets of the active vertices of size <= k-1.
        let m = verts.len();
        for mask in 0u32..(1 << m) {
            if (mask.count_ones() as usize) >= k {
                continue;
            }
            let mut keep = g.vertices().clone();
            for (i, &v) in verts.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    keep.remove(v);
                }
            }
            let h = g.induced(&keep);
            if h.order() == 0 {
                continue;
            }
            let comp = component_of(&h, h.vertices().first().unwrap());
            if comp.len() < h.order() {
                return false;
            }
        }
        true
    }

    fn petersen() -> SimpleGraph {
        let mut g = SimpleGraph::with_vertices(VertexSet::full(10));
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(i + 5, 5 + (i + 2) % 5);
        }
        g
    }

    #[test]
    fn complete_graph_connectivity() {
        let g = SimpleGraph::complete(6);
        let (kappa, cut) = vertex_connectivity(&g).unwrap();
        assert_eq!(kappa, 5);
        assert!(cut.is_none());
        assert!(is_k_connected(&g, 5).is_connected());
        assert_eq!(is_k_connected(&g, 6), KConnectivity::TooSmall);
    }

    #[test]
    fn complete_bipartite_cut() {
        let g = SimpleGraph::complete_bipartite(3, 4);
        let (kappa, cut) = vertex_connectivity(&g).unwrap();
        assert_eq!(kappa, 3);
        let cut = cut.unwrap();
        assert_eq!(cut.separator, vec![0, 1, 2]);
        assert!(cut.replay(&g));
        assert!(is_k_connected(&g, 3).is_connected());
        match is_k_connected(&g, 4) {
            KConnectivity::Cut(c) => {
                assert!(c.separator.len() < 4);
                assert!(c.replay(&g));
            }
            other => panic!("expected a cut, got {other:?}"),
        }
    }

    #[test]
    fn petersen_connectivity() {
        let g = petersen();
        let (kappa, cut) = vertex_connectivity(&g).unwrap();
        assert_eq!(kappa, 3);
        assert!(cut.unwrap().replay(&g));
        assert!(brute_is_k_connected(&g, 3));
        assert!(!brute_is_k_connected(&g, 4));
        assert!(is_k_connected(&g, 3).is_connected());
        assert!(!is_k_connected(&g, 4).is_connected());
    }

    #[test]
    fn disconnected_graph() {
        let mut g = SimpleGraph::with_vertices(VertexSet::full(6));
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        g.add_edge(4, 5);
        let comps = components(&g);
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].to_vec(), vec![0, 1]);
        assert_eq!(largest_component_order(&g), 2);
        let (kappa, cut) = vertex_connectivity(&g).unwrap();
        assert_eq!(kappa, 0);
        assert_eq!(cut.unwrap().separator, Vec::<usize>::new());
    }

    #[test]
    fn induced_subgraph_keeps_labels_in_cuts() {
        // Take K_7 minus vertex 0 minus a perfect matching on {1..6};
        // connectivity drops below 5 and certificates must use original labels.
        let g = SimpleGraph::complete(7);
        let keep = VertexSet::from_iter(7, 1..7);
        let mut h = g.induced(&keep);
        assert_eq!(h.order(), 6);
        // h is K_6 on labels 1..=6.
        let (kappa, _) = vertex_connectivity(&h).unwrap();
        assert_eq!(kappa, 5);
        h = {
            let mut t = SimpleGraph::with_vertices(keep.clone());
            for u in 1..7 {
                for v in u + 1..7 {
                    if h.has_edge(u, v) && !(v == u + 1 && u % 2 == 1) {
                        t.add_edge(u, v);
                    }
                }
            }
            t
        };
        let (kappa, cut) = vertex_connectivity(&h).unwrap();
        assert_eq!(kappa, 4);
        let cut = cut.unwrap();
        assert!(cut.replay(&h));
        assert!(cut.separator.iter().all(|&v| (1..7).contains(&v)));
    }

    #[test]
    fn sequential_twin_agrees() {
        let g = petersen();
        for k in 0..5 {
            assert_eq!(is_k_connected(&g, k), is_k_connected_sequential(&g, k));
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;
        use rand::SeedableRng;
        use rand_chacha::ChaCha8Rng;

        fn random_graph(n: usize, p: f64, seed: u64) -> SimpleGraph {
            use rand::Rng;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut g = SimpleGraph::with_vertices(VertexSet::full(n));
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]

            #[test]
            fn matches_brute_force(n in 2usize..9, k in 0usize..5, seed in 0u64..1u64 << 48, p in 0.2f64..0.9) {
                let g = random_graph(n, p, seed);
                let fast = is_k_connected(&g, k);
                let brute = brute_is_k_connected(&g, k);
                prop_assert_eq!(fast.is_connected(), brute);
                if let KConnectivity::Cut(c) = &fast {
                    prop_assert!(c.separator.len() < k);
                    prop_assert!(c.replay(&g));
                }
            }

            #[test]
            fn connectivity_is_largest_k(n in 2usize..9, seed in 0u64..1u64 << 48, p in 0.2f64..0.9) {
                let g = random_graph(n, p, seed);
                let (kappa, cut) = vertex_connectivity(&g).unwrap();
                prop_assert!(is_k_connected(&g, kappa).is_connected());
                prop_assert!(!is_k_connected(&g, kappa + 1).is_connected());
                if let Some(c) = cut {
                    prop_assert_eq!(c.separator.len(), kappa);
                    prop_assert!(c.replay(&g));
                } else {
                    prop_assert!(g.is_complete());
                }
            }
        }
    }
}
