use super::VertexSet;

/// An undirected simple graph on an explicit vertex set inside a fixed
/// universe. Adjacency rows are bitsets, which keeps neighbourhood
/// intersections and flow bookkeeping cheap on the dense graphs this crate
/// works with.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    verts: VertexSet,
    adj: Vec<VertexSet>,
}

impl SimpleGraph {
    pub fn empty(universe: usize) -> Self {
        SimpleGraph {
            verts: VertexSet::empty(universe),
            adj: vec![VertexSet::empty(universe); universe],
        }
    }

    /// Graph with the given vertices and no edges.
    pub fn with_vertices(verts: VertexSet) -> Self {
        let universe = verts.universe();
        SimpleGraph {
            verts,
            adj: vec![VertexSet::empty(universe); universe],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::with_vertices(VertexSet::full(n));
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let mut g = SimpleGraph::with_vertices(VertexSet::full(m + n));
        for u in 0..m {
            for v in m..m + n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(universe: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::with_vertices(VertexSet::full(universe));
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_vertex(&mut self, v: usize) {
        self.verts.insert(v);
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "no self loops");
        debug_assert!(self.verts.contains(u) && self.verts.contains(v));
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn universe(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.verts
    }

    pub fn order(&self) -> usize {
        self.verts.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.verts.iter().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Sum of degrees over order, as an exact rational pair (2e, n).
    pub fn average_degree_num_den(&self) -> (usize, usize) {
        (2 * self.edge_count(), self.order())
    }

    /// Subgraph induced on `keep` (labels preserved).
    pub fn induced(&self, keep: &VertexSet) -> SimpleGraph {
        let verts = self.verts.intersection(keep);
        let mut adj = vec![VertexSet::empty(self.universe()); self.universe()];
        for v in verts.iter() {
            adj[v] = self.adj[v].intersection(&verts);
        }
        SimpleGraph { verts, adj }
    }

    /// Union of two graphs over the same universe.
    pub fn union(&self, other: &SimpleGraph) -> SimpleGraph {
        assert_eq!(self.universe(), other.universe());
        let verts = self.verts.union(&other.verts);
        let adj = self
            .adj
            .iter()
            .zip(&other.adj)
            .map(|(a, b)| a.union(b))
            .collect();
        SimpleGraph { verts, adj }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.verts.iter().all(|v| self.degree(v) == n - 1)
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimpleGraph(order={}, edges={})", self.order(), self.edge_count())
    }
}
