use serde::Serialize;

use super::{BipartiteColouring, ColouredCompleteGraph, SimpleGraph, VertexSet};

/// A separator found while testing connectivity: removing `separator` from the
/// graph leaves `a` and `b` in different components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutCertificate {
    pub separator: Vec<usize>,
    pub a: usize,
    pub b: usize,
}

impl CutCertificate {
    /// Check the certificate against a graph: `a` and `b` survive the removal
    /// of `separator` and end up in different components.
    pub fn replay(&self, g: &SimpleGraph) -> bool {
        if self.separator.contains(&self.a) || self.separator.contains(&self.b) {
            return false;
        }
        if !g.vertices().contains(self.a) || !g.vertices().contains(self.b) {
            return false;
        }
        let mut keep = g.vertices().clone();
        for &v in &self.separator {
            keep.remove(v);
        }
        // BFS from a within keep.
        let mut seen = VertexSet::empty(g.universe());
        let mut queue = vec![self.a];
        seen.insert(self.a);
        while let Some(u) = queue.pop() {
            for v in g.neighbours(u).intersection(&keep).iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    queue.push(v);
                }
            }
        }
        !seen.contains(self.b)
    }
}

/// A verified output of an extraction procedure: a vertex set spanning a
/// k-connected subgraph in the union of the listed colours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgraphWitness {
    pub vertices: Vec<usize>,
    pub colours: Vec<u8>,
    pub k: usize,
}

impl SubgraphWitness {
    pub fn new(mut vertices: Vec<usize>, mut colours: Vec<u8>, k: usize) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        colours.sort_unstable();
        colours.dedup();
        SubgraphWitness { vertices, colours, k }
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_set(&self, universe: usize) -> VertexSet {
        VertexSet::from_iter(universe, self.vertices.iter().copied())
    }

    /// Re-derive the induced subgraph from the host colouring and re-run the
    /// connectivity test from scratch.
    pub fn verify(&self, host: &ColouredCompleteGraph) -> bool {
        if self.vertices.iter().any(|&v| v >= host.order()) {
            return false;
        }
        if self.colours.iter().any(|&c| c == 0 || c as usize > host.colour_count()) {
            return false;
        }
        let cs: Vec<usize> = self.colours.iter().map(|&c| c as usize).collect();
        let keep = self.vertex_set(host.order());
        let g = host.colour_union_graph(&cs).induced(&keep);
        crate::connectivity::is_k_connected(&g, self.k).is_connected()
    }

    /// As `verify`, for witnesses extracted from a bipartite colouring.
    pub fn verify_bipartite(&self, host: &BipartiteColouring) -> bool {
        if self.vertices.iter().any(|&v| v >= host.order()) {
            return false;
        }
        if self.colours.iter().any(|&c| c == 0 || c as usize > host.colour_count()) {
            return false;
        }
        let keep = self.vertex_set(host.order());
        let mut g = SimpleGraph::with_vertices(keep.clone());
        for (u, v, c) in host.edges() {
            if keep.contains(u) && keep.contains(v) && self.colours.contains(&(c as u8)) {
                g.add_edge(u, v);
            }
        }
        crate::connectivity::is_k_connected(&g, self.k).is_connected()
    }
}
