use rand::Rng;

use super::{SimpleGraph, VertexSet};
use crate::{Error, Result};

/// An r-colouring of the edges of the complete graph K_n. Colours are
/// 1-indexed; every one of the n(n-1)/2 edges has exactly one colour.
#[derive(Clone, PartialEq, Eq)]
pub struct ColouredCompleteGraph {
    n: usize,
    r: usize,
    /// Triangular edge->colour map, indexed by `pair_index`.
    colours: Vec<u8>,
}

pub(crate) fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    // edges (0,1), (0,2), ..., (0,n-1), (1,2), ...
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

impl ColouredCompleteGraph {
    pub fn new_with<F: FnMut(usize, usize) -> usize>(n: usize, r: usize, mut f: F) -> Result<Self> {
        Self::validate_params(n, r)?;
        let mut colours = vec![0u8; n * (n - 1) / 2];
        for u in 0..n {
            for v in u + 1..n {
                let c = f(u, v);
                if c < 1 || c > r {
                    return Err(Error::Parameter(format!(
                        "colour {c} for edge ({u},{v}) outside 1..={r}"
                    )));
                }
                colours[pair_index(n, u, v)] = c as u8;
            }
        }
        Ok(ColouredCompleteGraph { n, r, colours })
    }

    pub fn from_colours(n: usize, r: usize, colours: Vec<u8>) -> Result<Self> {
        Self::validate_params(n, r)?;
        if colours.len() != n * (n - 1) / 2 {
            return Err(Error::Parameter(format!(
                "expected {} edge colours, got {}",
                n * (n - 1) / 2,
                colours.len()
            )));
        }
        if let Some(c) = colours.iter().find(|&&c| c < 1 || c as usize > r) {
            return Err(Error::Parameter(format!("colour {c} outside 1..={r}")));
        }
        Ok(ColouredCompleteGraph { n, r, colours })
    }

    pub fn random<R: Rng>(n: usize, r: usize, rng: &mut R) -> Result<Self> {
        Self::validate_params(n, r)?;
        let colours = (0..n * (n - 1) / 2)
            .map(|_| rng.gen_range(1..=r) as u8)
            .collect();
        Ok(ColouredCompleteGraph { n, r, colours })
    }

    fn validate_params(n: usize, r: usize) -> Result<()> {
        if n < 2 {
            return Err(Error::Parameter(format!("need n >= 2 vertices, got {n}")));
        }
        if r < 1 || r > 255 {
            return Err(Error::Parameter(format!("need 1 <= r <= 255 colours, got {r}")));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn colour_count(&self) -> usize {
        self.r
    }

    pub fn colour(&self, u: usize, v: usize) -> usize {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.colours[pair_index(self.n, a, b)] as usize
    }

    pub fn set_colour(&mut self, u: usize, v: usize, c: usize) {
        debug_assert!(c >= 1 && c <= self.r);
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.colours[pair_index(self.n, a, b)] = c as u8;
    }

    /// Edge list (u < v, lexicographic) with colours; the canonical order used
    /// by the file format.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).map(move |v| (u, v, self.colour(u, v)))
        })
    }

    pub fn colour_edge_count(&self, c: usize) -> usize {
        self.colours.iter().filter(|&&x| x as usize == c).count()
    }

    /// The spanning subgraph formed by the edges of colour `c`.
    pub fn colour_graph(&self, c: usize) -> SimpleGraph {
        let mut g = SimpleGraph::with_vertices(VertexSet::full(self.n));
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.colours[pair_index(self.n, u, v)] as usize == c {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// The spanning subgraph formed by edges whose colour lies in `cs`.
    pub fn colour_union_graph(&self, cs: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::with_vertices(VertexSet::full(self.n));
        for u in 0..self.n {
            for v in u + 1..self.n {
                if cs.contains(&(self.colours[pair_index(self.n, u, v)] as usize)) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Bipartite graph of the colour-`c` edges with one end in `a`, other in `b`.
    /// `a` and `b` must be disjoint.
    pub fn colour_bipartite(&self, c: usize, a: &VertexSet, b: &VertexSet) -> SimpleGraph {
        debug_assert!(a.is_disjoint_from(b));
        let mut g = SimpleGraph::with_vertices(a.union(b));
        for u in a.iter() {
            for v in b.iter() {
                if self.colour(u, v) == c {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Number of colour-`c` edges from `v` into `within` (excluding v itself).
    pub fn colour_degree_into(&self, v: usize, c: usize, within: &VertexSet) -> usize {
        within
            .iter()
            .filter(|&w| w != v && self.colour(v, w) == c)
            .count()
    }
}

impl std::fmt::Debug for ColouredCompleteGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ColouredCompleteGraph(n={}, r={})", self.n, self.r)
    }
}

/// An r-colouring of the edges of the complete bipartite graph K_{m,n}.
/// Left part is 0..m, right part is m..m+n; colours 1-indexed.
#[derive(Clone, PartialEq, Eq)]
pub struct BipartiteColouring {
    m: usize,
    n: usize,
    r: usize,
    /// Row-major left x right colour map.
    colours: Vec<u8>,
}

impl BipartiteColouring {
    pub fn new_with<F: FnMut(usize, usize) -> usize>(
        m: usize,
        n: usize,
        r: usize,
        mut f: F,
    ) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Parameter(format!(
                "both parts must be nonempty, got {m} and {n}"
            )));
        }
        if r < 1 || r > 255 {
            return Err(Error::Parameter(format!("need 1 <= r <= 255 colours, got {r}")));
        }
        let mut colours = vec![0u8; m * n];
        for u in 0..m {
            for w in 0..n {
                let c = f(u, m + w);
                if c < 1 || c > r {
                    return Err(Error::Parameter(format!(
                        "colour {c} for edge ({u},{}) outside 1..={r}",
                        m + w
                    )));
                }
                colours[u * n + w] = c as u8;
            }
        }
        Ok(BipartiteColouring { m, n, r, colours })
    }

    pub fn left_order(&self) -> usize {
        self.m
    }

    pub fn right_order(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.m + self.n
    }

    pub fn colour_count(&self) -> usize {
        self.r
    }

    /// Colour of the edge between left vertex `u` (< m) and right vertex `v`
    /// (in m..m+n).
    pub fn colour(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < self.m && v >= self.m && v < self.m + self.n);
        self.colours[u * self.n + (v - self.m)] as usize
    }

    pub fn parts(&self) -> (VertexSet, VertexSet) {
        let uni = self.m + self.n;
        (
            VertexSet::from_iter(uni, 0..self.m),
            VertexSet::from_iter(uni, self.m..uni),
        )
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.m).flat_map(move |u| {
            (self.m..self.m + self.n).map(move |v| (u, v, self.colour(u, v)))
        })
    }

    /// The subgraph (on universe m+n) formed by the colour-`c` edges.
    pub fn colour_graph(&self, c: usize) -> SimpleGraph {
        let mut g = SimpleGraph::with_vertices(VertexSet::full(self.m + self.n));
        for u in 0..self.m {
            for w in 0..self.n {
                if self.colours[u * self.n + w] as usize == c {
                    g.add_edge(u, self.m + w);
                }
            }
        }
        g
    }

    pub fn colour_degree_into(&self, v: usize, c: usize, within: &VertexSet) -> usize {
        if v < self.m {
            within
                .iter()
                .filter(|&w| w >= self.m && self.colour(v, w) == c)
                .count()
        } else {
            within
                .iter()
                .filter(|&u| u < self.m && self.colour(u, v) == c)
                .count()
        }
    }
}

impl std::fmt::Debug for BipartiteColouring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "BipartiteColouring(m={}, n={}, r={})",
            self.m, self.n, self.r
        )
    }
}
