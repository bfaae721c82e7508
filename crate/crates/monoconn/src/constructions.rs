//! Explicit edge colourings of complete graphs whose largest monochromatic
//! k-connected subgraph is provably small. Each constructor returns the
//! colouring together with the bound it claims and the vertex blocks it is
//! built from, so callers can both certify the bound and inspect the layout.

use serde::Serialize;

use crate::algebra::{hamilton_path_decomposition, AffinePlane};
use crate::graph::{BipartiteColouring, ColouredCompleteGraph};
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionReport {
    pub name: &'static str,
    pub n: usize,
    pub r: usize,
    pub k: usize,
    /// Claimed upper bound on the order of any monochromatic k-connected
    /// subgraph of the colouring.
    pub claimed_bound: usize,
    pub block_labels: Vec<String>,
    pub blocks: Vec<Vec<usize>>,
    #[serde(skip)]
    pub colouring: ColouredCompleteGraph,
}

/// Split `total` items into `parts` consecutive runs, as equal as possible,
/// larger runs first. Returns the start offsets plus sizes expanded to
/// explicit vertex lists beginning at `first`.
fn blocks_larger_first(first: usize, total: usize, parts: usize) -> Vec<Vec<usize>> {
    let base = total / parts;
    let rem = total % parts;
    let mut start = first;
    (0..parts)
        .map(|i| {
            let size = base + usize::from(i < rem);
            let block: Vec<usize> = (start..start + size).collect();
            start += size;
            block
        })
        .collect()
}

/// Two-colour construction on four blocks of k-1 vertices plus a bulk block.
/// The red graph confines any k-connected subgraph to the bulk and the first
/// two blocks, the blue graph to the bulk and the last two, so neither colour
/// beats n-2k+2. With an empty bulk (n = 4k-4) the roles of the intra-block
/// colours flip and both colour graphs become blown-up paths, which have no
/// k-connected subgraph at all.
pub fn construct_bg(n: usize, k: usize) -> Result<ConstructionReport> {
    if k < 1 {
        return Err(Error::Parameter("connectivity target k must be >= 1".into()));
    }
    if n < 2 {
        return Err(Error::Parameter(format!("need n >= 2, got {n}")));
    }
    if n + 4 < 4 * k {
        return Err(Error::Parameter(format!(
            "need n >= 4k-4 = {} to fit the four side blocks, got {n}",
            4 * k - 4
        )));
    }
    let swap = n == 4 * k - 4;
    let a = k - 1;
    // Blocks A1..A4 then the bulk B.
    let mut blocks = blocks_larger_first(0, 4 * a, 4);
    blocks.push((4 * a..n).collect());
    let block_of = |v: usize| -> usize {
        if v < 4 * a {
            v / a
        } else {
            4
        }
    };
    const RED: usize = 1;
    const BLUE: usize = 2;
    let colouring = ColouredCompleteGraph::new_with(n, 2, |u, v| {
        let (bu, bv) = (block_of(u), block_of(v));
        match (bu.min(bv), bu.max(bv)) {
            (4, 4) => RED,
            (i, 4) => {
                if i < 2 {
                    RED
                } else {
                    BLUE
                }
            }
            (i, j) if i == j => {
                let red_intra = i < 2;
                if red_intra != swap {
                    RED
                } else {
                    BLUE
                }
            }
            (0, 1) | (0, 2) | (1, 3) => RED,
            _ => BLUE,
        }
    })?;
    let claimed_bound = if swap { 0 } else { n - 2 * k + 2 };
    Ok(ConstructionReport {
        name: "bg",
        n,
        r: 2,
        k,
        claimed_bound,
        block_labels: vec!["A1".into(), "A2".into(), "A3".into(), "A4".into(), "B".into()],
        blocks,
        colouring,
    })
}

/// Upper bound for the base claim of the affine construction.
fn affine_base_bound(n: usize, r: usize, k: usize) -> usize {
    let w = n - r * (k - 1);
    let q = r - 1;
    (r - 1) * w.div_ceil(q * q) + (k - 1)
}

/// Blocks C1..Cr of k-1 vertices, then the rest split over the q^2 points of
/// the affine plane of order q = r-1, larger classes on lexicographically
/// smaller points. Edges between classes take the colour indexed by the
/// parallel class of the line through their points, so each colour graph
/// splits the bulk into q blobs of at most q classes; the clique Ci is joined
/// to the whole bulk in colour i but contributes only k-1 vertices.
pub fn construct_affine(n: usize, r: usize, k: usize) -> Result<ConstructionReport> {
    if k < 1 {
        return Err(Error::Parameter("connectivity target k must be >= 1".into()));
    }
    if r < 2 {
        return Err(Error::Parameter(format!("need at least 2 colours, got {r}")));
    }
    if n < 2 {
        return Err(Error::Parameter(format!("need n >= 2, got {n}")));
    }
    if n < r * (k - 1) {
        return Err(Error::Parameter(format!(
            "need n >= r(k-1) = {} to fit the side cliques, got {n}",
            r * (k - 1)
        )));
    }
    let q = r - 1;
    let plane = AffinePlane::new(q).map_err(|_| {
        Error::Parameter(format!(
            "no affine plane of order {q}: r-1 must be a prime power"
        ))
    })?;

    let side = r * (k - 1);
    let c_blocks = blocks_larger_first(0, side, r);
    let classes = blocks_larger_first(side, n - side, q * q);

    // point_class[v] = affine point of the class containing bulk vertex v.
    let mut owner = vec![usize::MAX; n];
    for (i, block) in c_blocks.iter().enumerate() {
        for &v in block {
            owner[v] = i;
        }
    }
    let mut point_of = vec![usize::MAX; n];
    for (pt, class) in classes.iter().enumerate() {
        for &v in class {
            point_of[v] = pt;
        }
    }
    // line_class[a][b] = parallel class (0-based) of the line through a, b.
    let pts = q * q;
    let mut line_class = vec![usize::MAX; pts * pts];
    for (c, lines) in plane.classes().iter().enumerate() {
        for line in lines {
            for (i, &a) in line.iter().enumerate() {
                for &b in &line[i + 1..] {
                    line_class[a * pts + b] = c;
                    line_class[b * pts + a] = c;
                }
            }
        }
    }

    let colouring = ColouredCompleteGraph::new_with(n, r, |u, v| {
        let (cu, cv) = (owner[u], owner[v]);
        match (cu, cv) {
            (usize::MAX, usize::MAX) => {
                let (a, b) = (point_of[u], point_of[v]);
                if a == b {
                    1
                } else {
                    line_class[a * pts + b] + 1
                }
            }
            (usize::MAX, i) | (i, usize::MAX) => i + 1,
            (i, j) => i.min(j) + 1,
        }
    })?;

    let base = affine_base_bound(n, r, k);
    let claimed_bound = if r == 3 {
        // The bulk size n-3(k-1) decides whether one blob stays one short.
        let refined = if (n + 3) % 4 == (3 * k + 1) % 4 {
            (n - k + 2) / 2
        } else {
            (n - k + 3) / 2
        };
        base.min(refined)
    } else {
        base
    };

    let mut block_labels: Vec<String> = (1..=r).map(|i| format!("C{i}")).collect();
    block_labels.extend((0..q * q).map(|p| format!("W{}_{}", p / q, p % q)));
    let mut blocks = c_blocks;
    blocks.extend(classes);
    Ok(ConstructionReport {
        name: "affine",
        n,
        r,
        k,
        claimed_bound,
        block_labels,
        blocks,
        colouring,
    })
}

/// Colouring with no monochromatic k-connected subgraph at all, available
/// whenever n <= 2r(k-1). The vertices fall into 2r blocks of at most k-1;
/// block pairs are coloured along a Hamilton path decomposition of K_{2r},
/// so every colour graph is a blown-up path (plus cliques inside its two end
/// blocks), and a blown-up path always has a separator of at most k-1
/// vertices or a vertex of degree below k.
pub fn construct_hamzero(n: usize, r: usize, k: usize) -> Result<ConstructionReport> {
    if r < 2 {
        return Err(Error::Parameter(format!("need at least 2 colours, got {r}")));
    }
    if n < 2 {
        return Err(Error::Parameter(format!("need n >= 2, got {n}")));
    }
    if k < 2 || n > 2 * r * (k - 1) {
        return Err(Error::Parameter(format!(
            "need n <= 2r(k-1) = {}, got {n}",
            2 * r * (k - 1)
        )));
    }
    let paths = hamilton_path_decomposition(r);
    let m = 2 * r;
    // edge_colour[a][b] for block pairs, end_colour[a] for inside a block.
    let mut edge_colour = vec![0usize; m * m];
    let mut end_colour = vec![0usize; m];
    for (t, path) in paths.iter().enumerate() {
        for w in path.windows(2) {
            edge_colour[w[0] * m + w[1]] = t + 1;
            edge_colour[w[1] * m + w[0]] = t + 1;
        }
        end_colour[path[0]] = t + 1;
        end_colour[*path.last().unwrap()] = t + 1;
    }

    let blocks = blocks_larger_first(0, n, m);
    let mut block_of = vec![0usize; n];
    for (i, block) in blocks.iter().enumerate() {
        for &v in block {
            block_of[v] = i;
        }
    }
    let colouring = ColouredCompleteGraph::new_with(n, r, |u, v| {
        let (bu, bv) = (block_of[u], block_of[v]);
        if bu == bv {
            end_colour[bu]
        } else {
            edge_colour[bu * m + bv]
        }
    })?;
    Ok(ConstructionReport {
        name: "hamzero",
        n,
        r,
        k,
        claimed_bound: 0,
        block_labels: (0..m).map(|i| format!("D{i}")).collect(),
        blocks,
        colouring,
    })
}

/// Balanced colouring of K_{m,n}: the edge from left vertex i to right vertex
/// j gets colour ((i - j) mod r) + 1, so all colour classes have near-equal
/// size and every vertex sees every colour.
pub fn construct_bipartite_modular(m: usize, n: usize, r: usize) -> Result<BipartiteColouring> {
    if r < 1 {
        return Err(Error::Parameter("need at least one colour".into()));
    }
    BipartiteColouring::new_with(m, n, r, |u, v| {
        let j = v - m;
        (u + r - j % r) % r + 1
    })
}
