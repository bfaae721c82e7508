//! The affine plane of order q, coordinatised by GF(q).
//!
//! Points are pairs (x, y) of field elements, encoded as x*q + y so the
//! natural integer order is lexicographic in the coordinates. Lines come in
//! q+1 parallel classes: slope s for each field element s (the lines
//! y = s*x + b), followed by the vertical class (the lines x = a). Each class
//! partitions the q^2 points into q lines of q points.

use super::FiniteField;
use crate::Result;

#[derive(Clone, Debug)]
pub struct AffinePlane {
    q: usize,
    /// classes[c][b] lists the points of the b-th line of class c, ascending.
    classes: Vec<Vec<Vec<usize>>>,
}

impl AffinePlane {
    /// Build the plane of order q; q must be a prime power.
    pub fn new(q: usize) -> Result<AffinePlane> {
        let f = FiniteField::new(q)?;
        let mut classes = Vec::with_capacity(q + 1);
        for s in 0..q {
            let mut lines = Vec::with_capacity(q);
            for b in 0..q {
                let mut line: Vec<usize> = (0..q)
                    .map(|x| x * q + f.add(f.mul(s, x), b))
                    .collect();
                line.sort_unstable();
                lines.push(line);
            }
            classes.push(lines);
        }
        let vertical = (0..q).map(|a| (0..q).map(|y| a * q + y).collect()).collect();
        classes.push(vertical);
        Ok(AffinePlane { q, classes })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn point_count(&self) -> usize {
        self.q * self.q
    }

    pub fn class_count(&self) -> usize {
        self.q + 1
    }

    pub fn classes(&self) -> &[Vec<Vec<usize>>] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &[Vec<usize>] {
        &self.classes[c]
    }
}
