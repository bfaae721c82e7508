//! Finite fields of small prime power order.
//!
//! Elements of GF(p^e) are encoded as integers in 0..p^e whose base-p digits
//! are the coefficients of a residue polynomial, low degree first. The
//! modulus is the first irreducible monic polynomial of degree e in that
//! integer encoding, so construction is deterministic. Orders stay tiny here
//! (a plane of order q needs GF(q), and q tracks the number of colours), so
//! multiplication and inversion are table lookups.

use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: usize,
    e: usize,
    q: usize,
    /// Modulus coefficients c_0..c_e, monic of degree e.
    modulus: Vec<usize>,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

const MAX_ORDER: usize = 256;

impl FiniteField {
    /// Build GF(q). Fails when q is not a prime power (or is unreasonably
    /// large for table-based arithmetic).
    pub fn new(q: usize) -> Result<FiniteField> {
        if q < 2 || q > MAX_ORDER {
            return Err(Error::Parameter(format!(
                "field order must lie in 2..={MAX_ORDER}, got {q}"
            )));
        }
        let (p, e) = prime_power_split(q).ok_or_else(|| {
            Error::Parameter(format!("field order {q} is not a prime power"))
        })?;
        let modulus = first_irreducible(p, e);
        let mut field = FiniteField {
            p,
            e,
            q,
            modulus,
            mul: vec![0; q * q],
            inv: vec![0; q],
        };
        for a in 0..q {
            for b in a..q {
                let prod = field.mul_slow(a, b);
                field.mul[a * q + b] = prod;
                field.mul[b * q + a] = prod;
                if prod == 1 {
                    field.inv[a] = b;
                    field.inv[b] = a;
                }
            }
        }
        Ok(field)
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn modulus_coefficients(&self) -> &[usize] {
        &self.modulus
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        1
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.q && b < self.q);
        let mut out = 0;
        let mut scale = 1;
        let (mut a, mut b) = (a, b);
        for _ in 0..self.e {
            out += (a % self.p + b % self.p) % self.p * scale;
            a /= self.p;
            b /= self.p;
            scale *= self.p;
        }
        out
    }

    pub fn neg(&self, a: usize) -> usize {
        debug_assert!(a < self.q);
        let mut out = 0;
        let mut scale = 1;
        let mut a = a;
        for _ in 0..self.e {
            out += (self.p - a % self.p) % self.p * scale;
            a /= self.p;
            scale *= self.p;
        }
        out
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.q && b < self.q);
        self.mul[a * self.q + b]
    }

    /// Multiplicative inverse; a must be nonzero.
    pub fn inv(&self, a: usize) -> usize {
        debug_assert!(a != 0 && a < self.q);
        self.inv[a]
    }

    fn mul_slow(&self, a: usize, b: usize) -> usize {
        let pa = to_digits(self.p, self.e, a);
        let pb = to_digits(self.p, self.e, b);
        let prod = poly_mul(self.p, &pa, &pb);
        let rem = poly_rem(self.p, prod, &self.modulus);
        from_digits(self.p, &rem)
    }
}

/// Whether q = p^e for a prime p (so GF(q) and the plane of order q exist).
pub fn is_prime_power(q: usize) -> bool {
    q >= 2 && prime_power_split(q).is_some()
}

fn prime_power_split(q: usize) -> Option<(usize, usize)> {
    let mut n = q;
    let mut p = 0;
    for d in 2.. {
        if d * d > n {
            break;
        }
        if n % d == 0 {
            p = d;
            while n % d == 0 {
                n /= d;
            }
            break;
        }
    }
    if p == 0 {
        // q itself is prime.
        return Some((q, 1));
    }
    if n != 1 {
        return None;
    }
    let mut e = 0;
    let mut m = q;
    while m > 1 {
        m /= p;
        e += 1;
    }
    Some((p, e))
}

fn to_digits(p: usize, len: usize, mut x: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = x % p;
        x /= p;
    }
    out
}

fn from_digits(p: usize, digits: &[usize]) -> usize {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn poly_mul(p: usize, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of a by the monic polynomial m, over F_p.
fn poly_rem(p: usize, mut a: Vec<usize>, m: &[usize]) -> Vec<usize> {
    let deg_m = m.len() - 1;
    while a.len() > deg_m {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - deg_m;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let idx = shift + i;
                a[idx] = (a[idx] + p - lead * c % p) % p;
            }
        }
        a.pop();
    }
    while a.len() < deg_m {
        a.push(0);
    }
    a
}

/// First monic irreducible polynomial of degree e over F_p, scanning the
/// integer encoding of the low coefficients in ascending order.
fn first_irreducible(p: usize, e: usize) -> Vec<usize> {
    if e == 1 {
        // x itself: arithmetic is plain arithmetic mod p.
        return vec![0, 1];
    }
    for code in 0..p.pow(e as u32) {
        let mut m = to_digits(p, e, code);
        m.push(1);
        if is_irreducible(p, &m) {
            return m;
        }
    }
    unreachable!("irreducible polynomials of degree {e} over F_{p} exist");
}

fn is_irreducible(p: usize, m: &[usize]) -> bool {
    let deg = m.len() - 1;
    // Trial division by every monic polynomial of degree 1..=deg/2.
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut g = to_digits(p, d, code);
            g.push(1);
            let rem = poly_rem(p, m.to_vec(), &g);
            if rem.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}
