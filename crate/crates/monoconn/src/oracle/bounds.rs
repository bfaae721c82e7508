//! Closed-form bounds on the minimum, over r-colourings of K_n, of the
//! largest k-connected subgraph on at most s colours. Lower bounds come from
//! extraction theorems, upper bounds from the explicit constructions; the
//! row reports the best of each with its source and flags exact matches.
//! Conjectured values are listed separately and never influence the bounds.

use serde::Serialize;

use crate::algebra::is_prime_power;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: usize,
    pub source: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundsRow {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub k: usize,
    pub lower: Bound,
    pub upper: Bound,
    pub exact: bool,
    pub conjectures: Vec<Bound>,
}

fn ceil_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    (a + b - 1).div_euclid(b)
}

/// The exact three-colour value for n >= 480k, split by residue.
fn three_colour_exact(n: i128, k: i128) -> i128 {
    match (n + k).rem_euclid(4) {
        1 => (n - k + 1) / 2,
        0 | 2 => (n - k + 2) / 2,
        _ => (n - k + 3) / 2,
    }
}

/// The bound claimed by the affine construction at r colours, including the
/// sharper three-colour form. Assumes r-1 is a prime power and n >= r(k-1).
fn affine_bound(n: i128, r: i128, k: i128) -> i128 {
    let q = r - 1;
    let w = n - r * (k - 1);
    let base = q * ceil_div(w, q * q) + (k - 1);
    if r == 3 {
        let refined = if w.rem_euclid(4) == 1 {
            (n - k + 2) / 2
        } else {
            (n - k + 3).div_euclid(2)
        };
        base.min(refined)
    } else {
        base
    }
}

/// Whether the exact two-colour theorem applies at (n, k): either the plain
/// threshold or, for large k, the relaxed quadratic one.
fn two_colour_exact_applies(n: i128, k: i128) -> bool {
    if n >= 13 * k - 15 {
        return true;
    }
    k >= 18 && n >= 9 * k && (n - 9 * k) * (n - 9 * k) >= 10 * k * k
}

pub fn theorem_bounds(n: usize, r: usize, s: usize, k: usize) -> Result<BoundsRow> {
    if n < 2 {
        return Err(Error::Parameter(format!("need n >= 2, got {n}")));
    }
    if r < 2 {
        return Err(Error::Parameter(format!("need r >= 2, got {r}")));
    }
    if s < 1 || k < 1 {
        return Err(Error::Parameter(format!(
            "need s >= 1 and k >= 1, got s={s}, k={k}"
        )));
    }
    let (ni, ri, ki) = (n as i128, r as i128, k as i128);

    // Candidate lower bounds. These hold for every colour budget because a
    // one-colour witness stays a witness when more colours are allowed.
    let mut lowers: Vec<(i128, String)> = Vec::new();
    if r == 2 && two_colour_exact_applies(ni, ki) {
        lowers.push((ni - 2 * ki + 2, "two-colour threshold".into()));
    }
    if r == 2 {
        match k {
            1 => lowers.push((ni, "two-colour small cases".into())),
            2 if n >= 5 => lowers.push((ni - 2, "two-colour small cases".into())),
            3 if n >= 9 => lowers.push((ni - 4, "two-colour small cases".into())),
            _ => {}
        }
    }
    if k == 1 {
        lowers.push((ceil_div(ni, ri - 1), "largest monochromatic component".into()));
    }
    if k >= 2 {
        lowers.push((
            ceil_div(ni, ri - 1) - 11 * (ki * ki - ki) * ri,
            "multicolour extraction".into(),
        ));
        if ni >= 44 * ki * ki * ri * ri {
            lowers.push((
                ceil_div(ni, ri - 1) - 2 * ki * ki * ri,
                "multicolour extraction, dense range".into(),
            ));
        }
    }
    if r == 3 && ni >= 480 * ki {
        lowers.push((three_colour_exact(ni, ki), "three-colour exact".into()));
    }

    // Candidate upper bounds; constructions only control the one-colour
    // quantity, so beyond s = 1 just the unconditional rows survive.
    let mut uppers: Vec<(i128, String)> = vec![(ni, "whole host".into())];
    if n < k + 1 {
        uppers.push((0, "order below k+1".into()));
    }
    if s == 1 {
        if k >= 2 && ni <= 2 * ri * (ki - 1) {
            uppers.push((0, "path blow-up colouring".into()));
        }
        if r == 2 && two_colour_exact_applies(ni, ki) {
            uppers.push((ni - 2 * ki + 2, "two-colour threshold".into()));
        }
        if r == 2 {
            match k {
                1 => uppers.push((ni, "two-colour small cases".into())),
                2 if n >= 5 => uppers.push((ni - 2, "two-colour small cases".into())),
                3 if n >= 9 => uppers.push((ni - 4, "two-colour small cases".into())),
                _ => {}
            }
        }
        if r == 3 && ni >= 480 * ki {
            uppers.push((three_colour_exact(ni, ki), "three-colour exact".into()));
        }
        if ni >= 4 * ki - 3 {
            uppers.push((ni - 2 * ki + 2, "two-colour block construction".into()));
        }
        if let Some(rp) = (3..=r)
            .rev()
            .find(|&rp| is_prime_power(rp - 1) && n >= rp * (k - 1))
        {
            let source = if rp == r {
                format!("affine construction at {rp} colours")
            } else {
                format!("affine construction at {rp} of {r} colours")
            };
            uppers.push((affine_bound(ni, rp as i128, ki), source));
        }
    }

    let lower = lowers
        .into_iter()
        .filter(|&(v, _)| v > 0)
        .max_by_key(|&(v, _)| v)
        .map(|(v, source)| Bound { value: v as usize, source })
        .unwrap_or(Bound { value: 0, source: "trivial".into() });
    let (uv, usrc) = uppers
        .into_iter()
        .min_by_key(|&(v, _)| v)
        .unwrap();
    let upper = Bound { value: uv.max(0) as usize, source: usrc };
    if lower.value > upper.value {
        return Err(Error::Internal(format!(
            "bound tables disagree at (n={n}, r={r}, s={s}, k={k}): {} ({}) > {} ({})",
            lower.value, lower.source, upper.value, upper.source
        )));
    }

    let mut conjectures = Vec::new();
    if s == 1 && r >= 3 && is_prime_power(r - 1) && n >= r * (k - 1) {
        let w = ni - ri * (ki - 1);
        if w.rem_euclid((ri - 1) * (ri - 1)) == 0 {
            conjectures.push(Bound {
                value: (w / (ri - 1) + ki - 1) as usize,
                source: "conjectured exact for uniform affine classes".into(),
            });
        }
    }
    if s == 1 && r == 3 && ni >= 6 * ki - 5 && ni < 480 * ki {
        conjectures.push(Bound {
            value: three_colour_exact(ni, ki) as usize,
            source: "conjectured three-colour exact range".into(),
        });
    }

    let exact = lower.value == upper.value;
    Ok(BoundsRow { n, r, s, k, lower, upper, exact, conjectures })
}
