//! Reduced Wigner coefficients for tensoring a `U(d)` irrep with the defining
//! irrep, and the `d x d` rotation they assemble into.
//!
//! With shifted weights `μ̃_t = μ_t + d − t` and `μ̃'_s = μ'_s + d − 1 − s`, the
//! coefficient for `j' ≥ 1` is
//!
//! ```text
//! sign · sqrt( ∏_{s≠j'} (μ̃_j − μ̃'_s) · ∏_{t≠j} (μ̃'_{j'} − μ̃_t + 1)
//!            / ∏_{t≠j} (μ̃_j − μ̃_t)   · ∏_{s≠j'} (μ̃'_{j'} − μ̃'_s + 1) )
//! ```
//!
//! (`s` over `[d−1]`, `t` over `[d]`), and for the trivial branch `j' = 0`
//!
//! ```text
//! sqrt( ∏_{s} (μ̃_j − μ̃'_s) / ∏_{t≠j} (μ̃_j − μ̃_t) ).
//! ```
//!
//! The sign is `+1` when `j' ≥ j` or `j' = 0`, and `−1` otherwise. This is the
//! convention under which the recursively built CG transforms reproduce the
//! standard GZ basis at every level.

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::partition::{add_box_padded, interlaces_padded, Partition};

/// Arguments of a single reduced Wigner coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWignerQuery {
    /// The `U(d)` irrep being tensored, at most `d` parts.
    pub mu: Partition,
    /// Row receiving the new box, `1..=d`.
    pub j: usize,
    /// The `U(d-1)` irrep of the input, at most `d-1` parts.
    pub mu_prime: Partition,
    /// Row receiving the `U(d-1)` box, `0..d`; zero is the trivial branch.
    pub j_prime: usize,
    pub d: usize,
}

impl ReducedWignerQuery {
    pub fn new(mu: Partition, j: usize, mu_prime: Partition, j_prime: usize, d: usize) -> Result<Self> {
        if d == 0 || j == 0 || j > d || j_prime >= d {
            return Err(Error::arg(format!("indices j={j}, j'={j_prime} invalid for d={d}")));
        }
        if mu.num_parts() > d || mu_prime.num_parts() > d - 1 {
            return Err(Error::arg("too many parts for d"));
        }
        Ok(ReducedWignerQuery {
            mu,
            j,
            mu_prime,
            j_prime,
            d,
        })
    }
}

/// Evaluates a query; couplings that are not allowed evaluate to exactly 0.
pub fn reduced_wigner(q: &ReducedWignerQuery) -> f64 {
    coefficient(&q.mu.padded(q.d), q.j, &q.mu_prime.padded(q.d - 1), q.j_prime)
}

/// Slice form: `mu` has length `d`, `mu_prime` length `d − 1`.
pub(crate) fn coefficient(mu: &[u32], j: usize, mu_prime: &[u32], jp: usize) -> f64 {
    let d = mu.len();
    debug_assert_eq!(mu_prime.len() + 1, d);
    let Some(raised) = add_box_padded(mu, j) else {
        return 0.0;
    };
    if !interlaces_padded(mu_prime, mu) {
        return 0.0;
    }
    let raised_prime = if jp == 0 {
        mu_prime.to_vec()
    } else {
        match add_box_padded(mu_prime, jp) {
            Some(v) => v,
            None => return 0.0,
        }
    };
    if !interlaces_padded(&raised_prime, &raised) {
        return 0.0;
    }

    let shifted: Vec<i64> = mu
        .iter()
        .enumerate()
        .map(|(t, &m)| m as i64 + (d - 1 - t) as i64)
        .collect();
    let shifted_prime: Vec<i64> = mu_prime
        .iter()
        .enumerate()
        .map(|(s, &m)| m as i64 + (d - 2 - s) as i64)
        .collect();
    let jj = j - 1;

    let mut num: Vec<i64> = Vec::with_capacity(2 * d);
    let mut den: Vec<i64> = Vec::with_capacity(2 * d);
    if jp == 0 {
        for &sp in &shifted_prime {
            num.push(shifted[jj] - sp);
        }
        for (t, &st) in shifted.iter().enumerate() {
            if t != jj {
                den.push(shifted[jj] - st);
            }
        }
    } else {
        let jjp = jp - 1;
        for (s, &sp) in shifted_prime.iter().enumerate() {
            if s != jjp {
                num.push(shifted[jj] - sp);
                den.push(shifted_prime[jjp] - sp + 1);
            }
        }
        for (t, &st) in shifted.iter().enumerate() {
            if t != jj {
                num.push(shifted_prime[jjp] - st + 1);
                den.push(shifted[jj] - st);
            }
        }
    }
    assert!(den.iter().all(|&x| x != 0), "vanishing denominator for an allowed coupling");
    if num.contains(&0) {
        return 0.0;
    }
    let negative = num.iter().chain(&den).filter(|&&x| x < 0).count();
    assert!(
        negative % 2 == 0,
        "negative radicand for μ={mu:?} j={j} μ'={mu_prime:?} j'={jp}"
    );
    // factor by factor, so that large d cannot overflow
    let ratio: f64 = num
        .iter()
        .zip(&den)
        .map(|(&a, &b)| (a as f64 / b as f64).abs())
        .product();
    let magnitude = ratio.sqrt();
    if jp == 0 || jp >= j {
        magnitude
    } else {
        -magnitude
    }
}

/// The `d x d` matrix `T̂_{μ,μ''}`: entry `(j−1, j')` couples input branch
/// `j'` (coming from `μ'' − e_{j'}`, or from `μ''` itself when `j' = 0`) to the
/// output row `j`.
pub fn reduced_wigner_matrix(mu: &Partition, mu_dprime: &Partition, d: usize) -> Result<Array2<f64>> {
    if d == 0 || mu.num_parts() > d || mu_dprime.num_parts() > d - 1 {
        return Err(Error::arg(format!("{mu} / {mu_dprime} incompatible with d={d}")));
    }
    Ok(matrix_padded(&mu.padded(d), &mu_dprime.padded(d - 1)))
}

pub(crate) fn matrix_padded(mu: &[u32], mu_dprime: &[u32]) -> Array2<f64> {
    let d = mu.len();
    let mut m = Array2::zeros((d, d));
    for jp in 0..d {
        let source = if jp == 0 {
            Some(mu_dprime.to_vec())
        } else if mu_dprime[jp - 1] > 0 {
            let mut v = mu_dprime.to_vec();
            v[jp - 1] -= 1;
            Some(v).filter(|v| v.windows(2).all(|w| w[0] >= w[1]))
        } else {
            None
        };
        let Some(source) = source else { continue };
        for j in 1..=d {
            m[[j - 1, jp]] = coefficient(mu, j, &source, jp);
        }
    }
    m
}
