//! Two-level unitary synthesis and gate-count accounting for the cascade.
//!
//! [`two_level_decompose`] zeroes the subdiagonal column by column with
//! two-level rotations `G_k`, leaving a diagonal of phases `Φ`, so that
//! `U = G_1† ⋯ G_m† Φ`. The gate list stores `Φ` first and then the `G_k†` in
//! reverse, so replaying it left to right (each gate multiplying from the
//! left) rebuilds `U`.
//!
//! No finite gate set is targeted; every rotation is kept as an exact
//! `2 × 2` block.

use std::collections::BTreeSet;

use ndarray::Array2;
use serde::Serialize;

use crate::bases::enumerate_gz;
use crate::clebsch_gordan::cg_column_visit;
use crate::error::{Error, Result};
use crate::oracle::unitarity_residual;
use crate::partition::enumerate_partitions;
use crate::C64;

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };

/// One elementary gate.
#[derive(Clone, Debug, PartialEq)]
pub enum Gate {
    /// Acts as `block` on basis states `a < b` and as the identity elsewhere.
    Rot { a: usize, b: usize, block: [[C64; 2]; 2] },
    /// Multiplies basis state `a` by the unit number `value`.
    Phase { a: usize, value: C64 },
}

impl Gate {
    /// `M ← gate · M`.
    pub fn apply_left(&self, m: &mut Array2<C64>) {
        match *self {
            Gate::Rot { a, b, block } => {
                for c in 0..m.ncols() {
                    let (x, y) = (m[[a, c]], m[[b, c]]);
                    m[[a, c]] = block[0][0] * x + block[0][1] * y;
                    m[[b, c]] = block[1][0] * x + block[1][1] * y;
                }
            }
            Gate::Phase { a, value } => m.row_mut(a).mapv_inplace(|z| z * value),
        }
    }
}

/// An ordered gate sequence on a `size`-dimensional space.
#[derive(Clone, Debug, PartialEq)]
pub struct GateList {
    pub size: usize,
    pub gates: Vec<Gate>,
}

impl GateList {
    pub fn rotations(&self) -> usize {
        self.gates.iter().filter(|g| matches!(g, Gate::Rot { .. })).count()
    }

    pub fn phases(&self) -> usize {
        self.gates.len() - self.rotations()
    }

    /// The product of the gates, applied to the identity in list order.
    pub fn replay(&self) -> Array2<C64> {
        let mut m = Array2::eye(self.size);
        for g in &self.gates {
            g.apply_left(&mut m);
        }
        m
    }

    /// Largest entry of `replay() − u`.
    pub fn reconstruction_residual(&self, u: &Array2<C64>) -> f64 {
        self.replay()
            .iter()
            .zip(u)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Decomposes a unitary into two-level rotations and phases.
///
/// Fails if `‖U U† − I‖_max ≥ tol`.
pub fn two_level_decompose(u: &Array2<C64>, tol: f64) -> Result<GateList> {
    if !u.is_square() {
        return Err(Error::arg("matrix is not square"));
    }
    let res = unitarity_residual(u);
    if res.is_nan() || res >= tol {
        return Err(Error::arg(format!("matrix is not unitary (residual {res:e})")));
    }
    let size = u.nrows();
    let skip = (tol * 1e-3).min(1e-14);
    let mut m = u.clone();
    let mut rotations = Vec::new();
    for c in 0..size {
        for r in c + 1..size {
            let b = m[[r, c]];
            if b.norm() <= skip {
                m[[r, c]] = ZERO;
                continue;
            }
            let a = m[[c, c]];
            let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
            let block = [[a.conj() / norm, b.conj() / norm], [-b / norm, a / norm]];
            let g = Gate::Rot { a: c, b: r, block };
            g.apply_left(&mut m);
            m[[r, c]] = ZERO;
            rotations.push(g);
        }
    }
    let mut gates: Vec<Gate> = (0..size)
        .filter_map(|k| {
            let value = m[[k, k]];
            ((value - C64::new(1.0, 0.0)).norm() > skip).then(|| Gate::Phase {
                a: k,
                value: value / value.norm(),
            })
        })
        .collect();
    for g in rotations.into_iter().rev() {
        let Gate::Rot { a, b, block } = g else { unreachable!() };
        let adj = [
            [block[0][0].conj(), block[1][0].conj()],
            [block[0][1].conj(), block[1][1].conj()],
        ];
        gates.push(Gate::Rot { a, b, block: adj });
    }
    Ok(GateList { size, gates })
}

/// Controls met in one CG step.
#[derive(Clone, Debug, Serialize)]
pub struct StepCount {
    /// Number of qudits already absorbed; the step tensors in qudit `k + 1`.
    pub k: usize,
    /// Size of each controlled rotation.
    pub rotation_dim: usize,
    /// Distinct `(μ, μ'')` controls of the top-level rotations in this step.
    pub control_pairs: usize,
}

/// Per-step and overall counts of distinct controlled `d × d` rotations in
/// the cascade for `n` qudits.
#[derive(Clone, Debug, Serialize)]
pub struct GateCountReport {
    pub n: usize,
    pub d: usize,
    pub steps: Vec<StepCount>,
    /// Distinct `(μ, μ'')` pairs over the whole cascade.
    pub distinct_control_pairs: usize,
}

/// Walks every CG column of the cascade and records the `(μ, μ'')` pairs that
/// control a `d × d` reduced Wigner rotation.
pub fn gate_count_report(n: usize, d: usize) -> Result<GateCountReport> {
    if n == 0 || d == 0 {
        return Err(Error::arg("n and d must be positive"));
    }
    let mut all: BTreeSet<(Vec<u32>, Vec<u32>)> = BTreeSet::new();
    let mut steps = Vec::new();
    for k in 1..n {
        let mut pairs: BTreeSet<(Vec<u32>, Vec<u32>)> = BTreeSet::new();
        for lambda in enumerate_partitions(d, k) {
            let top = lambda.padded(d);
            for q in enumerate_gz(&lambda, d) {
                for i in 1..=d {
                    cg_column_visit(&top, &q, i, &mut |mu, mu_dprime| {
                        if mu.len() == d {
                            pairs.insert((mu.to_vec(), mu_dprime.to_vec()));
                        }
                    });
                }
            }
        }
        steps.push(StepCount {
            k,
            rotation_dim: d,
            control_pairs: pairs.len(),
        });
        all.extend(pairs);
    }
    Ok(GateCountReport {
        n,
        d,
        steps,
        distinct_control_pairs: all.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::haar_unitary;
    use crate::partition::{add_box, interlaces};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_needs_no_gates() {
        let g = two_level_decompose(&Array2::eye(5), 1e-12).unwrap();
        assert!(g.gates.is_empty());
        assert_eq!(g.replay(), Array2::eye(5));
    }

    #[test]
    fn two_by_two_is_one_rotation() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let u = haar_unitary(2, &mut rng);
        let g = two_level_decompose(&u, 1e-12).unwrap();
        assert_eq!(g.rotations(), 1);
        assert!(g.phases() <= 2);
        assert!(g.reconstruction_residual(&u) < 1e-14);
    }

    #[test]
    fn random_unitaries_replay() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for size in [3, 8, 17] {
            let u = haar_unitary(size, &mut rng);
            let g = two_level_decompose(&u, 1e-12).unwrap();
            assert!(g.rotations() <= size * (size - 1) / 2);
            assert!(g.phases() <= size);
            assert!(g.reconstruction_residual(&u) < 1e-12);
        }
    }

    #[test]
    fn rejects_non_unitary() {
        let m = Array2::from_elem((2, 2), C64::new(1.0, 0.0));
        assert!(matches!(two_level_decompose(&m, 1e-10), Err(Error::Argument(_))));
    }

    #[test]
    fn cascade_step_counts() {
        let r = gate_count_report(2, 2).unwrap();
        assert_eq!(r.steps.len(), 1);
        assert_eq!(r.steps[0].rotation_dim, 2);
        assert_eq!(r.distinct_control_pairs, 3);
        assert_eq!(gate_count_report(5, 2).unwrap().steps.len(), 4);
        assert_eq!(gate_count_report(4, 1).unwrap().distinct_control_pairs, 0);
    }

    /// `(μ, μ'')` with `μ ∈ I_{d,k}`, `k < n`, `μ' ≾ μ` and `μ'' = μ' + e_{j'}`
    /// (or `μ'` itself), enumerated directly.
    fn enumerate_pairs(n: usize, d: usize) -> usize {
        let mut set = BTreeSet::new();
        for k in 1..n {
            for mu in enumerate_partitions(d, k) {
                for m in 0..=k {
                    for mu_prime in enumerate_partitions(d - 1, m) {
                        if !interlaces(&mu_prime, &mu, d).unwrap() {
                            continue;
                        }
                        set.insert((mu.clone(), mu_prime.clone()));
                        for jp in 1..d {
                            if let Some(mdp) = add_box(&mu_prime, jp, d - 1) {
                                set.insert((mu.clone(), mdp));
                            }
                        }
                    }
                }
            }
        }
        set.len()
    }

    #[test]
    fn counts_match_direct_enumeration() {
        for d in 2..=3 {
            for n in 2..=7 {
                assert_eq!(
                    gate_count_report(n, d).unwrap().distinct_control_pairs,
                    enumerate_pairs(n, d),
                    "n={n} d={d}"
                );
            }
        }
    }
}
