use std::collections::BTreeMap;

use ndarray::Array2;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schurkit::bases::{enumerate_gz, unrank_path, YyPath};
use schurkit::clebsch_gordan::{cg_apply, CgInputLabel};
use schurkit::oracle::{extract_irrep, extract_perm_irrep, haar_unitary, irrep_via_cg, Permutation};
use schurkit::partition::enumerate_partitions;
use schurkit::schur::{Direction, SchurTransform};
use schurkit::{schur_unitary, C64};

fn random_state(len: usize, rng: &mut ChaCha8Rng) -> Vec<C64> {
    let v: Vec<C64> = (0..len)
        .map(|_| C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
        .collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

fn max_diff(a: &Array2<C64>, b: &Array2<C64>) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Content (column minus row) of the box holding each of 1..=n.
fn contents(path: &YyPath) -> Vec<i64> {
    let mut rows = vec![1usize];
    rows.extend_from_slice(path.steps());
    let mut filled: Vec<i64> = Vec::new();
    rows.iter()
        .map(|&r| {
            if filled.len() < r {
                filled.resize(r, 0);
            }
            filled[r - 1] += 1;
            filled[r - 1] - r as i64
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cascade_round_trip(n in 1usize..=6, d in 1usize..=3, seed in any::<u64>()) {
        let t = SchurTransform::new(n, d).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_state(t.dim(), &mut rng);
        let w = t.apply(&v, Direction::Forward).unwrap();
        let back = t.apply(&w, Direction::Inverse).unwrap();
        let norm: f64 = w.iter().map(|z| z.norm_sqr()).sum();
        prop_assert!((norm - 1.0).abs() < 1e-12);
        for (a, b) in v.iter().zip(&back) {
            prop_assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn adjacent_transpositions_act_in_young_orthogonal_form(n in 2usize..=5, k in 0usize..4) {
        prop_assume!(k + 1 < n);
        let schur = schur_unitary(n, n.min(3)).unwrap();
        let s = Permutation::transposition(n, k, k + 1).unwrap();
        for lambda in enumerate_partitions(n.min(3), n) {
            let p = extract_perm_irrep(&schur, &lambda, &s).unwrap();
            let dp = p.nrows();
            for r in 0..dp {
                let c = contents(&unrank_path(&lambda, r + 1).unwrap());
                // diagonal entry is the inverse axial distance between k+1 and k+2
                let expect = 1.0 / (c[k + 1] - c[k]) as f64;
                prop_assert!((p[[r, r]].re - expect).abs() < 1e-10, "{lambda} row {r}");
                for col in 0..dp {
                    prop_assert!(p[[r, col]].im.abs() < 1e-10);
                }
            }
            let square = p.dot(&p);
            prop_assert!(max_diff(&square, &Array2::eye(dp)) < 1e-10);
        }
    }

    #[test]
    fn cg_irreps_are_representations(seed in any::<u64>(), d in 2usize..=3, size in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = haar_unitary(d, &mut rng);
        let v = haar_unitary(d, &mut rng);
        let schur = schur_unitary(size, d).unwrap();
        for lambda in enumerate_partitions(d, size) {
            let qu = irrep_via_cg(&lambda, &u).unwrap();
            let qv = irrep_via_cg(&lambda, &v).unwrap();
            let quv = irrep_via_cg(&lambda, &u.dot(&v)).unwrap();
            prop_assert!(max_diff(&quv, &qu.dot(&qv)) < 1e-10);
            let direct = extract_irrep(&schur, &lambda, &u).unwrap();
            prop_assert!(max_diff(&direct, &qu) < 1e-10, "{lambda}");
        }
    }

    #[test]
    fn cg_apply_preserves_norm(seed in any::<u64>(), d in 1usize..=3, size in 0usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut labels = Vec::new();
        for lambda in enumerate_partitions(d, size) {
            for pattern in enumerate_gz(&lambda, d) {
                for i in 1..=d {
                    labels.push(CgInputLabel { lambda: lambda.clone(), pattern: pattern.clone(), i });
                }
            }
        }
        let amps = random_state(labels.len(), &mut rng);
        let state: BTreeMap<CgInputLabel, C64> = labels.into_iter().zip(amps).collect();
        let out = cg_apply(&state, d).unwrap();
        let norm: f64 = out.values().map(|z| z.norm_sqr()).sum();
        prop_assert!((norm - 1.0).abs() < 1e-12);
        for label in out.keys() {
            prop_assert_eq!(label.raised().size(), size + 1);
        }
    }
}
