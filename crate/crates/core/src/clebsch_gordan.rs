//! The Clebsch-Gordan transform `Q_λ ⊗ Q_(1) → ⊕_j Q_{λ+e_j}` built by
//! recursion on `d`.
//!
//! A column `(q, i)` is computed without materializing any `U(d-1)` block:
//! the `U(d-1)` transform acts on `(q_{(d-2)}, i)` when `i < d` (the `i = d`
//! input is relabeled as the trivial branch `j' = 0`), and the reduced Wigner
//! matrix controlled by `λ` and the new `q_{d-1}` row mixes `j'` into `j`.

use std::collections::{BTreeMap, HashMap};

use ndarray::Array2;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::bases::{enumerate_gz, GzPattern};
use crate::error::{Error, Result};
use crate::partition::{add_box, add_box_padded, Partition};
use crate::wigner::coefficient;
use crate::C64;

/// One output amplitude of a CG column: the row `j` that received the box, the
/// GZ pattern of `λ + e_j`, and the coefficient.
pub type CgTerm = (usize, GzPattern, f64);

/// Applies the CG transform to the basis input `|q⟩|i⟩`, where `q` is a
/// pattern of `lambda` (padded to `d`) and `i ∈ 1..=d`.
pub fn cg_column(lambda: &[u32], q: &GzPattern, i: usize) -> Vec<CgTerm> {
    cg_column_visit(lambda, q, i, &mut |_, _| {})
}

/// Like [`cg_column`], reporting every `(μ, μ'')` pair whose reduced Wigner
/// matrix is applied, at every recursion level.
pub fn cg_column_visit(
    lambda: &[u32],
    q: &GzPattern,
    i: usize,
    visit: &mut dyn FnMut(&[u32], &[u32]),
) -> Vec<CgTerm> {
    let d = lambda.len();
    debug_assert_eq!(q.top_row(), lambda);
    debug_assert!((1..=d).contains(&i));
    if d == 1 {
        let top = vec![lambda[0] + 1];
        return vec![(1, GzPattern::from_rows_unchecked(vec![top]), 1.0)];
    }
    let mu_prime = &q.rows()[1];
    let sub = q.sub_pattern();
    let branches: Vec<CgTerm> = if i < d {
        cg_column_visit(mu_prime, &sub, i, visit)
    } else {
        vec![(0, sub, 1.0)]
    };
    let mut out = Vec::with_capacity(branches.len() * d);
    for (jp, sub_out, amp) in branches {
        visit(lambda, sub_out.top_row());
        for j in 1..=d {
            let t = coefficient(lambda, j, mu_prime, jp);
            if t != 0.0 {
                let raised = add_box_padded(lambda, j).expect("nonzero coefficient implies a valid box");
                out.push((j, GzPattern::with_top(raised, &sub_out), amp * t));
            }
        }
    }
    out
}

/// Column label of a [`CgBlock`]: a pattern of `λ` and the tensored basis
/// index `i ∈ 1..=d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CgIn {
    pub pattern: GzPattern,
    pub i: usize,
}

/// Row label of a [`CgBlock`]: the row `j` and a pattern of `λ + e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CgOut {
    pub j: usize,
    pub pattern: GzPattern,
}

/// The dense CG unitary for one `λ`.
#[derive(Clone, Debug)]
pub struct CgBlock {
    pub lambda: Partition,
    pub d: usize,
    pub matrix: Array2<C64>,
    pub cols: Vec<CgIn>,
    pub rows: Vec<CgOut>,
    col_index: HashMap<CgIn, usize>,
    row_index: HashMap<CgOut, usize>,
}

impl CgBlock {
    pub fn col_of(&self, label: &CgIn) -> Option<usize> {
        self.col_index.get(label).copied()
    }

    pub fn row_of(&self, label: &CgOut) -> Option<usize> {
        self.row_index.get(label).copied()
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    /// Row ranges of the output irreps, as `(j, start, len)`.
    pub fn output_blocks(&self) -> Vec<(usize, usize, usize)> {
        let mut blocks: Vec<(usize, usize, usize)> = Vec::new();
        for (r, label) in self.rows.iter().enumerate() {
            match blocks.last_mut() {
                Some((j, _, len)) if *j == label.j => *len += 1,
                _ => blocks.push((label.j, r, 1)),
            }
        }
        blocks
    }

    /// Largest entry of `M M† − I`.
    pub fn unitarity_residual(&self) -> f64 {
        let m = &self.matrix;
        let prod = m.dot(&m.t().mapv(|z| z.conj()));
        prod.indexed_iter()
            .map(|((r, c), z)| {
                let target = if r == c { 1.0 } else { 0.0 };
                (z - C64::new(target, 0.0)).norm()
            })
            .fold(0.0, f64::max)
    }
}

fn labels(lambda: &Partition, d: usize) -> Result<(Vec<CgIn>, Vec<CgOut>)> {
    if d == 0 || lambda.num_parts() > d {
        return Err(Error::arg(format!("{lambda} has more than {d} parts")));
    }
    let patterns = enumerate_gz(lambda, d);
    let cols: Vec<CgIn> = patterns
        .iter()
        .flat_map(|p| (1..=d).map(move |i| CgIn { pattern: p.clone(), i }))
        .collect();
    let rows: Vec<CgOut> = (1..=d)
        .filter_map(|j| add_box(lambda, j, d).map(|mu| (j, mu)))
        .flat_map(|(j, mu)| {
            enumerate_gz(&mu, d)
                .into_iter()
                .map(move |pattern| CgOut { j, pattern })
        })
        .collect();
    debug_assert_eq!(cols.len(), rows.len());
    Ok((cols, rows))
}

fn assemble(lambda: &Partition, d: usize, cols: Vec<CgIn>, rows: Vec<CgOut>, columns: Vec<Vec<CgTerm>>) -> CgBlock {
    let row_index: HashMap<CgOut, usize> = rows.iter().cloned().enumerate().map(|(k, l)| (l, k)).collect();
    let col_index: HashMap<CgIn, usize> = cols.iter().cloned().enumerate().map(|(k, l)| (l, k)).collect();
    let mut matrix = Array2::zeros((rows.len(), cols.len()));
    for (c, terms) in columns.into_iter().enumerate() {
        for (j, pattern, amp) in terms {
            let r = row_index[&CgOut { j, pattern }];
            matrix[[r, c]] = C64::new(amp, 0.0);
        }
    }
    CgBlock {
        lambda: lambda.clone(),
        d,
        matrix,
        cols,
        rows,
        col_index,
        row_index,
    }
}

/// Dense CG block for `λ`, one column at a time.
pub fn cg_block_seq(lambda: &Partition, d: usize) -> Result<CgBlock> {
    let (cols, rows) = labels(lambda, d)?;
    let top = lambda.padded(d);
    let columns = cols.iter().map(|c| cg_column(&top, &c.pattern, c.i)).collect();
    Ok(assemble(lambda, d, cols, rows, columns))
}

/// Dense CG block for `λ`, columns computed in parallel.
#[cfg(feature = "parallel")]
pub fn cg_block_par(lambda: &Partition, d: usize) -> Result<CgBlock> {
    let (cols, rows) = labels(lambda, d)?;
    let top = lambda.padded(d);
    let columns = cols.par_iter().map(|c| cg_column(&top, &c.pattern, c.i)).collect();
    Ok(assemble(lambda, d, cols, rows, columns))
}

/// Dense CG block for `λ`; parallel when the `parallel` feature is on.
pub fn cg_block(lambda: &Partition, d: usize) -> Result<CgBlock> {
    #[cfg(feature = "parallel")]
    {
        cg_block_par(lambda, d)
    }
    #[cfg(not(feature = "parallel"))]
    {
        cg_block_seq(lambda, d)
    }
}

/// Input label of [`cg_apply`]: the irrep register, a pattern of it, and the
/// tensored basis index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CgInputLabel {
    pub lambda: Partition,
    pub pattern: GzPattern,
    pub i: usize,
}

/// Output label of [`cg_apply`]: the retained input irrep `λ`, the row `j`, and
/// a pattern of `λ + e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CgOutputLabel {
    pub lambda: Partition,
    pub j: usize,
    pub pattern: GzPattern,
}

impl CgOutputLabel {
    /// The output irrep `λ + e_j`.
    pub fn raised(&self) -> Partition {
        self.pattern.top()
    }
}

/// The `λ`-controlled CG transform on a labeled state.
pub fn cg_apply(
    state: &BTreeMap<CgInputLabel, C64>,
    d: usize,
) -> Result<BTreeMap<CgOutputLabel, C64>> {
    for label in state.keys() {
        if label.pattern.d() != d || label.i == 0 || label.i > d {
            return Err(Error::arg(format!(
                "label with d={} and i={} in a d={d} state",
                label.pattern.d(),
                label.i
            )));
        }
        if label.pattern.top() != label.lambda {
            return Err(Error::arg(format!("pattern does not belong to {}", label.lambda)));
        }
    }
    let norm: f64 = state.values().map(|z| z.norm_sqr()).sum();
    if !state.is_empty() && (norm - 1.0).abs() > 1e-9 {
        log::warn!("cg_apply input has squared norm {norm}");
    }
    let mut out: BTreeMap<CgOutputLabel, C64> = BTreeMap::new();
    for (label, &amp) in state {
        if amp == C64::new(0.0, 0.0) {
            continue;
        }
        for (j, pattern, c) in cg_column(label.pattern.top_row(), &label.pattern, label.i) {
            *out.entry(CgOutputLabel {
                lambda: label.lambda.clone(),
                j,
                pattern,
            })
            .or_default() += amp * c;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{dim_q_usize, enumerate_partitions};
    use std::f64::consts::FRAC_1_SQRT_2;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn two_qubit_block() {
        let b = cg_block(&p("1"), 2).unwrap();
        assert_eq!(b.dim(), 4);
        // inputs: (q=(1), i=1) ~ |00>, (q=(1), i=2) ~ |01>, (q=(0), i=1) ~ |10>, (q=(0), i=2) ~ |11>
        let expect = [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, FRAC_1_SQRT_2, -FRAC_1_SQRT_2, 0.0],
        ];
        for (r, row) in expect.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                assert!((b.matrix[[r, c]].re - e).abs() < 1e-15, "({r},{c})");
            }
        }
        assert_eq!(b.rows[3].j, 2);
        assert_eq!(b.rows[3].pattern.top(), p("1,1"));
    }

    #[test]
    fn stretched_state_has_unit_amplitude() {
        for d in 1..=4 {
            for n in 1..=4u32 {
                let lam = Partition::row(n);
                let top = enumerate_gz(&lam, d).remove(0);
                let out = cg_column(&lam.padded(d), &top, 1);
                assert_eq!(out.len(), 1);
                assert_eq!(out[0].0, 1);
                assert_eq!(out[0].1.top(), Partition::row(n + 1));
                assert!((out[0].2 - 1.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn mixed_block_sizes() {
        let b = cg_block(&p("2,1"), 3).unwrap();
        assert_eq!(b.dim(), 24);
        let sizes: Vec<(usize, usize)> = b.output_blocks().iter().map(|&(j, _, len)| (j, len)).collect();
        assert_eq!(sizes, vec![(1, 15), (2, 6), (3, 3)]);
        assert_eq!(dim_q_usize(&p("3,1"), 3), 15);
        assert!(b.unitarity_residual() < 1e-12);
    }

    #[test]
    fn blocks_are_unitary() {
        for d in 1..=3 {
            for n in 0..=5 {
                for lam in enumerate_partitions(d, n) {
                    let b = cg_block_seq(&lam, d).unwrap();
                    assert!(b.unitarity_residual() < 1e-12, "λ={lam} d={d}");
                }
            }
        }
    }

    #[test]
    fn apply_basis_and_zero_inputs() {
        let lam = p("1");
        let q = enumerate_gz(&lam, 2).remove(0);
        let mut state = BTreeMap::new();
        state.insert(
            CgInputLabel {
                lambda: lam.clone(),
                pattern: q.clone(),
                i: 1,
            },
            C64::new(1.0, 0.0),
        );
        let out = cg_apply(&state, 2).unwrap();
        assert_eq!(out.len(), 1);
        let (label, amp) = out.iter().next().unwrap();
        assert_eq!(label.j, 1);
        assert_eq!(label.raised(), p("2"));
        assert_eq!(label.pattern.level(1), p("2"));
        assert!((amp.re - 1.0).abs() < 1e-15);

        assert!(cg_apply(&BTreeMap::new(), 2).unwrap().is_empty());

        let mut bad = BTreeMap::new();
        bad.insert(
            CgInputLabel {
                lambda: lam,
                pattern: q,
                i: 1,
            },
            C64::new(1.0, 0.0),
        );
        assert!(cg_apply(&bad, 3).is_err());
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        let a = cg_block_seq(&p("3,1"), 3).unwrap();
        let b = cg_block_par(&p("3,1"), 3).unwrap();
        assert_eq!(a.matrix, b.matrix);
        assert_eq!(a.rows, b.rows);
    }
}
