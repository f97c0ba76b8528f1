//! Residual checks of the Schur and CG transforms against the oracles.

use std::collections::HashMap;
use std::fmt;

use std::ops::Range;

use ndarray::{Array2, ArrayView2, ShapeBuilder};
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bases::GzPattern;
use crate::clebsch_gordan::{cg_block, CgBlock, CgIn, CgOut};
use crate::error::{Error, Result};
use crate::oracle::{
    eigenvalues, haar_unitary, permute_index, random_permutation,
    schur_polynomial, tensor_power_columns, Permutation, MAX_ORACLE_DIM,
};
use crate::partition::{enumerate_partitions, Partition};
use crate::schur::{checked_dim, Direction, IrrepBlock, SchurTransform, TILE_ENTRIES};
use crate::wigner::coefficient;
use crate::C64;

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
const ONE: C64 = C64 { re: 1.0, im: 0.0 };

/// Computes `U_Sch X U_Sch†` for `X = U^{⊗n} P(s)` through the sparse cascade.
pub struct Conjugator {
    transform: SchurTransform,
    /// `U_Sch`, which is real.
    rows: Vec<Vec<(usize, f64)>>,
    nnz: usize,
    /// Block index of every row.
    owner: Vec<usize>,
}

/// The diagonal `λ` blocks of a conjugated operator and the Frobenius norm of
/// everything outside them.
#[derive(Clone, Debug)]
pub struct BlockParts {
    pub off_mass: f64,
    /// The blocks one after another, each column-major.
    data: Vec<C64>,
    /// `(start, dim_q, dim_p)` of each block in `data`.
    layout: Vec<(usize, usize, usize)>,
}

impl BlockParts {
    fn empty(blocks: &[IrrepBlock]) -> Self {
        let mut start = 0;
        let layout = blocks
            .iter()
            .map(|b| {
                let entry = (start, b.dim_q, b.dim_p);
                start += b.len() * b.len();
                entry
            })
            .collect();
        BlockParts {
            off_mass: 0.0,
            data: vec![ZERO; start],
            layout,
        }
    }

    /// Cuts a dense operator along `blocks`.
    pub fn from_dense(c: &Array2<C64>, blocks: &[IrrepBlock]) -> Self {
        let mut parts = BlockParts::empty(blocks);
        parts.off_mass = off_block_mass(c, blocks);
        let mut at = 0;
        for b in blocks {
            let r = b.offset..b.offset + b.len();
            for col in r.clone() {
                for row in r.clone() {
                    parts.data[at] = c[[row, col]];
                    at += 1;
                }
            }
        }
        parts
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.layout.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layout.is_empty()
    }

    /// Block `k` as a matrix.
    pub fn block(&self, k: usize) -> ArrayView2<'_, C64> {
        let (len, data) = self.raw(k);
        ArrayView2::from_shape((len, len).f(), data).expect("block shape")
    }

    /// Side of block `k` and its transpose in row-major order.
    fn raw(&self, k: usize) -> (usize, &[C64]) {
        let (start, dq, dp) = self.layout[k];
        let len = dq * dp;
        (len, &self.data[start..start + len * len])
    }

    /// Largest deviation of any block from a product `A ⊗ B` over the
    /// `(q, p)` split.
    pub fn factorization_residual(&self) -> f64 {
        // both checks are unchanged by transposition, so they run on the
        // stored transposes directly
        (0..self.len())
            .map(|k| {
                let (_, dq, dp) = self.layout[k];
                block_factorization(self.raw(k).1, dq, dp)
            })
            .fold(0.0, f64::max)
    }

    /// Largest deviation of any block from the form `I ⊗ B`.
    pub fn q_dependence(&self) -> f64 {
        (0..self.len())
            .map(|k| {
                let (_, dq, dp) = self.layout[k];
                block_q_dependence(self.raw(k).1, dq, dp)
            })
            .fold(0.0, f64::max)
    }

    /// Largest `|tr q_λ(U) − s_λ(eig U)|`, for the parts of
    /// `U_Sch U^{⊗n} U_Sch†` cut along `blocks`.
    pub fn character_residual(&self, blocks: &[IrrepBlock], u: &Array2<C64>) -> f64 {
        let ev = eigenvalues(u);
        blocks
            .iter()
            .enumerate()
            .map(|(k, b)| {
                let m = self.block(k);
                let trace: C64 = (0..b.dim_q).map(|q| m[[q * b.dim_p, q * b.dim_p]]).sum();
                (trace - schur_polynomial(&b.lambda, &ev)).norm()
            })
            .fold(0.0, f64::max)
    }
}

impl Conjugator {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        let dim = checked_dim(n, d, MAX_ORACLE_DIM, "conjugation check")?;
        let transform = SchurTransform::new(n, d)?;
        // column l of U_Sch† is row l of U_Sch
        let mut rows = vec![Vec::new(); dim];
        for r in tiles(dim) {
            let w = r.len();
            let mut tile = vec![ZERO; dim * w];
            for c in 0..w {
                tile[(r.start + c) * w + c] = ONE;
            }
            let out = transform.apply_columns(&tile, w, Direction::Inverse)?;
            for (x, line) in out.chunks(w).enumerate() {
                for (c, z) in line.iter().enumerate() {
                    if z.re != 0.0 {
                        rows[r.start + c].push((x, z.re));
                    }
                }
            }
        }
        let nnz = rows.iter().map(Vec::len).sum();
        let mut owner = vec![0; dim];
        for (k, b) in transform.blocks().iter().enumerate() {
            owner[b.offset..b.offset + b.len()].fill(k);
        }
        Ok(Conjugator {
            transform,
            rows,
            nnz,
            owner,
        })
    }

    pub fn transform(&self) -> &SchurTransform {
        &self.transform
    }

    pub fn blocks(&self) -> &[IrrepBlock] {
        self.transform.blocks()
    }

    fn check(&self, u: Option<&Array2<C64>>, s: &Permutation) -> Result<()> {
        if u.is_some_and(|u| u.nrows() != self.transform.d() || !u.is_square()) {
            return Err(Error::arg("U has the wrong size"));
        }
        if s.len() != self.transform.n() {
            return Err(Error::arg("permutation has the wrong length"));
        }
        Ok(())
    }

    /// Fills `ws.tile` with columns `r` of `U_Sch U^{⊗n} P(s) U_Sch†`,
    /// row-major. Sparse columns of `U_Sch†` are expanded into product
    /// states when that is cheaper than one pass per tensor factor.
    fn fill_rotated(&self, u: &Array2<C64>, s: &Permutation, r: &Range<usize>, ws: &mut Workspace) {
        let n = self.transform.n();
        let d = self.transform.d();
        let dim = self.transform.dim();
        let w = r.len();
        ws.tile.resize(dim * w, ZERO);
        if 2 * self.nnz <= n * d * dim {
            ws.prod.resize(dim, ZERO);
            ws.prod_scratch.resize(dim, ZERO);
            ws.column.resize(dim, ZERO);
            for (c, l) in r.clone().enumerate() {
                for (k, &(x, v)) in self.rows[l].iter().enumerate() {
                    product_state(u, permute_index(s, x, d), n, &mut ws.prod, &mut ws.prod_scratch);
                    if k == 0 {
                        for (t, p) in ws.column.iter_mut().zip(&ws.prod) {
                            *t = p * v;
                        }
                    } else {
                        for (t, p) in ws.column.iter_mut().zip(&ws.prod) {
                            *t += p * v;
                        }
                    }
                }
                for (t, z) in ws.tile[c..].iter_mut().step_by(w).zip(&ws.column) {
                    *t = *z;
                }
            }
        } else {
            ws.tile.fill(ZERO);
            for (c, l) in r.clone().enumerate() {
                for &(x, v) in &self.rows[l] {
                    ws.tile[permute_index(s, x, d) * w + c] = C64::new(v, 0.0);
                }
            }
            tensor_power_columns(u, n, &mut ws.tile, &mut ws.scratch, w);
        }
        self.transform
            .apply_columns_in_place(&mut ws.tile, &mut ws.scratch, w, Direction::Forward)
            .expect("tile has the right shape");
    }

    /// Fills `ws.real` with columns `r` of `U_Sch P(s) U_Sch†`, which is real.
    fn fill_permuted(&self, s: &Permutation, r: &Range<usize>, ws: &mut Workspace) {
        let d = self.transform.d();
        let w = r.len();
        ws.real.clear();
        ws.real.resize(self.transform.dim() * w, 0.0);
        for (c, l) in r.clone().enumerate() {
            for &(x, v) in &self.rows[l] {
                ws.real[permute_index(s, x, d) * w + c] = v;
            }
        }
        self.transform
            .apply_columns_in_place(&mut ws.real, &mut ws.real_scratch, w, Direction::Forward)
            .expect("tile has the right shape");
    }

    /// Off-block mass of columns `r`; their in-block segments go to `diag`.
    fn conjugate_tile(
        &self,
        u: Option<&Array2<C64>>,
        s: &Permutation,
        r: &Range<usize>,
        ws: &mut Workspace,
        diag: &mut [C64],
    ) -> f64 {
        match u {
            Some(u) => {
                self.fill_rotated(u, s, r, ws);
                self.summarize(&ws.tile, r, diag)
            }
            None => {
                self.fill_permuted(s, r, ws);
                self.summarize(&ws.real, r, diag)
            }
        }
    }

    fn summarize<T: Copy + Into<C64>>(&self, out: &[T], r: &Range<usize>, diag: &mut [C64]) -> f64 {
        let w = r.len();
        let blocks = self.blocks();
        let cols = &self.owner[r.clone()];
        let mut off = 0.0;
        for (x, line) in out.chunks(w).enumerate() {
            let ox = self.owner[x];
            for (&z, &oc) in line.iter().zip(cols) {
                if oc != ox {
                    off += z.into().norm_sqr();
                }
            }
        }
        let mut rest = diag;
        for (c, &oc) in cols.iter().enumerate() {
            let b = &blocks[oc];
            let (seg, tail) = rest.split_at_mut(b.len());
            for (t, x) in seg.iter_mut().zip(b.offset..) {
                *t = out[x * w + c].into();
            }
            rest = tail;
        }
        off
    }

    fn parts(&self, u: Option<&Array2<C64>>, s: &Permutation, parts: &mut BlockParts) -> Result<()> {
        self.check(u, s)?;
        let blocks = self.blocks();
        let spans = tiles(self.transform.dim());
        if parts.data.len() != self.parts_len() || parts.layout.len() != blocks.len() {
            *parts = self.empty_parts();
        }
        // columns are stored in order, so each tile owns one contiguous run
        let mut runs = Vec::with_capacity(spans.len());
        let mut rest = &mut parts.data[..];
        for r in &spans {
            let size = r.clone().map(|l| blocks[self.owner[l]].len()).sum();
            let (head, tail) = rest.split_at_mut(size);
            runs.push(head);
            rest = tail;
        }
        #[cfg(feature = "parallel")]
        let masses: Vec<f64> = spans
            .par_iter()
            .zip(runs)
            .map_init(Workspace::default, |ws, (r, diag)| self.conjugate_tile(u, s, r, ws, diag))
            .collect();
        #[cfg(not(feature = "parallel"))]
        let masses: Vec<f64> = {
            let mut ws = Workspace::default();
            spans
                .iter()
                .zip(runs)
                .map(|(r, diag)| self.conjugate_tile(u, s, r, &mut ws, diag))
                .collect()
        };
        parts.off_mass = masses.iter().sum::<f64>().sqrt();
        Ok(())
    }

    fn parts_len(&self) -> usize {
        self.blocks().iter().map(|b| b.len() * b.len()).sum()
    }

    /// Zeroed storage for the blocks of this transform, for the `_into`
    /// variants.
    pub fn empty_parts(&self) -> BlockParts {
        BlockParts::empty(self.blocks())
    }

    /// Blocks of `U_Sch U^{⊗n} P(s) U_Sch†`, without forming the whole matrix.
    pub fn conjugate_parts(&self, u: &Array2<C64>, s: &Permutation) -> Result<BlockParts> {
        let mut parts = self.empty_parts();
        self.parts(Some(u), s, &mut parts)?;
        Ok(parts)
    }

    /// Blocks of `U_Sch P(s) U_Sch†`.
    pub fn conjugate_perm_parts(&self, s: &Permutation) -> Result<BlockParts> {
        let mut parts = self.empty_parts();
        self.parts(None, s, &mut parts)?;
        Ok(parts)
    }

    /// [`conjugate_parts`](Self::conjugate_parts), reusing `out`'s storage.
    pub fn conjugate_parts_into(&self, u: &Array2<C64>, s: &Permutation, out: &mut BlockParts) -> Result<()> {
        self.parts(Some(u), s, out)
    }

    /// [`conjugate_perm_parts`](Self::conjugate_perm_parts), reusing `out`'s
    /// storage.
    pub fn conjugate_perm_parts_into(&self, s: &Permutation, out: &mut BlockParts) -> Result<()> {
        self.parts(None, s, out)
    }

    fn dense(&self, u: Option<&Array2<C64>>, s: &Permutation) -> Result<Array2<C64>> {
        self.check(u, s)?;
        let dim = self.transform.dim();
        let mut out = Array2::zeros((dim, dim));
        let mut ws = Workspace::default();
        for r in tiles(dim) {
            let w = r.len();
            let mut target = out.slice_mut(ndarray::s![.., r.clone()]);
            match u {
                Some(u) => {
                    self.fill_rotated(u, s, &r, &mut ws);
                    target.assign(&ArrayView2::from_shape((dim, w), &ws.tile).expect("tile shape"));
                }
                None => {
                    self.fill_permuted(s, &r, &mut ws);
                    let view = ArrayView2::from_shape((dim, w), &ws.real).expect("tile shape");
                    target.zip_mut_with(&view, |t, &v| *t = C64::new(v, 0.0));
                }
            }
        }
        Ok(out)
    }

    /// `U_Sch U^{⊗n} P(s) U_Sch†`.
    pub fn conjugate(&self, u: &Array2<C64>, s: &Permutation) -> Result<Array2<C64>> {
        self.dense(Some(u), s)
    }

    /// `U_Sch P(s) U_Sch†`.
    pub fn conjugate_perm(&self, s: &Permutation) -> Result<Array2<C64>> {
        self.dense(None, s)
    }

    /// Largest entry of `U_Sch U_Sch† − I`, with `U_Sch†` from the inverse
    /// cascade.
    pub fn unitarity_residual(&self) -> f64 {
        let dim = self.transform.dim();
        let inv = self
            .transform
            .apply_batch(&Array2::eye(dim), Direction::Inverse)
            .expect("square identity");
        let back = self
            .transform
            .apply_batch(&inv, Direction::Forward)
            .expect("square matrix");
        let mut worst: f64 = 0.0;
        for ((r, c), z) in back.indexed_iter() {
            let target = if r == c { 1.0 } else { 0.0 };
            worst = worst.max((z - C64::new(target, 0.0)).norm());
        }
        // the sparse rows must agree with the forward cascade
        let dense = self.transform.dense();
        let mut line = vec![0.0; dim];
        for (l, row) in self.rows.iter().enumerate() {
            line.fill(0.0);
            for &(x, v) in row {
                line[x] = v;
            }
            for (z, v) in dense.row(l).iter().zip(&line) {
                worst = worst.max((z - C64::new(*v, 0.0)).norm());
            }
        }
        worst
    }
}

/// Buffers reused from one tile to the next.
#[derive(Default)]
struct Workspace {
    tile: Vec<C64>,
    scratch: Vec<C64>,
    prod: Vec<C64>,
    prod_scratch: Vec<C64>,
    column: Vec<C64>,
    real: Vec<f64>,
    real_scratch: Vec<f64>,
}

/// Column ranges of about [`TILE_ENTRIES`] amplitudes each.
fn tiles(dim: usize) -> Vec<Range<usize>> {
    let width = (TILE_ENTRIES / dim).clamp(1, dim);
    (0..dim).step_by(width).map(|c| c..(c + width).min(dim)).collect()
}

/// `⊗_k U[:, y_k]` for the base-`d` digits of `y`.
fn product_state(u: &Array2<C64>, y: usize, n: usize, out: &mut [C64], scratch: &mut [C64]) {
    let d = u.nrows();
    out[0] = ONE;
    let mut len = 1;
    for k in 0..n {
        let digit = (y / d.pow((n - k - 1) as u32)) % d;
        scratch[..len].copy_from_slice(&out[..len]);
        for a in 0..d {
            let c = u[[a, digit]];
            for (o, x) in out[a..].iter_mut().step_by(d).zip(&scratch[..len]) {
                *o = x * c;
            }
        }
        len *= d;
    }
}

/// Frobenius norm of everything outside the diagonal `λ` blocks.
pub fn off_block_mass(c: &Array2<C64>, blocks: &[IrrepBlock]) -> f64 {
    let mut owner = vec![0usize; c.nrows()];
    for (k, b) in blocks.iter().enumerate() {
        owner[b.offset..b.offset + b.len()].fill(k);
    }
    let mut mass = 0.0;
    for ((r, col), z) in c.indexed_iter() {
        if owner[r] != owner[col] {
            mass += z.norm_sqr();
        }
    }
    mass.sqrt()
}

/// Largest deviation of any `λ` block from a product `A ⊗ B` over the
/// `(q, p)` split, measured against the rank-one fit through the largest
/// entry.
pub fn factorization_residual(c: &Array2<C64>, blocks: &[IrrepBlock]) -> f64 {
    BlockParts::from_dense(c, blocks).factorization_residual()
}

/// Rank-one fit residual of a row-major `(q p) × (q' p')` block, reshaped as
/// `R[(q, q'), (p, p')]`, through its largest entry.
fn block_factorization(a: &[C64], dq: usize, dp: usize) -> f64 {
    if dq == 1 || dp == 1 {
        // R is a single row or column, so always rank one
        return 0.0;
    }
    let len = dq * dp;
    let mut pivot = 0;
    let mut best = -1.0;
    for (k, z) in a.iter().enumerate() {
        let v = z.norm_sqr();
        if v > best {
            best = v;
            pivot = k;
        }
    }
    let (row, col) = (pivot / len, pivot % len);
    let (aq, bp, aqq, bpp) = (row / dp, row % dp, col / dp, col % dp);
    let scale = a[pivot];
    let left: Vec<C64> = (0..dq * dq)
        .map(|k| a[((k / dq) * dp + bp) * len + (k % dq) * dp + bpp] / scale)
        .collect();
    let right: Vec<C64> = (0..dp * dp)
        .map(|k| a[(aq * dp + k / dp) * len + aqq * dp + k % dp])
        .collect();
    let mut worst: f64 = 0.0;
    for (r, line) in a.chunks_exact(len).enumerate() {
        let (q, p) = (r / dp, r % dp);
        let left = &left[q * dq..(q + 1) * dq];
        let right = &right[p * dp..(p + 1) * dp];
        for (seg, l) in line.chunks_exact(dp).zip(left) {
            for (z, b) in seg.iter().zip(right) {
                worst = worst.max((z - l * b).norm_sqr());
            }
        }
    }
    worst.sqrt()
}

/// Largest deviation of any `λ` block from the form `I ⊗ B`.
pub fn q_dependence(c: &Array2<C64>, blocks: &[IrrepBlock]) -> f64 {
    BlockParts::from_dense(c, blocks).q_dependence()
}

/// Distance of a row-major `(q p) × (q' p')` block from the form `I ⊗ B`.
fn block_q_dependence(a: &[C64], dq: usize, dp: usize) -> f64 {
    let len = dq * dp;
    let mut worst: f64 = 0.0;
    for (r, line) in a.chunks(len).enumerate() {
        let (q, p) = (r / dp, r % dp);
        // the q = 0 copy of row p
        let reference = &a[p * len..p * len + dp];
        for (qq, seg) in line.chunks(dp).enumerate() {
            if qq == q {
                for (z, e) in seg.iter().zip(reference) {
                    worst = worst.max((z - e).norm_sqr());
                }
            } else {
                for z in seg {
                    worst = worst.max(z.norm_sqr());
                }
            }
        }
    }
    worst.sqrt()
}

/// Largest `|tr q_λ(U) − s_λ(eig U)|` over the blocks of `U_Sch U^{⊗n} U_Sch†`.
pub fn character_residual(c: &Array2<C64>, blocks: &[IrrepBlock], u: &Array2<C64>) -> f64 {
    BlockParts::from_dense(c, blocks).character_residual(blocks, u)
}

/// For `U_CG^{[d]}(λ)`, the largest deviation of an entry from
/// `reduced_wigner · U_CG^{[d−1]}` entry, including entries that should vanish.
pub fn wigner_eckart_residual(lambda: &Partition, d: usize) -> Result<f64> {
    if d < 2 {
        return Err(Error::arg("the factorization needs d ≥ 2"));
    }
    let cg = cg_block(lambda, d)?;
    let top = lambda.padded(d);
    let mut lower: HashMap<Partition, CgBlock> = HashMap::new();
    let mut worst: f64 = 0.0;
    for (c, input) in cg.cols.iter().enumerate() {
        let mu_prime = input.pattern.level(d - 1);
        let sub_in = input.pattern.sub_pattern();
        if input.i < d && !lower.contains_key(&mu_prime) {
            lower.insert(mu_prime.clone(), cg_block(&mu_prime, d - 1)?);
        }
        for (r, output) in cg.rows.iter().enumerate() {
            let value = cg.matrix[[r, c]].re;
            let sub_out = output.pattern.sub_pattern();
            let (jp, below) = lower_entry(&lower, input, &mu_prime, &sub_in, &sub_out, d);
            let expect = match jp {
                Some(jp) => coefficient(&top, output.j, &mu_prime.padded(d - 1), jp) * below,
                None => 0.0,
            };
            worst = worst.max((value - expect).abs());
        }
    }
    Ok(worst)
}

/// `(j', ⟨j', q'_sub| U_CG^{[d−1]} |q_sub, i⟩)`, or `None` when the output row
/// is not reachable from the input at all.
fn lower_entry(
    lower: &HashMap<Partition, CgBlock>,
    input: &CgIn,
    mu_prime: &Partition,
    sub_in: &GzPattern,
    sub_out: &GzPattern,
    d: usize,
) -> (Option<usize>, f64) {
    let mu_dprime = sub_out.top();
    if input.i == d {
        return if sub_out == sub_in { (Some(0), 1.0) } else { (None, 0.0) };
    }
    let mp = mu_prime.padded(d - 1);
    let mdp = mu_dprime.padded(d - 1);
    let diff: Vec<usize> = (0..d - 1).filter(|&k| mp[k] != mdp[k]).collect();
    if diff.len() != 1 || mdp[diff[0]] != mp[diff[0]] + 1 {
        return (None, 0.0);
    }
    let jp = diff[0] + 1;
    let block = &lower[mu_prime];
    let col = block.col_of(&CgIn {
        pattern: sub_in.clone(),
        i: input.i,
    });
    let row = block.row_of(&CgOut {
        j: jp,
        pattern: sub_out.clone(),
    });
    match (row, col) {
        (Some(r), Some(c)) => (Some(jp), block.matrix[[r, c]].re),
        _ => (None, 0.0),
    }
}

/// Residuals from [`run_verify`]; every field is a maximum over trials.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub d: usize,
    pub trials: usize,
    pub seed: u64,
    pub schur_unitarity: f64,
    pub cg_unitarity: f64,
    pub off_block_mass: f64,
    pub factorization: f64,
    pub perm_q_dependence: f64,
    pub character: f64,
}

impl VerifyReport {
    pub fn max_residual(&self) -> f64 {
        [
            self.schur_unitarity,
            self.cg_unitarity,
            self.off_block_mass,
            self.factorization,
            self.perm_q_dependence,
            self.character,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    pub fn passes(&self, tol: f64) -> bool {
        let m = self.max_residual();
        !m.is_nan() && m < tol
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} d={} trials={} seed={}", self.n, self.d, self.trials, self.seed)?;
        writeln!(f, "schur unitarity     {:.3e}", self.schur_unitarity)?;
        writeln!(f, "cg unitarity        {:.3e}", self.cg_unitarity)?;
        writeln!(f, "off-block mass      {:.3e}", self.off_block_mass)?;
        writeln!(f, "q⊗p factorization   {:.3e}", self.factorization)?;
        writeln!(f, "P(s) q-dependence   {:.3e}", self.perm_q_dependence)?;
        write!(f, "character           {:.3e}", self.character)
    }
}

/// Runs `trials` random `(U, s)` pairs through every check.
pub fn run_verify(n: usize, d: usize, trials: usize, seed: u64) -> Result<VerifyReport> {
    let conj = Conjugator::new(n, d)?;
    let blocks = conj.blocks();
    let mut cg_unitarity: f64 = 0.0;
    for k in 0..n {
        for lambda in enumerate_partitions(d, k) {
            cg_unitarity = cg_unitarity.max(cg_block(&lambda, d)?.unitarity_residual());
        }
    }
    let mut report = VerifyReport {
        n,
        d,
        trials,
        seed,
        schur_unitarity: conj.unitarity_residual(),
        cg_unitarity,
        off_block_mass: 0.0,
        factorization: 0.0,
        perm_q_dependence: 0.0,
        character: 0.0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut parts = conj.empty_parts();
    for _ in 0..trials {
        let u = haar_unitary(d, &mut rng);
        let s = random_permutation(n, &mut rng);
        conj.conjugate_parts_into(&u, &s, &mut parts)?;
        report.off_block_mass = report.off_block_mass.max(parts.off_mass);
        report.factorization = report.factorization.max(parts.factorization_residual());
        conj.conjugate_perm_parts_into(&s, &mut parts)?;
        report.perm_q_dependence = report.perm_q_dependence.max(parts.q_dependence());
        conj.conjugate_parts_into(&u, &Permutation::identity(n), &mut parts)?;
        report.character = report.character.max(parts.character_residual(blocks, &u));
    }
    Ok(report)
}
