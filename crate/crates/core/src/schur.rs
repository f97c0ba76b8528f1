//! The Schur transform as a cascade of CG transforms.
//!
//! Qudit `k+1` is fed into the CG transform controlled by the irrep
//! `λ^{(k)}` of the first `k` qudits; the row `j_k` that receives the new box
//! is appended to the Young-Yamanouchi path. After `n − 1` steps the register
//! holds `|λ⟩|q⟩|p⟩`.
//!
//! [`SchurTransform`] stores each step as a sparse real matrix and applies the
//! cascade to vectors or to batches of vectors without forming the full
//! `d^n × d^n` unitary. [`SchurUnitary`] is the dense matrix, obtained by
//! pushing the identity through the cascade.
//!
//! Output rows are ordered by `λ` (canonical order), then GZ pattern, then
//! path rank. Input columns are computational basis states `|i_1 … i_n⟩` in
//! big-endian base-`d` order.

use std::collections::HashMap;
use std::fmt;

use std::ops::{AddAssign, Mul, Range};

use ndarray::{s, Array2, ArrayView2};
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::bases::{enumerate_gz, enumerate_paths, rank_path, unrank_path, GzPattern, YyPath};
use crate::clebsch_gordan::cg_column;
use crate::error::{Error, Result};
use crate::partition::{add_box, dim_p_usize, enumerate_partitions, remove_box_set, Partition};
use crate::C64;

/// Default bound on `d^n` for dense unitaries.
pub const DEFAULT_MAX_DENSE_DIM: usize = 4096;

/// Complex entries per column tile in batch mode.
pub(crate) const TILE_ENTRIES: usize = 1 << 15;

/// Bound on `d^n` for the sparse cascade engine.
pub const MAX_ENGINE_DIM: usize = 1 << 22;

/// A Schur basis label `|λ, q, p⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchurLabel {
    pub lambda: Partition,
    pub pattern: GzPattern,
    pub path: YyPath,
}

impl fmt::Display for SchurLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ={} q={} p={}", self.lambda, self.pattern, self.path)
    }
}

/// A Schur label with the path replaced by its rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompressedLabel {
    pub lambda: Partition,
    pub pattern: GzPattern,
    pub rank: usize,
}

/// Location of one irrep inside a level's row ordering.
#[derive(Clone, Debug)]
pub struct IrrepBlock {
    pub lambda: Partition,
    pub offset: usize,
    pub dim_q: usize,
    pub dim_p: usize,
    patterns: Vec<GzPattern>,
    pattern_index: HashMap<GzPattern, usize>,
}

impl IrrepBlock {
    fn new(lambda: Partition, d: usize, offset: usize) -> Self {
        let patterns = enumerate_gz(&lambda, d);
        let pattern_index = patterns.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        IrrepBlock {
            dim_q: patterns.len(),
            dim_p: dim_p_usize(&lambda),
            lambda,
            offset,
            patterns,
            pattern_index,
        }
    }

    pub fn len(&self) -> usize {
        self.dim_q * self.dim_p
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn patterns(&self) -> &[GzPattern] {
        &self.patterns
    }

    /// Row of `(q, p)` given the pattern index and the 1-based path rank.
    pub fn row(&self, q_index: usize, rank: usize) -> usize {
        self.offset + q_index * self.dim_p + rank - 1
    }
}

/// All labels with `k` boxes.
#[derive(Clone, Debug)]
struct Level {
    blocks: Vec<IrrepBlock>,
    block_of: HashMap<Partition, usize>,
}

impl Level {
    fn new(k: usize, d: usize) -> Self {
        let mut offset = 0;
        let mut blocks = Vec::new();
        for lambda in enumerate_partitions(d, k) {
            let b = IrrepBlock::new(lambda, d, offset);
            offset += b.len();
            blocks.push(b);
        }
        let block_of = blocks.iter().enumerate().map(|(k, b)| (b.lambda.clone(), k)).collect();
        Level { blocks, block_of }
    }
}

/// Sparse real matrix in compressed form, grouped by one index.
#[derive(Clone, Debug, Default)]
struct Csr {
    ptr: Vec<usize>,
    idx: Vec<u32>,
    val: Vec<f64>,
}

impl Csr {
    fn from_triplets(rows: usize, mut trip: Vec<(u32, u32, f64)>) -> Self {
        trip.sort_unstable_by_key(|t| (t.0, t.1));
        let mut ptr = vec![0usize; rows + 1];
        for t in &trip {
            ptr[t.0 as usize + 1] += 1;
        }
        for r in 0..rows {
            ptr[r + 1] += ptr[r];
        }
        Csr {
            ptr,
            idx: trip.iter().map(|t| t.1).collect(),
            val: trip.iter().map(|t| t.2).collect(),
        }
    }

    fn nnz(&self) -> usize {
        self.val.len()
    }

    fn row(&self, r: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let range = self.ptr[r]..self.ptr[r + 1];
        self.idx[range.clone()]
            .iter()
            .zip(&self.val[range])
            .map(|(&i, &v)| (i as usize, v))
    }
}

/// One CG step of the cascade, stored both ways round.
#[derive(Clone, Debug)]
struct Step {
    by_target: Csr,
    by_source: Csr,
}

/// Amplitude types the cascade runs on. The transform is real, so real
/// inputs stay real.
pub trait Amplitude: Copy + Default + Send + Sync + AddAssign + Mul<f64, Output = Self> {}

impl Amplitude for f64 {}
impl Amplitude for C64 {}

fn accumulate_row<T: Amplitude>(out: &mut [T], src: &[T], mut row: impl Iterator<Item = (usize, f64)>) {
    let w = out.len();
    match row.next() {
        None => out.fill(T::default()),
        Some((s, c)) => {
            for (o, x) in out.iter_mut().zip(&src[s * w..(s + 1) * w]) {
                *o = *x * c;
            }
        }
    }
    for (s, c) in row {
        for (o, x) in out.iter_mut().zip(&src[s * w..(s + 1) * w]) {
            *o += *x * c;
        }
    }
}

fn apply_csr_seq<T: Amplitude>(csr: &Csr, src: &[T], dst: &mut [T], w: usize) {
    for (t, out) in dst.chunks_mut(w).enumerate() {
        accumulate_row(out, src, csr.row(t));
    }
}

#[cfg(feature = "parallel")]
fn apply_csr_par<T: Amplitude>(csr: &Csr, src: &[T], dst: &mut [T], w: usize) {
    dst.par_chunks_mut(w)
        .enumerate()
        .for_each(|(t, out)| accumulate_row(out, src, csr.row(t)));
}

/// Direction of [`schur_apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// The sparse CG cascade for `n` qudits of dimension `d`.
#[derive(Clone, Debug)]
pub struct SchurTransform {
    n: usize,
    d: usize,
    dim: usize,
    levels: Vec<Level>,
    steps: Vec<Step>,
}

/// `d^n`, or a resource error when it exceeds `limit`.
pub fn checked_dim(n: usize, d: usize, limit: usize, what: &str) -> Result<usize> {
    if n == 0 || d == 0 {
        return Err(Error::arg("n and d must be positive"));
    }
    let required = (d as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if required > limit as u128 {
        return Err(Error::Resource {
            what: what.to_string(),
            required,
            limit: limit as u128,
        });
    }
    Ok(required as usize)
}

impl SchurTransform {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        Self::with_limit(n, d, MAX_ENGINE_DIM)
    }

    pub fn with_limit(n: usize, d: usize, limit: usize) -> Result<Self> {
        let dim = checked_dim(n, d, limit, "Schur cascade")?;
        let levels: Vec<Level> = (1..=n).map(|k| Level::new(k, d)).collect();
        let steps = (1..n).map(|k| build_step(&levels[k - 1], &levels[k], d)).collect();
        Ok(SchurTransform {
            n,
            d,
            dim,
            levels,
            steps,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `d^n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Irrep blocks of the output, in row order.
    pub fn blocks(&self) -> &[IrrepBlock] {
        &self.levels[self.n - 1].blocks
    }

    /// Block for `λ`, if `λ ∈ I_{d,n}`.
    pub fn block(&self, lambda: &Partition) -> Option<&IrrepBlock> {
        let level = &self.levels[self.n - 1];
        level.block_of.get(lambda).map(|&k| &level.blocks[k])
    }

    /// Nonzeros per cascade step.
    pub fn step_nnz(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.by_target.nnz()).collect()
    }

    /// Output labels in row order.
    pub fn labels(&self) -> Vec<SchurLabel> {
        let mut out = Vec::with_capacity(self.dim);
        for b in self.blocks() {
            let paths = enumerate_paths(&b.lambda);
            for q in &b.patterns {
                for p in &paths {
                    out.push(SchurLabel {
                        lambda: b.lambda.clone(),
                        pattern: q.clone(),
                        path: p.clone(),
                    });
                }
            }
        }
        out
    }

    /// Row index of a label.
    pub fn index_of(&self, label: &SchurLabel) -> Option<usize> {
        let b = self.block(&label.lambda)?;
        let q = *b.pattern_index.get(&label.pattern)?;
        if label.path.shape() != label.lambda {
            return None;
        }
        Some(b.row(q, rank_path(&label.path)))
    }

    fn check_len(&self, len: usize, batch: usize) -> Result<()> {
        if len != self.dim * batch {
            return Err(Error::arg(format!(
                "expected {} amplitudes, got {len}",
                self.dim * batch
            )));
        }
        Ok(())
    }

    fn run(&self, data: &[C64], batch: usize, dir: Direction, par: bool) -> Vec<C64> {
        let mut cur = data.to_vec();
        let mut next = Vec::new();
        self.run_in_place(&mut cur, &mut next, batch, dir, par);
        cur
    }

    /// Runs the cascade on `cur`, using `next` as scratch.
    fn run_in_place<T: Amplitude>(&self, cur: &mut Vec<T>, next: &mut Vec<T>, batch: usize, dir: Direction, par: bool) {
        next.resize(cur.len(), T::default());
        let order: Vec<usize> = match dir {
            Direction::Forward => (0..self.steps.len()).collect(),
            Direction::Inverse => (0..self.steps.len()).rev().collect(),
        };
        for k in order {
            // rows at step k have d^{n-k-2} tail entries per batch column
            let w = self.d.pow((self.n - k - 2) as u32) * batch;
            let csr = match dir {
                Direction::Forward => &self.steps[k].by_target,
                Direction::Inverse => &self.steps[k].by_source,
            };
            #[cfg(feature = "parallel")]
            if par {
                apply_csr_par(csr, cur, next, w);
                std::mem::swap(cur, next);
                continue;
            }
            let _ = par;
            apply_csr_seq(csr, cur, next, w);
            std::mem::swap(cur, next);
        }
    }

    /// Applies the transform (or its inverse) to one vector of length `d^n`.
    pub fn apply(&self, v: &[C64], dir: Direction) -> Result<Vec<C64>> {
        self.check_len(v.len(), 1)?;
        Ok(self.run(v, 1, dir, cfg!(feature = "parallel")))
    }

    pub fn forward(&self, v: &[C64]) -> Result<Vec<C64>> {
        self.apply(v, Direction::Forward)
    }

    pub fn inverse(&self, v: &[C64]) -> Result<Vec<C64>> {
        self.apply(v, Direction::Inverse)
    }

    /// Applies to every column of a `d^n × B` matrix, i.e. returns `U_Sch · M`
    /// (or `U_Sch† · M`).
    pub fn apply_batch(&self, m: &Array2<C64>, dir: Direction) -> Result<Array2<C64>> {
        #[cfg(feature = "parallel")]
        {
            self.apply_batch_par(m, dir)
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.apply_batch_seq(m, dir)
        }
    }

    /// Like [`apply_batch`](Self::apply_batch) on a row-major `d^n × batch`
    /// buffer, on the calling thread.
    pub fn apply_columns(&self, data: &[C64], batch: usize, dir: Direction) -> Result<Vec<C64>> {
        self.check_len(data.len(), batch)?;
        Ok(self.run(data, batch, dir, false))
    }

    /// [`apply_columns`](Self::apply_columns) in place, with `scratch` as
    /// working space so that repeated calls do not allocate.
    pub fn apply_columns_in_place<T: Amplitude>(
        &self,
        data: &mut Vec<T>,
        scratch: &mut Vec<T>,
        batch: usize,
        dir: Direction,
    ) -> Result<()> {
        self.check_len(data.len(), batch)?;
        self.run_in_place(data, scratch, batch, dir, false);
        Ok(())
    }

    pub fn apply_batch_seq(&self, m: &Array2<C64>, dir: Direction) -> Result<Array2<C64>> {
        self.batch(m, dir, false)
    }

    #[cfg(feature = "parallel")]
    pub fn apply_batch_par(&self, m: &Array2<C64>, dir: Direction) -> Result<Array2<C64>> {
        self.batch(m, dir, true)
    }

    fn batch(&self, m: &Array2<C64>, dir: Direction, par: bool) -> Result<Array2<C64>> {
        let (rows, cols) = m.dim();
        if rows != self.dim {
            return Err(Error::arg(format!("expected {} rows, got {rows}", self.dim)));
        }
        // each tile of columns runs through the whole cascade while it is
        // still in cache
        let width = (TILE_ENTRIES / self.dim).clamp(1, cols.max(1));
        let tiles: Vec<Range<usize>> = (0..cols).step_by(width).map(|c| c..(c + width).min(cols)).collect();
        let run_tile = |r: &Range<usize>| -> Vec<C64> {
            let data: Vec<C64> = m.slice(s![.., r.clone()]).iter().copied().collect();
            self.run(&data, r.len(), dir, false)
        };
        #[cfg(feature = "parallel")]
        let done: Vec<Vec<C64>> = if par {
            tiles.par_iter().map(run_tile).collect()
        } else {
            tiles.iter().map(run_tile).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let done: Vec<Vec<C64>> = {
            let _ = par;
            tiles.iter().map(run_tile).collect()
        };
        let mut out = Array2::zeros((rows, cols));
        for (r, data) in tiles.iter().zip(&done) {
            let view = ArrayView2::from_shape((rows, r.len()), data).expect("tile shape");
            out.slice_mut(s![.., r.clone()]).assign(&view);
        }
        Ok(out)
    }

    /// Dense `U_Sch`.
    pub fn dense(&self) -> Array2<C64> {
        self.apply_batch(&Array2::eye(self.dim), Direction::Forward)
            .expect("identity has the right shape")
    }

    pub fn dense_seq(&self) -> Array2<C64> {
        self.apply_batch_seq(&Array2::eye(self.dim), Direction::Forward)
            .expect("identity has the right shape")
    }

    /// Pairs each output amplitude with its label.
    pub fn labeled(&self, v: &[C64]) -> Result<Vec<(SchurLabel, C64)>> {
        self.check_len(v.len(), 1)?;
        Ok(self.labels().into_iter().zip(v.iter().copied()).collect())
    }
}

/// Builds the sparse matrix mapping `(label at level k, i_{k+1})` to labels at
/// level `k + 1`.
fn build_step(from: &Level, to: &Level, d: usize) -> Step {
    let mut trip: Vec<(u32, u32, f64)> = Vec::new();
    for b in &from.blocks {
        let top = b.lambda.padded(d);
        // rank offsets of the extended paths inside each target irrep
        let mut targets: HashMap<usize, (usize, usize)> = HashMap::new();
        for j in 1..=d {
            if let Some(mu) = add_box(&b.lambda, j, d) {
                let tb = to.block_of[&mu];
                let before: usize = remove_box_set(&mu)
                    .iter()
                    .take_while(|nu| **nu != b.lambda)
                    .map(dim_p_usize)
                    .sum();
                targets.insert(j, (tb, before));
            }
        }
        for (qi, q) in b.patterns.iter().enumerate() {
            for i in 1..=d {
                let column = cg_column(&top, q, i);
                for (j, q_out, amp) in column {
                    let (tb, before) = targets[&j];
                    let target = &to.blocks[tb];
                    let tq = target.pattern_index[&q_out];
                    for rank in 1..=b.dim_p {
                        let src = b.row(qi, rank) * d + (i - 1);
                        let dst = target.row(tq, before + rank);
                        trip.push((dst as u32, src as u32, amp));
                    }
                }
            }
        }
    }
    let rows: usize = to.blocks.iter().map(IrrepBlock::len).sum();
    let transposed: Vec<(u32, u32, f64)> = trip.iter().map(|&(a, b, v)| (b, a, v)).collect();
    Step {
        by_target: Csr::from_triplets(rows, trip),
        by_source: Csr::from_triplets(rows, transposed),
    }
}

/// Applies the Schur transform to a vector without forming the dense matrix.
pub fn schur_apply(state: &[C64], n: usize, d: usize, dir: Direction) -> Result<Vec<C64>> {
    let engine = SchurTransform::new(n, d)?;
    engine.apply(state, dir)
}

/// Dense Schur unitary with its row labels.
#[derive(Clone, Debug)]
pub struct SchurUnitary {
    pub n: usize,
    pub d: usize,
    pub matrix: Array2<C64>,
    pub labels: Vec<SchurLabel>,
    row_index: HashMap<SchurLabel, usize>,
    blocks: Vec<IrrepBlock>,
}

impl SchurUnitary {
    pub fn from_transform(t: &SchurTransform) -> Self {
        let labels = t.labels();
        let row_index = labels.iter().cloned().enumerate().map(|(k, l)| (l, k)).collect();
        SchurUnitary {
            n: t.n(),
            d: t.d(),
            matrix: t.dense(),
            labels,
            row_index,
            blocks: t.blocks().to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn row_of(&self, label: &SchurLabel) -> Option<usize> {
        self.row_index.get(label).copied()
    }

    pub fn blocks(&self) -> &[IrrepBlock] {
        &self.blocks
    }

    pub fn block(&self, lambda: &Partition) -> Option<&IrrepBlock> {
        self.blocks.iter().find(|b| &b.lambda == lambda)
    }

    /// Largest entry of `U U† − I`.
    pub fn unitarity_residual(&self) -> f64 {
        let m = &self.matrix;
        let prod = m.dot(&m.t().mapv(|z| z.conj()));
        prod.indexed_iter()
            .map(|((r, c), z)| (z - C64::new(if r == c { 1.0 } else { 0.0 }, 0.0)).norm())
            .fold(0.0, f64::max)
    }
}

/// Dense Schur unitary, bounded by [`DEFAULT_MAX_DENSE_DIM`].
pub fn schur_unitary(n: usize, d: usize) -> Result<SchurUnitary> {
    schur_unitary_with_limit(n, d, DEFAULT_MAX_DENSE_DIM)
}

pub fn schur_unitary_with_limit(n: usize, d: usize, limit: usize) -> Result<SchurUnitary> {
    checked_dim(n, d, limit, "dense Schur unitary")?;
    let t = SchurTransform::new(n, d)?;
    Ok(SchurUnitary::from_transform(&t))
}

/// Replaces each path by its rank; amplitudes are untouched.
pub fn compress_p(state: &[(SchurLabel, C64)]) -> Vec<(CompressedLabel, C64)> {
    state
        .iter()
        .map(|(l, a)| {
            (
                CompressedLabel {
                    lambda: l.lambda.clone(),
                    pattern: l.pattern.clone(),
                    rank: rank_path(&l.path),
                },
                *a,
            )
        })
        .collect()
}

/// Inverse of [`compress_p`].
pub fn decompress_p(state: &[(CompressedLabel, C64)]) -> Result<Vec<(SchurLabel, C64)>> {
    state
        .iter()
        .map(|(l, a)| {
            Ok((
                SchurLabel {
                    lambda: l.lambda.clone(),
                    pattern: l.pattern.clone(),
                    path: unrank_path(&l.lambda, l.rank)?,
                },
                *a,
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn random_state(dim: usize, rng: &mut ChaCha8Rng) -> Vec<C64> {
        let v: Vec<C64> = (0..dim)
            .map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        v.into_iter().map(|z| z / norm).collect()
    }

    #[test]
    fn one_qudit_is_identity() {
        for d in 1..=4 {
            let u = schur_unitary(1, d).unwrap();
            assert_eq!(u.matrix, Array2::eye(d));
            for (k, l) in u.labels.iter().enumerate() {
                assert_eq!(l.lambda, Partition::row(1));
                assert_eq!(l.pattern.to_string(), (k + 1).to_string());
                assert!(l.path.steps().is_empty());
            }
        }
    }

    #[test]
    fn ground_state_maps_to_top_label() {
        let t = SchurTransform::new(2, 2).unwrap();
        let mut v = vec![c(0.0); 4];
        v[0] = c(1.0);
        let out = t.labeled(&t.forward(&v).unwrap()).unwrap();
        let (label, amp) = &out[0];
        assert_eq!(label.lambda, Partition::row(2));
        assert_eq!(label.pattern.level(1), Partition::row(2));
        assert_eq!(rank_path(&label.path), 1);
        assert!((amp.re - 1.0).abs() < 1e-15);
        assert!(out[1..].iter().all(|(_, a)| a.norm() < 1e-15));
    }

    #[test]
    fn round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=6 {
            let t = SchurTransform::new(n, 2).unwrap();
            for _ in 0..50 {
                let v = random_state(t.dim(), &mut rng);
                let back = t.inverse(&t.forward(&v).unwrap()).unwrap();
                let err = v.iter().zip(&back).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
                assert!(err < 1e-12, "n={n} err={err}");
            }
        }
    }

    #[test]
    fn singlet_times_zero_lives_in_mixed_irrep() {
        let t = SchurTransform::new(3, 2).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        // (|01> - |10>)|0> / sqrt 2
        let mut v = vec![c(0.0); 8];
        v[0b010] = c(s);
        v[0b100] = c(-s);
        let out = t.labeled(&t.forward(&v).unwrap()).unwrap();
        for (label, amp) in out {
            if label.lambda != "2,1".parse().unwrap() {
                assert!(amp.norm() < 1e-14);
            }
        }
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let t = SchurTransform::new(2, 3).unwrap();
        assert!(t.forward(&[c(1.0); 8]).is_err());
        assert!(matches!(schur_unitary(13, 2), Err(Error::Resource { .. })));
        assert!(SchurTransform::new(0, 2).is_err());
    }

    #[test]
    fn labels_are_indexed_consistently() {
        let t = SchurTransform::new(4, 3).unwrap();
        for (k, l) in t.labels().iter().enumerate() {
            assert_eq!(t.index_of(l), Some(k));
        }
    }

    #[test]
    fn compression_round_trip() {
        let t = SchurTransform::new(4, 2).unwrap();
        let v: Vec<C64> = (0..16).map(|k| c(k as f64)).collect();
        let labeled = t.labeled(&v).unwrap();
        let packed = compress_p(&labeled);
        for ((l, a), (cl, b)) in labeled.iter().zip(&packed) {
            assert_eq!(a, b);
            if l.lambda == Partition::row(4) {
                assert_eq!(cl.rank, 1);
            }
        }
        assert_eq!(decompress_p(&packed).unwrap(), labeled);
    }

    #[test]
    fn mixed_paths_rank_one_and_two() {
        let t = SchurTransform::new(3, 2).unwrap();
        let lam: Partition = "2,1".parse().unwrap();
        let mut ranks: Vec<usize> = t
            .labels()
            .iter()
            .filter(|l| l.lambda == lam)
            .map(|l| rank_path(&l.path))
            .collect();
        ranks.sort_unstable();
        ranks.dedup();
        assert_eq!(ranks, vec![1, 2]);
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_and_sequential_agree() {
        let t = SchurTransform::new(5, 3).unwrap();
        assert_eq!(t.dense(), t.dense_seq());
    }
}
