//! Brute-force references used to check everything else.
//!
//! Nothing here goes through the CG recursion except [`irrep_via_cg`], which
//! is kept separate and is only ever compared against the other oracles.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use ndarray::{linalg::kron, Array2};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::bases::{enumerate_gz, gz_to_ssyt};
use crate::clebsch_gordan::cg_block;
use crate::error::{Error, Result};
use crate::partition::{dim_p_usize, remove_box_set, Partition};
use crate::schur::{checked_dim, SchurUnitary};
use crate::C64;

/// Size bound for dense oracle matrices.
pub const MAX_ORACLE_DIM: usize = 4096;

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
const ONE: C64 = C64 { re: 1.0, im: 0.0 };

/// A permutation of `{1, …, n}`; stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// From 0-based images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::arg(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Swaps the 0-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a >= n || b >= n {
            return Err(Error::arg("transposition out of range"));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based image of `x`.
    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`, i.e. `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i32 {
        let mut seen = vec![false; self.len()];
        let mut sign = 1;
        for start in 0..self.len() {
            let mut x = start;
            let mut cycle = 0;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                cycle += 1;
            }
            if cycle > 0 && cycle % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }
}

/// One-line notation with 1-based images, e.g. `2,1,3`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images.iter().map(|x| (x + 1).to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| match t.trim().parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(Error::arg(format!("bad permutation entry {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }
}

pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation { images }
}

fn digits(mut x: usize, n: usize, d: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = x % d;
        x /= d;
    }
    out
}

fn undigits(ds: &[usize], d: usize) -> usize {
    ds.iter().fold(0, |acc, &x| acc * d + x)
}

/// Row index of `P(s)|x⟩`: tensor factor `k` of the input lands in slot
/// `s(k)`.
pub fn permute_index(s: &Permutation, x: usize, d: usize) -> usize {
    let n = s.len();
    let ds = digits(x, n, d);
    let mut out = vec![0; n];
    for (k, &v) in ds.iter().enumerate() {
        out[s.image(k)] = v;
    }
    undigits(&out, d)
}

/// The `d^n × d^n` matrix of `P(s)`.
pub fn perm_matrix(s: &Permutation, d: usize) -> Result<Array2<C64>> {
    let dim = checked_dim(s.len(), d, MAX_ORACLE_DIM, "permutation matrix")?;
    let mut m = Array2::zeros((dim, dim));
    for x in 0..dim {
        m[[permute_index(s, x, d), x]] = ONE;
    }
    Ok(m)
}

/// Largest entry of `U U† − I`.
pub fn unitarity_residual(u: &Array2<C64>) -> f64 {
    let prod = u.dot(&u.t().mapv(|z| z.conj()));
    prod.indexed_iter()
        .map(|((r, c), z)| (z - if r == c { ONE } else { ZERO }).norm())
        .fold(0.0, f64::max)
}

fn check_unitary(u: &Array2<C64>) -> Result<()> {
    if !u.is_square() {
        return Err(Error::arg("matrix is not square"));
    }
    let res = unitarity_residual(u);
    if res.is_nan() || res >= 1e-10 {
        return Err(Error::arg(format!("matrix is not unitary (residual {res:e})")));
    }
    Ok(())
}

/// `U^{⊗n}`.
pub fn tensor_power(u: &Array2<C64>, n: usize) -> Result<Array2<C64>> {
    check_unitary(u)?;
    checked_dim(n, u.nrows(), MAX_ORACLE_DIM, "tensor power")?;
    let mut out = Array2::from_elem((1, 1), ONE);
    for _ in 0..n {
        out = kron(&out, u);
    }
    Ok(out)
}

/// `U^{⊗n} · M` without forming the tensor power, one factor at a time.
pub fn apply_tensor_power(u: &Array2<C64>, n: usize, m: &Array2<C64>) -> Array2<C64> {
    let (rows, cols) = m.dim();
    assert_eq!(rows, u.nrows().pow(n as u32));
    let mut data: Vec<C64> = m.iter().copied().collect();
    tensor_power_columns(u, n, &mut data, &mut Vec::new(), cols);
    Array2::from_shape_vec((rows, cols), data).expect("shape preserved")
}

/// `M ← U^{⊗n} M` for a row-major `d^n × cols` buffer, one tensor factor at
/// a time, with `next` as scratch.
pub fn tensor_power_columns(u: &Array2<C64>, n: usize, cur: &mut Vec<C64>, next: &mut Vec<C64>, cols: usize) {
    let d = u.nrows();
    assert_eq!(cur.len(), d.pow(n as u32) * cols);
    next.resize(cur.len(), ZERO);
    for k in 0..n {
        let inner = d.pow((n - k - 1) as u32) * cols;
        for (src, dst) in cur.chunks(d * inner).zip(next.chunks_mut(d * inner)) {
            for a in 0..d {
                let out = &mut dst[a * inner..(a + 1) * inner];
                let c = u[[a, 0]];
                for (o, x) in out.iter_mut().zip(&src[..inner]) {
                    *o = c * x;
                }
                for b in 1..d {
                    let c = u[[a, b]];
                    for (o, x) in out.iter_mut().zip(&src[b * inner..(b + 1) * inner]) {
                        *o += c * x;
                    }
                }
            }
        }
        std::mem::swap(cur, next);
    }
}

/// Haar-random unitary: QR of a complex Gaussian matrix with the phases of
/// `R`'s diagonal moved into `Q`.
pub fn haar_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Array2<C64> {
    let z = DMatrix::<C64>::from_fn(d, d, |_, _| {
        C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let (q, r) = z.qr().unpack();
    Array2::from_shape_fn((d, d), |(a, b)| {
        let rd = r[(b, b)];
        let phase = if rd.norm() > 0.0 { rd / rd.norm() } else { ONE };
        q[(a, b)] * phase
    })
}

/// Eigenvalues of a square complex matrix, from its Schur form.
pub fn eigenvalues(u: &Array2<C64>) -> Vec<C64> {
    let n = u.nrows();
    let m = DMatrix::<C64>::from_fn(n, n, |a, b| u[[a, b]]);
    let (_, t) = m.schur().unpack();
    (0..n).map(|k| t[(k, k)]).collect()
}

/// `s_λ(x)` as a sum of monomials over semistandard tableaux with entries
/// `≤ x.len()`.
pub fn schur_polynomial(lambda: &Partition, x: &[C64]) -> C64 {
    let d = x.len();
    enumerate_gz(lambda, d)
        .iter()
        .map(|q| {
            gz_to_ssyt(q)
                .rows()
                .iter()
                .flatten()
                .fold(ONE, |acc, &e| acc * x[e as usize - 1])
        })
        .sum()
}

/// A standard Young tableau; entries are `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            if r > 0 && row.len() > rows[r - 1].len() {
                return Err(Error::arg("row lengths must not increase"));
            }
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::arg(format!("entries must be 1..={n}, each once")));
                }
                if (c > 0 && row[c - 1] >= v) || (r > 0 && rows[r - 1][c] >= v) {
                    return Err(Error::arg("entries must increase along rows and columns"));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect::<Vec<_>>())
            .expect("validated")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect())
            .collect()
    }
}

/// All standard tableaux of shape `λ`, found by placing `n` in each corner.
pub fn enumerate_standard_tableaux(lambda: &Partition) -> Vec<StandardTableau> {
    fn rec(shape: &[u32], n: usize) -> Vec<Vec<Vec<usize>>> {
        if n == 0 {
            return vec![vec![Vec::new(); shape.len()]];
        }
        let mut out = Vec::new();
        for r in 0..shape.len() {
            let is_corner = shape[r] > 0 && shape.get(r + 1).is_none_or(|&below| below < shape[r]);
            if !is_corner {
                continue;
            }
            let mut smaller = shape.to_vec();
            smaller[r] -= 1;
            for mut t in rec(&smaller, n - 1) {
                t[r].push(n);
                out.push(t);
            }
        }
        out
    }
    rec(lambda.parts(), lambda.size())
        .into_iter()
        .map(|rows| StandardTableau::new(rows).expect("built standard"))
        .collect()
}

/// Every permutation of `{0..n}` that maps each block of `blocks` (1-based
/// entries) to itself.
fn block_group(blocks: &[Vec<usize>], n: usize) -> Vec<Permutation> {
    let mut group = vec![Permutation::identity(n)];
    for block in blocks {
        let mut next = Vec::new();
        for g in &group {
            for arrangement in permutations(block.len()) {
                let mut images = g.images.clone();
                for (k, &src) in block.iter().enumerate() {
                    images[src - 1] = block[arrangement[k]] - 1;
                }
                next.push(Permutation { images });
            }
        }
        group = next;
    }
    group
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// `(dim P_λ / n!) · (Σ_c sgn(c) P(c)) · (Σ_r P(r))` over the column and row
/// groups of `t`.
pub fn young_symmetrizer(t: &StandardTableau, d: usize) -> Result<Array2<C64>> {
    let n = t.size();
    if n == 0 {
        return Err(Error::arg("empty tableau"));
    }
    let dim = checked_dim(n, d, MAX_ORACLE_DIM, "Young symmetrizer")?;
    let rows = block_group(&t.rows, n);
    let cols = block_group(&t.columns(), n);
    let mut row_sum = Array2::<C64>::zeros((dim, dim));
    for r in &rows {
        for x in 0..dim {
            row_sum[[permute_index(r, x, d), x]] += ONE;
        }
    }
    let mut col_sum = Array2::<C64>::zeros((dim, dim));
    for c in &cols {
        let s = c.sign() as f64;
        for x in 0..dim {
            col_sum[[permute_index(c, x, d), x]] += C64::new(s, 0.0);
        }
    }
    let scale = dim_p_usize(&t.shape()) as f64 / factorial(n);
    Ok(col_sum.dot(&row_sum).mapv(|z| z * scale))
}

fn rows_of_block(schur: &SchurUnitary, lambda: &Partition) -> Result<(usize, usize, usize)> {
    let b = schur
        .block(lambda)
        .ok_or_else(|| Error::arg(format!("{lambda} is not in I_(d,n)")))?;
    Ok((b.offset, b.dim_q, b.dim_p))
}

/// `S_λ · X · S_λ†` for the rows `S_λ` of the `λ` block, where `apply` maps a
/// `d^n × k` matrix to `X` times it.
fn block_conjugate(
    schur: &SchurUnitary,
    lambda: &Partition,
    apply: impl Fn(&Array2<C64>) -> Array2<C64>,
) -> Result<(Array2<C64>, usize, usize)> {
    let (offset, dq, dp) = rows_of_block(schur, lambda)?;
    let rows = schur.matrix.slice(ndarray::s![offset..offset + dq * dp, ..]).to_owned();
    let cols = rows.t().mapv(|z| z.conj());
    Ok((rows.dot(&apply(&cols)), dq, dp))
}

/// Reads `A` out of a block of the form `A ⊗ I` (or `I ⊗ A` with
/// `on_q = false`) and rejects blocks that are not of that form.
fn read_factor(block: &Array2<C64>, dq: usize, dp: usize, on_q: bool) -> Result<Array2<C64>> {
    let (outer, inner) = if on_q { (dq, dp) } else { (dp, dq) };
    let at = |a: usize, b: usize, k: usize, l: usize| -> C64 {
        if on_q {
            block[[a * dp + k, b * dp + l]]
        } else {
            block[[k * dp + a, l * dp + b]]
        }
    };
    let out = Array2::from_shape_fn((outer, outer), |(a, b)| at(a, b, 0, 0));
    let mut worst: f64 = 0.0;
    for a in 0..outer {
        for b in 0..outer {
            for k in 0..inner {
                for l in 0..inner {
                    let expect = if k == l { out[[a, b]] } else { ZERO };
                    worst = worst.max((at(a, b, k, l) - expect).norm());
                }
            }
        }
    }
    if worst > 1e-9 {
        return Err(Error::Consistency(format!(
            "block depends on the fixed index (deviation {worst:e})"
        )));
    }
    Ok(out)
}

/// `q_λ(U)` read from `U_Sch U^{⊗n} U_Sch†` at a fixed path index.
pub fn extract_irrep(schur: &SchurUnitary, lambda: &Partition, u: &Array2<C64>) -> Result<Array2<C64>> {
    check_unitary(u)?;
    if u.nrows() != schur.d {
        return Err(Error::arg("U has the wrong dimension"));
    }
    let (block, dq, dp) = block_conjugate(schur, lambda, |m| apply_tensor_power(u, schur.n, m))?;
    read_factor(&block, dq, dp, true)
}

/// `p_λ(s)` read from `U_Sch P(s) U_Sch†` at a fixed GZ index.
pub fn extract_perm_irrep(schur: &SchurUnitary, lambda: &Partition, s: &Permutation) -> Result<Array2<C64>> {
    if s.len() != schur.n {
        return Err(Error::arg("permutation has the wrong length"));
    }
    let d = schur.d;
    let (block, dq, dp) = block_conjugate(schur, lambda, |m| {
        let mut out = Array2::zeros(m.dim());
        for (x, row) in m.outer_iter().enumerate() {
            out.row_mut(permute_index(s, x, d)).assign(&row);
        }
        out
    })?;
    read_factor(&block, dq, dp, false)
}

/// `q_λ(U)` in the GZ basis, bootstrapped from `q_(1)(U) = U` through the CG
/// blocks: `q_{μ+e_j}(U)` is the `j` block of `CG (q_μ(U) ⊗ U) CG†`.
pub fn irrep_via_cg(lambda: &Partition, u: &Array2<C64>) -> Result<Array2<C64>> {
    let d = u.nrows();
    if lambda.num_parts() > d {
        return Err(Error::arg(format!("{lambda} has more than {d} parts")));
    }
    if lambda.is_empty() {
        return Ok(Array2::from_elem((1, 1), ONE));
    }
    let mu = remove_box_set(lambda)
        .pop()
        .expect("nonempty partition has a removable box");
    let j = (0..d)
        .find(|&k| mu.part(k) != lambda.part(k))
        .expect("shapes differ by one box")
        + 1;
    let inner = irrep_via_cg(&mu, u)?;
    let cg = cg_block(&mu, d)?;
    let conj = cg.matrix.dot(&kron(&inner, u)).dot(&cg.matrix.t().mapv(|z| z.conj()));
    let (_, start, len) = cg
        .output_blocks()
        .into_iter()
        .find(|b| b.0 == j)
        .expect("target row is an output block");
    Ok(conj.slice(ndarray::s![start..start + len, start..start + len]).to_owned())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{dim_q_usize, enumerate_partitions};
    use crate::schur::schur_unitary;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn max_diff(a: &Array2<C64>, b: &Array2<C64>) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    #[test]
    fn transposition_swaps_factors() {
        let s: Permutation = "2,1,3".parse().unwrap();
        let d = 2;
        // |i1 i2 i3> = |1 0 0> -> |0 1 0>
        assert_eq!(permute_index(&s, 0b100, d), 0b010);
        assert_eq!(perm_matrix(&Permutation::identity(3), 2).unwrap(), Array2::eye(8));
    }

    #[test]
    fn permutation_matrices_are_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let a = random_permutation(4, &mut rng);
            let b = random_permutation(4, &mut rng);
            let lhs = perm_matrix(&a, 2).unwrap().dot(&perm_matrix(&b, 2).unwrap());
            let rhs = perm_matrix(&a.compose(&b), 2).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(a.compose(&a.inverse()), Permutation::identity(4));
        }
    }

    #[test]
    fn signs() {
        assert_eq!(Permutation::identity(3).sign(), 1);
        assert_eq!(Permutation::transposition(3, 0, 2).unwrap().sign(), -1);
        assert_eq!("2,3,1".parse::<Permutation>().unwrap().sign(), 1);
        assert!("1,1".parse::<Permutation>().is_err());
    }

    #[test]
    fn tensor_power_commutes_with_permutations() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..5 {
            let u = haar_unitary(2, &mut rng);
            let q = tensor_power(&u, 3).unwrap();
            assert!(unitarity_residual(&q) < 1e-12);
            let p = perm_matrix(&random_permutation(3, &mut rng), 2).unwrap();
            assert!(max_diff(&p.dot(&q), &q.dot(&p)) < 1e-12);
            let m = Array2::from_shape_fn((8, 3), |(a, b)| C64::new(a as f64, b as f64));
            assert!(max_diff(&apply_tensor_power(&u, 3, &m), &q.dot(&m)) < 1e-12);
        }
        let bad = Array2::from_elem((2, 2), ONE);
        assert!(matches!(tensor_power(&bad, 2), Err(Error::Argument(_))));
    }

    #[test]
    fn diagonal_tensor_power_is_monomial() {
        let u = Array2::from_diag(&ndarray::arr1(&[C64::new(0.0, 1.0), C64::new(-1.0, 0.0)]));
        let q = tensor_power(&u, 2).unwrap();
        let diag: Vec<C64> = q.diag().to_vec();
        assert_eq!(diag, vec![C64::new(-1.0, 0.0), C64::new(0.0, -1.0), C64::new(0.0, -1.0), ONE]);
    }

    #[test]
    fn haar_samples_are_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for d in 1..6 {
            assert!(unitarity_residual(&haar_unitary(d, &mut rng)) < 1e-12);
        }
    }

    #[test]
    fn schur_polynomial_small_cases() {
        let x = [C64::new(2.0, 0.0), C64::new(3.0, 0.0), C64::new(5.0, 0.0)];
        assert_eq!(schur_polynomial(&Partition::row(1), &x), C64::new(10.0, 0.0));
        // s_(1,1)(x) = e_2(x)
        assert_eq!(schur_polynomial(&"1,1".parse().unwrap(), &x), C64::new(31.0, 0.0));
        let ones = [ONE; 2];
        assert_eq!(schur_polynomial(&Partition::row(2), &ones), C64::new(3.0, 0.0));
    }

    #[test]
    fn tableau_counts_match_dim_p() {
        for n in 1..=6 {
            for lambda in enumerate_partitions(n, n) {
                assert_eq!(enumerate_standard_tableaux(&lambda).len(), dim_p_usize(&lambda));
            }
        }
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 4]]).is_ok());
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1], vec![2, 3]]).is_err());
    }

    #[test]
    fn singlet_projector() {
        let t = StandardTableau::new(vec![vec![1], vec![2]]).unwrap();
        let pi = young_symmetrizer(&t, 2).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let v = [ZERO, C64::new(s, 0.0), C64::new(-s, 0.0), ZERO];
        let expect = Array2::from_shape_fn((4, 4), |(a, b)| v[a] * v[b]);
        assert!(max_diff(&pi, &expect) < 1e-15);
    }

    #[test]
    fn symmetrizers_are_projectors_of_the_right_rank() {
        for d in 1..=3 {
            for n in 1..=4 {
                for lambda in enumerate_partitions(n, n) {
                    for t in enumerate_standard_tableaux(&lambda) {
                        let pi = young_symmetrizer(&t, d).unwrap();
                        assert!(max_diff(&pi.dot(&pi), &pi) < 1e-12);
                        let tr: C64 = pi.diag().sum();
                        assert!((tr.re - dim_q_usize(&lambda, d) as f64).abs() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn extracted_irreps_are_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let schur = schur_unitary(3, 2).unwrap();
        let lam: Partition = "2,1".parse().unwrap();
        let a = haar_unitary(2, &mut rng);
        let b = haar_unitary(2, &mut rng);
        let qa = extract_irrep(&schur, &lam, &a).unwrap();
        let qb = extract_irrep(&schur, &lam, &b).unwrap();
        let qab = extract_irrep(&schur, &lam, &a.dot(&b)).unwrap();
        assert!(max_diff(&qa.dot(&qb), &qab) < 1e-12);
        assert!(max_diff(&extract_irrep(&schur, &lam, &Array2::eye(2)).unwrap(), &Array2::eye(2)) < 1e-12);
        let e = extract_perm_irrep(&schur, &lam, &Permutation::identity(3)).unwrap();
        assert!(max_diff(&e, &Array2::eye(2)) < 1e-12);
    }

    #[test]
    fn bootstrap_agrees_with_schur_extraction() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let schur = schur_unitary(4, 3).unwrap();
        let u = haar_unitary(3, &mut rng);
        for lambda in enumerate_partitions(3, 4) {
            let a = extract_irrep(&schur, &lambda, &u).unwrap();
            let b = irrep_via_cg(&lambda, &u).unwrap();
            assert!(max_diff(&a, &b) < 1e-11, "{lambda}");
        }
    }

    #[test]
    fn eigenvalues_of_a_diagonal_matrix() {
        let u = Array2::from_diag(&ndarray::arr1(&[ONE, C64::new(0.0, 1.0)]));
        let mut ev = eigenvalues(&u);
        ev.sort_by(|a, b| a.im.total_cmp(&b.im));
        assert!((ev[0] - ONE).norm() < 1e-14 && (ev[1] - C64::new(0.0, 1.0)).norm() < 1e-14);
    }
}
