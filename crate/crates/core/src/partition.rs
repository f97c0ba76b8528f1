//! Integer partitions and the exact combinatorics attached to them.
//!
//! A [`Partition`] labels an irrep of both `S_n` and `U(d)`. The canonical
//! order used everywhere in this crate (enumeration, path ranking, matrix row
//! layout) is *descending* lexicographic: `(2,0)` comes before `(1,1)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A nonincreasing sequence of nonnegative integers, stored without trailing
/// zeros.
///
/// The derived `Ord` is plain lexicographic order on the normal form. The
/// canonical (descending) order is [`Partition::canonical_cmp`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, accepting trailing zeros.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::arg(format!("parts {parts:?} are not nonincreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts already known to be nonincreasing.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(n)`.
    pub fn row(n: u32) -> Self {
        Partition::from_sorted(vec![n])
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i` (0-based); zero past the last nonzero part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `d`.
    ///
    /// Panics if the partition has more than `d` parts.
    pub fn padded(&self, d: usize) -> Vec<u32> {
        assert!(self.parts.len() <= d, "{self} has more than {d} parts");
        let mut v = self.parts.clone();
        v.resize(d, 0);
        v
    }

    /// Canonical order: descending lexicographic.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }

    /// The conjugate (transposed) diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition::from_sorted(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::arg(format!("bad partition entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` into at most `d` parts, in canonical order.
pub fn enumerate_partitions(d: usize, n: usize) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, d, &mut Vec::new(), &mut out);
    out
}

/// Slice form of the interlacing test; `mu` has length `lambda.len() - 1`.
pub(crate) fn interlaces_padded(mu: &[u32], lambda: &[u32]) -> bool {
    debug_assert_eq!(mu.len() + 1, lambda.len());
    mu.iter()
        .enumerate()
        .all(|(i, &m)| lambda[i] >= m && m >= lambda[i + 1])
}

/// `λ_1 ≥ μ_1 ≥ λ_2 ≥ … ≥ μ_{d-1} ≥ λ_d`, with `μ` having at most `d-1`
/// parts and `λ` at most `d`.
pub fn interlaces(mu: &Partition, lambda: &Partition, d: usize) -> Result<bool> {
    if d == 0 {
        return Err(Error::arg("d must be positive"));
    }
    if mu.num_parts() > d - 1 {
        return Err(Error::arg(format!("{mu} has more than {} parts", d - 1)));
    }
    if lambda.num_parts() > d {
        return Err(Error::arg(format!("{lambda} has more than {d} parts")));
    }
    Ok(interlaces_padded(&mu.padded(d - 1), &lambda.padded(d)))
}

/// `λ + e_j` (rows numbered from 1) if it is a partition with at most `d`
/// parts.
pub fn add_box(lambda: &Partition, j: usize, d: usize) -> Option<Partition> {
    if j == 0 || j > d || lambda.num_parts() > d {
        return None;
    }
    if j > 1 && lambda.part(j - 2) <= lambda.part(j - 1) {
        return None;
    }
    let mut parts = lambda.padded(j.max(lambda.num_parts()));
    parts[j - 1] += 1;
    Some(Partition::from_sorted(parts))
}

/// Slice form of [`add_box`] on a padded vector (`j` from 1).
pub(crate) fn add_box_padded(lambda: &[u32], j: usize) -> Option<Vec<u32>> {
    if j == 0 || j > lambda.len() || (j > 1 && lambda[j - 2] <= lambda[j - 1]) {
        return None;
    }
    let mut v = lambda.to_vec();
    v[j - 1] += 1;
    Some(v)
}

/// Every partition obtained by removing one box, in canonical order.
pub fn remove_box_set(lambda: &Partition) -> Vec<Partition> {
    let len = lambda.num_parts();
    (0..len)
        .rev()
        .filter(|&i| lambda.part(i) > lambda.part(i + 1))
        .map(|i| {
            let mut parts = lambda.parts.clone();
            parts[i] -= 1;
            Partition::from_sorted(parts)
        })
        .collect()
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Dimension of the `S_n` irrep: `n! ∏_{i<j}(λ_i-λ_j+j-i) / ∏_i (λ_i+d-i)!`
/// with `d` the number of parts.
pub fn dim_p(lambda: &Partition) -> BigUint {
    let d = lambda.num_parts();
    let l: Vec<u64> = lambda.parts.iter().map(|&p| p as u64).collect();
    let mut num = factorial(lambda.size() as u64);
    for i in 0..d {
        for j in i + 1..d {
            num *= l[i] - l[j] + (j - i) as u64;
        }
    }
    let den = (0..d).fold(BigUint::one(), |acc, i| {
        acc * factorial(l[i] + (d - 1 - i) as u64)
    });
    num / den
}

/// Dimension of the `U(d)` irrep: `∏_{i<j≤d}(λ_i-λ_j+j-i) / ∏_{m=1}^{d-1} m!`.
/// Zero when `λ` has more than `d` parts.
pub fn dim_q(lambda: &Partition, d: usize) -> BigUint {
    if d == 0 || lambda.num_parts() > d {
        return BigUint::default();
    }
    let l: Vec<u64> = lambda.padded(d).into_iter().map(u64::from).collect();
    let mut num = BigUint::one();
    for i in 0..d {
        for j in i + 1..d {
            num *= l[i] - l[j] + (j - i) as u64;
        }
    }
    let den = (1..d as u64).fold(BigUint::one(), |acc, m| acc * factorial(m));
    num / den
}

pub(crate) fn to_usize(v: &BigUint) -> usize {
    let digits = v.to_u64_digits();
    match digits.as_slice() {
        [] => 0,
        [x] => usize::try_from(*x).expect("dimension exceeds usize"),
        _ => panic!("dimension exceeds usize"),
    }
}

/// `dim_p` as a machine integer.
pub fn dim_p_usize(lambda: &Partition) -> usize {
    to_usize(&dim_p(lambda))
}

/// `dim_q` as a machine integer.
pub fn dim_q_usize(lambda: &Partition, d: usize) -> usize {
    to_usize(&dim_q(lambda, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Counts standard fillings of a shape by placing n, n-1, ... at corners.
    fn count_syt(shape: &[u32]) -> u64 {
        if shape.iter().all(|&x| x == 0) {
            return 1;
        }
        let mut total = 0;
        for i in 0..shape.len() {
            let below = shape.get(i + 1).copied().unwrap_or(0);
            if shape[i] > below {
                let mut s = shape.to_vec();
                s[i] -= 1;
                total += count_syt(&s);
            }
        }
        total
    }

    /// Brute-force count of semistandard fillings with entries in 1..=d.
    fn count_ssyt(shape: &[u32], d: u32) -> u64 {
        let cells: Vec<(usize, usize)> = shape
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
            .collect();
        let mut grid = vec![vec![0u32; shape.first().copied().unwrap_or(0) as usize]; shape.len()];
        fn fill(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, d: u32) -> u64 {
            if k == cells.len() {
                return 1;
            }
            let (r, c) = cells[k];
            let mut total = 0;
            for v in 1..=d {
                if c > 0 && grid[r][c - 1] > v {
                    continue;
                }
                if r > 0 && grid[r - 1][c] >= v {
                    continue;
                }
                grid[r][c] = v;
                total += fill(k + 1, cells, grid, d);
            }
            grid[r][c] = 0;
            total
        }
        fill(0, &cells, &mut grid, d)
    }

    #[test]
    fn enumerate_small_cases() {
        assert_eq!(enumerate_partitions(2, 2), vec![p("2"), p("1,1")]);
        assert_eq!(enumerate_partitions(2, 3), vec![p("3"), p("2,1")]);
        assert_eq!(
            enumerate_partitions(3, 4),
            vec![p("4"), p("3,1"), p("2,2"), p("2,1,1")]
        );
        assert_eq!(enumerate_partitions(3, 0), vec![Partition::empty()]);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for d in 1..=4 {
            for n in 0..=8 {
                let mut brute = Vec::new();
                let mut v = vec![0u32; d];
                loop {
                    if v.iter().sum::<u32>() as usize == n && v.windows(2).all(|w| w[0] >= w[1]) {
                        brute.push(Partition::new(v.clone()).unwrap());
                    }
                    let mut k = 0;
                    while k < d {
                        v[k] += 1;
                        if v[k] as usize <= n {
                            break;
                        }
                        v[k] = 0;
                        k += 1;
                    }
                    if k == d {
                        break;
                    }
                }
                brute.sort_by(|a, b| a.canonical_cmp(b));
                assert_eq!(enumerate_partitions(d, n), brute, "d={d} n={n}");
            }
        }
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        assert_eq!(p("2,0"), p("2"));
        assert_eq!(p("4,3,1,1,0,0").to_string(), "4,3,1,1");
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!("1,x".parse::<Partition>().is_err());
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlaces(&p("3,3,1"), &p("4,3,1,1"), 4).unwrap());
        assert!(interlaces(&p("4,3,1"), &p("4,3,1,1"), 4).unwrap());
        assert!(!interlaces(&p("5"), &p("4,3,1,1"), 4).unwrap());
        assert!(interlaces(&p("4,3,1,1"), &p("4"), 4).is_err());
        assert!(interlaces(&p("1"), &p("1"), 1).is_err());
        assert!(interlaces(&p("1"), &p("1"), 2).unwrap());
    }

    #[test]
    fn add_box_examples() {
        assert_eq!(add_box(&p("3,2,1"), 2, 3), Some(p("3,3,1")));
        assert_eq!(add_box(&p("2,2"), 2, 3), None);
        assert_eq!(add_box(&Partition::empty(), 1, 1), Some(p("1")));
        assert_eq!(add_box(&p("1"), 3, 3), None);
        assert_eq!(add_box(&p("1,1"), 3, 2), None);
        assert_eq!(add_box(&p("1,1"), 3, 3), Some(p("1,1,1")));
    }

    #[test]
    fn remove_box_examples() {
        assert_eq!(remove_box_set(&p("3,2,1")), vec![p("3,2"), p("3,1,1"), p("2,2,1")]);
        assert_eq!(remove_box_set(&p("5")), vec![p("4")]);
        assert_eq!(remove_box_set(&p("1,1,1")), vec![p("1,1")]);
        assert!(remove_box_set(&Partition::empty()).is_empty());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dim_p(&p("2,1")), BigUint::from(2u32));
        assert_eq!(dim_p(&p("7")), BigUint::from(1u32));
        assert_eq!(dim_p(&p("3,2,1")), BigUint::from(count_syt(&[3, 2, 1])));
        assert_eq!(dim_p(&p("3,2,1")), BigUint::from(16u32));
        assert_eq!(dim_q(&p("2"), 2), BigUint::from(3u32));
        assert_eq!(dim_q(&p("2,1"), 3), BigUint::from(count_ssyt(&[2, 1], 3)));
        assert_eq!(dim_q(&p("2,1"), 3), BigUint::from(8u32));
        assert_eq!(dim_q(&p("1,1,1"), 2), BigUint::default());
        for a in 0..6u32 {
            for b in 0..=a {
                let lam = Partition::new(vec![a, b]).unwrap();
                assert_eq!(dim_q_usize(&lam, 2), (a - b + 1) as usize);
            }
        }
    }

    #[test]
    fn dimensions_match_tableau_oracles() {
        for d in 1..=4usize {
            for n in 0..=7 {
                for lam in enumerate_partitions(d, n) {
                    assert_eq!(dim_p(&lam), BigUint::from(count_syt(lam.parts())), "{lam}");
                    assert_eq!(
                        dim_q(&lam, d),
                        BigUint::from(count_ssyt(lam.parts(), d as u32)),
                        "{lam} d={d}"
                    );
                }
            }
        }
    }

    #[test]
    fn pieri_and_branching() {
        for d in 1..=4usize {
            for m in 0..8 {
                for lam in enumerate_partitions(d, m) {
                    let lhs = dim_q(&lam, d) * BigUint::from(d);
                    let rhs: BigUint = (1..=d)
                        .filter_map(|j| add_box(&lam, j, d))
                        .map(|mu| dim_q(&mu, d))
                        .sum();
                    assert_eq!(lhs, rhs, "Pieri λ={lam} d={d}");
                    if m > 0 {
                        let s: BigUint = remove_box_set(&lam).iter().map(dim_p).sum();
                        assert_eq!(dim_p(&lam), s);
                    }
                }
            }
        }
    }

    #[test]
    fn conjugate_is_involution() {
        for lam in enumerate_partitions(6, 6) {
            assert_eq!(lam.conjugate().conjugate(), lam);
            assert_eq!(lam.conjugate().size(), lam.size());
        }
    }

    proptest! {
        #[test]
        fn canonical_sort_is_idempotent(mut parts in proptest::collection::vec(0u32..6, 0..5)) {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::new(parts.clone()).unwrap();
            let text = lam.to_string();
            prop_assert_eq!(text.parse::<Partition>().unwrap(), lam.clone());
            let mut all = enumerate_partitions(4, lam.size());
            let before = all.clone();
            all.sort_by(|a, b| a.canonical_cmp(b));
            prop_assert_eq!(all, before);
        }
    }
}
