//! Gel'fand-Zetlin patterns, Young-Yamanouchi paths and their encodings.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{self, dim_p_usize, interlaces_padded, remove_box_set, Partition};

/// A chain of interlacing rows `q_d = λ ≿ q_{d-1} ≿ … ≿ q_1`.
///
/// `rows[0]` is `q_d` padded to `d` entries, `rows[k]` is `q_{d-k}` padded to
/// `d - k` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GzPattern {
    rows: Vec<Vec<u32>>,
}

impl GzPattern {
    /// Validates row lengths, row monotonicity and interlacing.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let d = rows.len();
        if d == 0 {
            return Err(Error::arg("a pattern needs at least one row"));
        }
        for (k, row) in rows.iter().enumerate() {
            if row.len() != d - k {
                return Err(Error::arg(format!(
                    "row {k} has length {}, expected {}",
                    row.len(),
                    d - k
                )));
            }
            if row.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::arg(format!("row {row:?} is not nonincreasing")));
            }
        }
        for k in 1..d {
            if !interlaces_padded(&rows[k], &rows[k - 1]) {
                return Err(Error::arg(format!(
                    "{:?} does not interlace {:?}",
                    rows[k],
                    rows[k - 1]
                )));
            }
        }
        Ok(GzPattern { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        GzPattern { rows }
    }

    /// The rank `d` of the unitary group.
    pub fn d(&self) -> usize {
        self.rows.len()
    }

    /// The irrep label `q_d` as a partition.
    pub fn top(&self) -> Partition {
        Partition::from_sorted(self.rows[0].clone())
    }

    /// Padded top row.
    pub fn top_row(&self) -> &[u32] {
        &self.rows[0]
    }

    /// Row `q_j` padded to `j` entries, `1 ≤ j ≤ d`.
    pub fn row(&self, j: usize) -> &[u32] {
        &self.rows[self.d() - j]
    }

    /// `q_j` as a partition.
    pub fn level(&self, j: usize) -> Partition {
        Partition::from_sorted(self.row(j).to_vec())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// The pattern of `q_{d-1}` obtained by dropping the top row.
    pub fn sub_pattern(&self) -> GzPattern {
        GzPattern {
            rows: self.rows[1..].to_vec(),
        }
    }

    /// Prepends a new top row; used when the recursion climbs one level.
    pub(crate) fn with_top(top: Vec<u32>, below: &GzPattern) -> GzPattern {
        let mut rows = Vec::with_capacity(below.rows.len() + 1);
        rows.push(top);
        rows.extend(below.rows.iter().cloned());
        GzPattern { rows }
    }

    /// Number of boxes labeled `j` in the tableau, for `j = 1..=d`.
    pub fn weight(&self) -> Vec<u32> {
        let d = self.d();
        (1..=d)
            .map(|j| {
                let above: u32 = self.row(j).iter().sum();
                let below: u32 = if j > 1 { self.row(j - 1).iter().sum() } else { 0 };
                above - below
            })
            .collect()
    }

    /// Order used by [`enumerate_gz`]: rows compared top-down below `q_d`,
    /// each in descending lexicographic order.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.rows.iter().zip(&other.rows).skip(1) {
            match b.cmp(a) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for GzPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        gz_to_ssyt(self).fmt(f)
    }
}

/// Rows strictly below `upper` that interlace it, in descending lexicographic
/// order.
fn interlacing_rows(upper: &[u32]) -> Vec<Vec<u32>> {
    let len = upper.len() - 1;
    let mut out = Vec::new();
    let mut cur = vec![0u32; len];
    fn rec(k: usize, upper: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in (upper[k + 1]..=upper[k]).rev() {
            cur[k] = v;
            rec(k + 1, upper, cur, out);
        }
    }
    rec(0, upper, &mut cur, &mut out);
    out
}

fn gz_rows(top: &[u32]) -> Vec<Vec<Vec<u32>>> {
    if top.len() == 1 {
        return vec![vec![top.to_vec()]];
    }
    let mut out = Vec::new();
    for below in interlacing_rows(top) {
        for mut tail in gz_rows(&below) {
            tail.insert(0, top.to_vec());
            out.push(tail);
        }
    }
    out
}

/// Every GZ pattern with top row `λ`, in canonical order. Empty when `λ` has
/// more than `d` parts.
pub fn enumerate_gz(lambda: &Partition, d: usize) -> Vec<GzPattern> {
    if d == 0 || lambda.num_parts() > d {
        return Vec::new();
    }
    gz_rows(&lambda.padded(d))
        .into_iter()
        .map(|rows| GzPattern { rows })
        .collect()
}

/// A semistandard Young tableau, rows listed top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ssyt {
    rows: Vec<Vec<u32>>,
}

impl Ssyt {
    /// Checks the shape is a partition, rows weakly increase and columns
    /// strictly increase.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::arg("empty tableau row"));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::arg("row lengths must be nonincreasing"));
        }
        for row in &rows {
            if row.contains(&0) {
                return Err(Error::arg("tableau entries start at 1"));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::arg(format!("row {row:?} decreases")));
            }
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(lo, hi)| lo <= hi) {
                return Err(Error::arg("columns must strictly increase"));
            }
        }
        Ok(Ssyt { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_sorted(self.rows.iter().map(|r| r.len() as u32).collect())
    }
}

impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&text.join("/"))
    }
}

impl FromStr for Ssyt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ssyt::new(Vec::new());
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::arg(format!("bad tableau entry {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ssyt::new(rows)
    }
}

/// Writes `j` into every box of `q_j` not in `q_{j-1}`.
pub fn gz_to_ssyt(p: &GzPattern) -> Ssyt {
    let d = p.d();
    let top = p.row(d);
    let mut rows: Vec<Vec<u32>> = top
        .iter()
        .filter(|&&len| len > 0)
        .map(|&len| Vec::with_capacity(len as usize))
        .collect();
    for j in 1..=d {
        let cur = p.row(j);
        for (r, row) in rows.iter_mut().enumerate().take(j) {
            let prev = if r < j - 1 { p.row(j - 1)[r] } else { 0 };
            for _ in prev..cur[r] {
                row.push(j as u32);
            }
        }
    }
    Ssyt { rows }
}

/// Inverse of [`gz_to_ssyt`] for entries in `1..=d`.
pub fn ssyt_to_gz(t: &Ssyt, d: usize) -> Result<GzPattern> {
    if d == 0 {
        return Err(Error::arg("d must be positive"));
    }
    if t.rows.len() > d {
        return Err(Error::arg(format!("tableau has more than {d} rows")));
    }
    if t.rows.iter().flatten().any(|&v| v as usize > d) {
        return Err(Error::arg(format!("tableau entry exceeds {d}")));
    }
    let rows = (0..d)
        .map(|k| {
            let j = d - k;
            (0..j)
                .map(|r| {
                    t.rows
                        .get(r)
                        .map_or(0, |row| row.iter().filter(|&&v| v as usize <= j).count() as u32)
                })
                .collect()
        })
        .collect();
    GzPattern::new(rows)
}

/// A Young-Yamanouchi basis vector: the chain `(1) = p_1 ⊂ p_2 ⊂ … ⊂ p_n = λ`,
/// together with its box-addition record `j_1, …, j_{n-1}` where
/// `p_{k+1} = p_k + e_{j_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YyPath {
    steps: Vec<usize>,
    chain: Vec<Partition>,
}

impl YyPath {
    /// The one-box path.
    pub fn single() -> Self {
        YyPath {
            steps: Vec::new(),
            chain: vec![Partition::row(1)],
        }
    }

    /// Builds a path from the row indices (from 1) of the added boxes.
    pub fn from_steps(steps: Vec<usize>) -> Result<Self> {
        let mut path = YyPath::single();
        for &j in &steps {
            path = path
                .extend(j)
                .ok_or_else(|| Error::arg(format!("cannot add a box in row {j} of {}", path.shape())))?;
        }
        Ok(path)
    }

    /// Builds a path from the chain `p_n = λ, …, p_1 = (1)`.
    pub fn from_chain(chain: &[Partition]) -> Result<Self> {
        let mut asc: Vec<&Partition> = chain.iter().collect();
        asc.reverse();
        if asc.first().map(|p| p.parts()) != Some(&[1][..]) {
            return Err(Error::arg("a path must end at (1)"));
        }
        let mut steps = Vec::with_capacity(asc.len() - 1);
        for w in asc.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let rows = hi.num_parts();
            let j = (0..rows)
                .find(|&r| hi.part(r) == lo.part(r) + 1)
                .filter(|&r| {
                    (0..rows.max(lo.num_parts())).all(|s| s == r || hi.part(s) == lo.part(s))
                })
                .ok_or_else(|| Error::arg(format!("{lo} -> {hi} is not a single box")))?;
            steps.push(j + 1);
        }
        YyPath::from_steps(steps)
    }

    /// Appends a box in row `j` (from 1), if the result is a partition.
    pub fn extend(&self, j: usize) -> Option<YyPath> {
        let shape = self.shape();
        let next = partition::add_box(&shape, j, shape.num_parts() + 1)?;
        let mut steps = self.steps.clone();
        steps.push(j);
        let mut chain = self.chain.clone();
        chain.push(next);
        Some(YyPath { steps, chain })
    }

    pub fn shape(&self) -> Partition {
        self.chain.last().cloned().expect("paths are nonempty")
    }

    /// Number of boxes `n`.
    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    /// `p_k` for `1 ≤ k ≤ n`.
    pub fn at(&self, k: usize) -> &Partition {
        &self.chain[k - 1]
    }

    /// The chain from `λ` down to `(1)`.
    pub fn chain(&self) -> Vec<Partition> {
        self.chain.iter().rev().cloned().collect()
    }
}

impl fmt::Display for YyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.steps.iter().map(usize::to_string).collect();
        f.write_str(&text.join(","))
    }
}

impl FromStr for YyPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(YyPath::single());
        }
        let steps = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::arg(format!("bad path step {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        YyPath::from_steps(steps)
    }
}

/// All paths ending at `λ`, ordered by rank.
pub fn enumerate_paths(lambda: &Partition) -> Vec<YyPath> {
    if lambda.is_empty() {
        return Vec::new();
    }
    if lambda.size() == 1 {
        return vec![YyPath::single()];
    }
    let mut out = Vec::new();
    for mu in remove_box_set(lambda) {
        let j = (0..lambda.num_parts())
            .find(|&r| lambda.part(r) != mu.part(r))
            .expect("one row differs")
            + 1;
        for p in enumerate_paths(&mu) {
            out.push(p.extend(j).expect("box addition inverts removal"));
        }
    }
    out
}

/// `1 + Σ_{k=2}^{n} Σ_{μ ∈ p_k − □, μ before p_{k-1}} dim P_μ`.
pub fn rank_path(p: &YyPath) -> usize {
    let mut rank = 1;
    for k in 2..=p.len() {
        let prev = p.at(k - 1);
        rank += remove_box_set(p.at(k))
            .iter()
            .take_while(|mu| mu.canonical_cmp(prev) == Ordering::Less)
            .map(dim_p_usize)
            .sum::<usize>();
    }
    rank
}

/// Inverse of [`rank_path`]; `rank` runs from 1 to `dim P_λ`.
pub fn unrank_path(lambda: &Partition, rank: usize) -> Result<YyPath> {
    let dim = if lambda.is_empty() { 0 } else { dim_p_usize(lambda) };
    if rank == 0 || rank > dim {
        return Err(Error::arg(format!("rank {rank} outside 1..={dim} for {lambda}")));
    }
    let mut chain = vec![lambda.clone()];
    let mut cur = lambda.clone();
    let mut r = rank;
    while cur.size() > 1 {
        let mut next = None;
        for mu in remove_box_set(&cur) {
            let dm = dim_p_usize(&mu);
            if r <= dm {
                next = Some(mu);
                break;
            }
            r -= dm;
        }
        cur = next.expect("rank within range");
        chain.push(cur.clone());
    }
    YyPath::from_chain(&chain)
}

/// Smallest `w` with `2^w ≥ count`.
pub fn ceil_log2(count: usize) -> usize {
    if count <= 1 {
        0
    } else {
        (usize::BITS - (count - 1).leading_zeros()) as usize
    }
}

/// A fixed-width bit string, most significant bit first within each field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitString(pub Vec<bool>);

impl BitString {
    fn push_field(&mut self, value: usize, width: usize) {
        for b in (0..width).rev() {
            self.0.push((value >> b) & 1 == 1);
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::arg(format!("bad bit {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BitString)
    }
}

/// Field widths of the `|λ⟩|q⟩|p⟩` register layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegisterLayout {
    pub n: usize,
    pub d: usize,
}

impl RegisterLayout {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::arg("n and d must be positive"));
        }
        Ok(RegisterLayout { n, d })
    }

    /// Width of every row-length field.
    pub fn part_width(&self) -> usize {
        ceil_log2(self.n + 1)
    }

    /// Width of every `j_k` field.
    pub fn step_width(&self) -> usize {
        ceil_log2(self.d)
    }

    pub fn lambda_bits(&self) -> usize {
        self.d * self.part_width()
    }

    pub fn gz_bits(&self) -> usize {
        self.d * (self.d + 1) / 2 * self.part_width()
    }

    pub fn path_bits(&self) -> usize {
        (self.n - 1) * self.step_width()
    }

    pub fn total_bits(&self) -> usize {
        self.lambda_bits() + self.gz_bits() + self.path_bits()
    }
}

/// Packs `λ`, the full triangular GZ array and `j_1 − 1, …, j_{n−1} − 1`.
pub fn encode_registers(
    lambda: &Partition,
    q: &GzPattern,
    p: &YyPath,
    n: usize,
    d: usize,
) -> Result<BitString> {
    let layout = RegisterLayout::new(n, d)?;
    if lambda.size() != n || lambda.num_parts() > d {
        return Err(Error::arg(format!("{lambda} is not a partition of {n} into ≤ {d} parts")));
    }
    if q.d() != d || q.top() != *lambda {
        return Err(Error::arg("GZ pattern does not belong to λ"));
    }
    if p.shape() != *lambda {
        return Err(Error::arg("path does not end at λ"));
    }
    if p.steps().iter().any(|&j| j > d) {
        return Err(Error::arg("path adds a box below row d"));
    }
    let (pw, sw) = (layout.part_width(), layout.step_width());
    let mut bits = BitString(Vec::with_capacity(layout.total_bits()));
    for v in lambda.padded(d) {
        bits.push_field(v as usize, pw);
    }
    for row in q.rows() {
        for &v in row {
            bits.push_field(v as usize, pw);
        }
    }
    for &j in p.steps() {
        bits.push_field(j - 1, sw);
    }
    Ok(bits)
}

/// Inverse of [`encode_registers`].
pub fn decode_registers(
    bits: &BitString,
    n: usize,
    d: usize,
) -> Result<(Partition, GzPattern, YyPath)> {
    let layout = RegisterLayout::new(n, d)?;
    if bits.len() != layout.total_bits() {
        return Err(Error::arg(format!(
            "expected {} bits, got {}",
            layout.total_bits(),
            bits.len()
        )));
    }
    let mut pos = 0;
    let mut take = |width: usize| {
        let v = bits.0[pos..pos + width]
            .iter()
            .fold(0usize, |acc, &b| (acc << 1) | b as usize);
        pos += width;
        v
    };
    let (pw, sw) = (layout.part_width(), layout.step_width());
    let lam: Vec<u32> = (0..d).map(|_| take(pw) as u32).collect();
    let lambda = Partition::new(lam.clone())?;
    let rows: Vec<Vec<u32>> = (0..d)
        .map(|k| (0..d - k).map(|_| take(pw) as u32).collect())
        .collect();
    let steps: Vec<usize> = (0..n - 1).map(|_| take(sw) + 1).collect();
    if lambda.size() != n {
        return Err(Error::arg(format!("{lambda} does not have {n} boxes")));
    }
    if rows[0] != lam {
        return Err(Error::arg("GZ top row differs from λ"));
    }
    let q = GzPattern::new(rows)?;
    if steps.iter().any(|&j| j > d) {
        return Err(Error::arg("path step exceeds d"));
    }
    let p = YyPath::from_steps(steps)?;
    if p.shape() != lambda {
        return Err(Error::arg("path does not end at λ"));
    }
    Ok((lambda, q, p))
}
