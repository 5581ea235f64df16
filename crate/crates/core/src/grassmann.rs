//! Partitions attached to exponent vectors, Grassmannian permutations and the
//! Poincaré polynomial of `Gr(d, d+r)`.
//!
//! An exponent vector `a = (a_1, …, a_d)` carries two partitions of its
//! staircase weight `w_a = Σ k·a_k`:
//!
//! - the α-partition, with `a_i` parts equal to `i`;
//! - the β-vector, `λ*_k = a_k + a_{k+1} + … + a_d`, always of length `d`.
//!
//! They are transposes of each other. The β-vector of a lattice point of `r·Δ_d`
//! fits in the `d × r` box, and the Grassmannian permutation built from it has
//! exactly `w_a` inversions.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::Polynomial;

/// Staircase weight `Σ_k k·a_k`.
pub fn weight_of(a: &[u32]) -> u64 {
    a.iter()
        .enumerate()
        .map(|(k, &ak)| (k as u64 + 1) * u64::from(ak))
        .sum()
}

/// Weakly decreasing positive parts. The empty partition is the partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing);
        }
        if parts.last() == Some(&0) {
            return Err(Error::ZeroPart);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes `|λ|`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Transpose of the Young diagram: `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// `Σ_k (2k - 1)·λ_k` with parts indexed in decreasing order, `k ≥ 1`.
    ///
    /// Equals the sum of squared column heights, i.e.
    /// `self.conjugate().sum_of_squares()`.
    pub fn odd_weighted_sum(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(k, &p)| (2 * k as u64 + 1) * u64::from(p))
            .sum()
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.parts
            .iter()
            .map(|&p| u64::from(p) * u64::from(p))
            .sum()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Partition::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// `λ*_1 ≥ … ≥ λ*_d ≥ 0`, exactly `d` entries, zeros kept.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct BetaVector {
    entries: Vec<u32>,
}

impl BetaVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing);
        }
        Ok(BetaVector { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn d(&self) -> usize {
        self.entries.len()
    }

    /// Largest entry, the number of columns the diagram needs.
    pub fn width(&self) -> u32 {
        self.entries.first().copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.entries.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn to_partition(&self) -> Partition {
        Partition {
            parts: self.entries.iter().copied().filter(|&e| e > 0).collect(),
        }
    }

    /// Consecutive differences `(λ*_1 - λ*_2, …, λ*_{d-1} - λ*_d, λ*_d)`.
    pub fn exponents(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.entries.windows(2).map(|w| w[0] - w[1]).collect();
        if let Some(&last) = self.entries.last() {
            out.push(last);
        }
        out
    }
}

impl<'de> Deserialize<'de> for BetaVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        BetaVector::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Partition with `a_i` parts equal to `i`.
pub fn alpha_partition(a: &[u32]) -> Partition {
    let parts = a
        .iter()
        .enumerate()
        .rev()
        .flat_map(|(i, &ai)| std::iter::repeat_n(i as u32 + 1, ai as usize))
        .collect();
    Partition { parts }
}

/// Suffix sums `λ*_k = Σ_{i ≥ k} a_i`.
pub fn beta_partition(a: &[u32]) -> BetaVector {
    let mut entries: Vec<u32> = a
        .iter()
        .rev()
        .scan(0u32, |acc, &ai| {
            *acc += ai;
            Some(*acc)
        })
        .collect();
    entries.reverse();
    BetaVector { entries }
}

/// Recovers the exponent vector from a β-vector given as a raw sequence.
pub fn exponent_from_beta(b: &[u32]) -> Result<Vec<u32>> {
    Ok(BetaVector::new(b.to_vec())?.exponents())
}

/// Upper triangular `d × d` matrix whose row `i` holds `a_i, a_{i+1}, …, a_d`
/// in columns `i..d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularMatrix {
    rows: Vec<Vec<u32>>,
}

impl TriangularMatrix {
    pub fn d(&self) -> usize {
        self.rows.len()
    }

    /// Entry at 0-based `(row, col)`; zero below the diagonal.
    pub fn entry(&self, row: usize, col: usize) -> u32 {
        if col < row {
            0
        } else {
            self.rows[row][col - row]
        }
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|&e| u64::from(e)).sum())
            .collect()
    }

    pub fn column_sums(&self) -> Vec<u64> {
        (0..self.d())
            .map(|col| (0..=col).map(|row| u64::from(self.entry(row, col))).sum())
            .collect()
    }

    /// Column `k` (1-based) holds `k` copies of `a_k`.
    pub fn exponents(&self) -> Vec<u32> {
        self.column_sums()
            .iter()
            .enumerate()
            .map(|(k, &s)| (s / (k as u64 + 1)) as u32)
            .collect()
    }

    /// Total of all entries, the weight `w_a`.
    pub fn total(&self) -> u64 {
        self.row_sums().iter().sum()
    }
}

pub fn triangular_matrix(a: &[u32]) -> TriangularMatrix {
    TriangularMatrix {
        rows: (0..a.len()).map(|i| a[i..].to_vec()).collect(),
    }
}

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    /// `c_i = #{j > i : w_i > w_j}`.
    pub fn code(&self) -> PermutationCode {
        let w = &self.one_line;
        PermutationCode(
            (0..w.len())
                .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
                .collect(),
        )
    }

    /// Inversion count, by direct pair counting.
    pub fn length(&self) -> u64 {
        let w = &self.one_line;
        let mut inversions = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inversions += 1;
                }
            }
        }
        inversions
    }

    /// 1-based positions `i` with `w_i > w_{i+1}`.
    pub fn descents(&self) -> Vec<usize> {
        self.one_line
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Permutation::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Lehmer code of a permutation; `c_i ≤ n - i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PermutationCode(pub Vec<usize>);

impl PermutationCode {
    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }
}

pub fn permutation_code(one_line: &[usize]) -> Result<PermutationCode> {
    Ok(Permutation::new(one_line.to_vec())?.code())
}

pub fn permutation_length(w: &Permutation) -> u64 {
    w.length()
}

/// Permutation with at most one descent, located at position `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GrassmannianPermutation {
    permutation: Permutation,
    d: usize,
}

impl GrassmannianPermutation {
    pub fn permutation(&self) -> &Permutation {
        &self.permutation
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn descent_position(&self) -> Option<usize> {
        self.permutation.descents().first().copied()
    }

    /// First `d` code entries sorted in weakly decreasing order.
    pub fn recover_beta(&self) -> BetaVector {
        let mut head: Vec<u32> = self.permutation.code().0[..self.d]
            .iter()
            .map(|&c| c as u32)
            .collect();
        head.sort_unstable_by(|a, b| b.cmp(a));
        BetaVector { entries: head }
    }
}

/// `w_i = i + λ*_{d+1-i}` for `i ≤ d`, remaining values increasing after `d`.
pub fn grassmannian_permutation(b: &BetaVector, n: usize) -> Result<GrassmannianPermutation> {
    let d = b.d();
    if n < d || b.width() as usize > n - d {
        return Err(Error::PartitionTooWide {
            width: b.width(),
            d,
            n,
        });
    }
    let head: Vec<usize> = (1..=d).map(|i| i + b.entries[d - i] as usize).collect();
    let mut used = vec![false; n + 1];
    for &v in &head {
        used[v] = true;
    }
    let one_line = head
        .into_iter()
        .chain((1..=n).filter(|&v| !used[v]))
        .collect();
    Ok(GrassmannianPermutation {
        permutation: Permutation { one_line },
        d,
    })
}

/// β-vectors fitting in the `d × r` box, i.e. weakly decreasing `d`-vectors
/// with entries in `0..=r`, in lexicographic order.
pub fn enumerate_box_partitions(d: usize, r: u32) -> Result<Vec<BetaVector>> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    fn fill(d: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<BetaVector>) {
        if prefix.len() == d {
            out.push(BetaVector {
                entries: prefix.clone(),
            });
            return;
        }
        for e in 0..=cap {
            prefix.push(e);
            fill(d, e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(d, r, &mut Vec::with_capacity(d), &mut out);
    Ok(out)
}

/// `∏_{i=1}^{n} (1 - t^i)`.
fn q_factorial_product(n: u32) -> Polynomial {
    (1..=n as usize)
        .map(|i| &Polynomial::one() - &Polynomial::monomial(BigInt::one(), i))
        .product()
}

/// Gaussian binomial `[d+r choose d]_t` as the exact quotient of products of
/// `(1 - t^i)`.
pub fn gaussian_binomial(d: usize, r: u32) -> Polynomial {
    let numerator = q_factorial_product(d as u32 + r);
    let denominator = &q_factorial_product(d as u32) * &q_factorial_product(r);
    numerator
        .div_exact(&denominator)
        .expect("q-binomial quotient is exact in Z[t]")
}

/// Gaussian binomial by the q-Pascal rule
/// `G(d, r) = G(d-1, r) + t^d·G(d, r-1)`, `G(0, r) = G(d, 0) = 1`.
pub fn gaussian_binomial_recurrence(d: usize, r: u32) -> Polynomial {
    let r = r as usize;
    // row[j] holds G(i, j) for the current i
    let mut row = vec![Polynomial::one(); r + 1];
    for i in 1..=d {
        let shift = Polynomial::monomial(BigInt::one(), i);
        for j in 1..=r {
            let lifted = &shift * &row[j - 1];
            row[j] = &row[j] + &lifted;
        }
    }
    row.pop().unwrap_or_else(Polynomial::one)
}

/// `Σ_{λ ⊆ d×r box} t^{|λ|}` by enumerating the box partitions.
pub fn poincare_polynomial(d: usize, r: u32) -> Result<Polynomial> {
    let mut counts = vec![0u64; d * r as usize + 1];
    for b in enumerate_box_partitions(d, r)? {
        counts[b.size() as usize] += 1;
    }
    Ok(Polynomial::from_u64s(&counts))
}

/// Families of monomials whose α- and β-partitions coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SelfConjugateFamily {
    /// `t_{d/2}^{d/2} t_d^{d/2}`, even `d`.
    TwoBlock,
    /// `t_1^{d-1} t_d`, `d ≥ 2`.
    Hook,
    /// `t_{d-2} t_{d-1} t_d^{d-2}`, `d ≥ 3`.
    SteppedSquare,
}

impl SelfConjugateFamily {
    pub const ALL: [SelfConjugateFamily; 3] = [Self::TwoBlock, Self::Hook, Self::SteppedSquare];

    /// Exponent vector in `d` variables, or `None` when the family has no
    /// member in that dimension.
    pub fn exponents(self, d: usize) -> Option<Vec<u32>> {
        let mut a = vec![0u32; d];
        match self {
            Self::TwoBlock if d >= 2 && d.is_multiple_of(2) => {
                a[d / 2 - 1] += (d / 2) as u32;
                a[d - 1] += (d / 2) as u32;
            }
            Self::Hook if d >= 2 => {
                a[0] += (d - 1) as u32;
                a[d - 1] += 1;
            }
            Self::SteppedSquare if d >= 3 => {
                a[d - 3] += 1;
                a[d - 2] += 1;
                a[d - 1] += (d - 2) as u32;
            }
            _ => return None,
        }
        Some(a)
    }
}
