//! Lattice points of the dilated standard simplex `r·Δ_d`, their grading by a
//! weight vector, and the generating polynomials and series built from it.
//!
//! Points are always produced in lexicographic order: `a < b` iff the leftmost
//! nonzero entry of `a - b` is negative. That is the derived `Ord` on
//! [`LatticePoint`].

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{binomial, series_recip_truncated, BiSeries, Polynomial};

/// The dilation `r·Δ_d = { x ∈ R^d : x_i ≥ 0, Σ x_i ≤ r }`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DilatedSimplex {
    d: usize,
    r: u32,
}

impl DilatedSimplex {
    pub fn new(d: usize, r: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(DilatedSimplex { d, r })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// The next dilation `(r+1)·Δ_d`.
    pub fn dilate(&self) -> DilatedSimplex {
        DilatedSimplex {
            d: self.d,
            r: self.r + 1,
        }
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        p.dim() == self.d && p.sum() <= u64::from(self.r)
    }

    /// Checked constructor for a lattice point of this simplex.
    pub fn point(&self, coords: Vec<u32>) -> Result<LatticePoint> {
        if coords.len() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                actual: coords.len(),
            });
        }
        let p = LatticePoint { coords };
        if p.sum() > u64::from(self.r) {
            return Err(Error::OutsideSimplex {
                sum: p.sum(),
                r: self.r,
            });
        }
        Ok(p)
    }

    /// Streaming enumeration in lexicographic order.
    pub fn lattice_points(&self) -> LatticePoints {
        LatticePoints {
            r: u64::from(self.r),
            next: Some(vec![0; self.d]),
        }
    }
}

/// A vector of nonnegative integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint {
    coords: Vec<u32>,
}

impl LatticePoint {
    pub fn new(coords: Vec<u32>) -> Self {
        LatticePoint { coords }
    }

    pub fn origin(d: usize) -> Self {
        LatticePoint { coords: vec![0; d] }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn sum(&self) -> u64 {
        self.coords.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn weight(&self, w: &WeightVector) -> Result<u64> {
        w.check_dim(self.dim())?;
        Ok(self.weight_unchecked(w))
    }

    fn weight_unchecked(&self, w: &WeightVector) -> u64 {
        self.coords
            .iter()
            .zip(&w.0)
            .map(|(&c, &wi)| u64::from(c) * u64::from(wi))
            .sum()
    }
}

/// Positive integer weights, one per coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::NonPositiveWeight(i));
        }
        Ok(WeightVector(weights))
    }

    /// `(1, 1, …, 1)`: grading by coordinate sum.
    pub fn ones(d: usize) -> Self {
        WeightVector(vec![1; d])
    }

    /// `(1, 2, …, d)`: grading by the staircase weight `Σ k·a_k`.
    pub fn staircase(d: usize) -> Self {
        WeightVector((1..=d as u32).collect())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest weight any point of `r·Δ_d` attains.
    pub fn max_level(&self, r: u32) -> u64 {
        u64::from(self.0.iter().copied().max().unwrap_or(0)) * u64::from(r)
    }

    fn check_dim(&self, d: usize) -> Result<()> {
        if self.0.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                actual: self.0.len(),
            });
        }
        Ok(())
    }
}

/// All lattice points sharing one weight level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceClass {
    pub level: u64,
    pub points: Vec<LatticePoint>,
}

/// Lexicographic successor iterator over the lattice points of a dilation.
#[derive(Debug, Clone)]
pub struct LatticePoints {
    r: u64,
    next: Option<Vec<u32>>,
}

impl Iterator for LatticePoints {
    type Item = LatticePoint;

    fn next(&mut self) -> Option<LatticePoint> {
        let current = self.next.take()?;
        // The successor increments the rightmost coordinate whose prefix sum
        // is still below r, zeroing everything after it.
        let mut prefix = 0u64;
        let mut pivot = None;
        for (i, &c) in current.iter().enumerate() {
            prefix += u64::from(c);
            if prefix < self.r {
                pivot = Some(i);
            }
        }
        if let Some(i) = pivot {
            let mut succ = current.clone();
            succ[i] += 1;
            succ[i + 1..].iter_mut().for_each(|c| *c = 0);
            self.next = Some(succ);
        }
        Some(LatticePoint { coords: current })
    }
}

pub fn enumerate_lattice_points(s: &DilatedSimplex) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(s.d);
    descend(s.d, s.r, &mut prefix, &mut out);
    out
}

fn descend(d: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<LatticePoint>) {
    if prefix.len() == d {
        out.push(LatticePoint {
            coords: prefix.clone(),
        });
        return;
    }
    for c in 0..=budget {
        prefix.push(c);
        descend(d, budget - c, prefix, out);
        prefix.pop();
    }
}

/// Ehrhart count `C(r+d, d)`, without enumeration.
pub fn count_lattice_points(s: &DilatedSimplex) -> BigInt {
    binomial(u64::from(s.r) + s.d as u64, s.d as u64)
}

/// Groups every lattice point by its weight. Levels run from 0 to the largest
/// attainable weight; unattained levels appear as empty classes.
pub fn slice_classes(s: &DilatedSimplex, w: &WeightVector) -> Result<Vec<SliceClass>> {
    w.check_dim(s.d)?;
    let mut classes: Vec<SliceClass> = (0..=w.max_level(s.r))
        .map(|level| SliceClass {
            level,
            points: Vec::new(),
        })
        .collect();
    for p in s.lattice_points() {
        let level = p.weight_unchecked(w) as usize;
        classes[level].points.push(p);
    }
    Ok(classes)
}

/// Class sizes only, streaming the points instead of collecting them.
pub fn slice_counts(s: &DilatedSimplex, w: &WeightVector) -> Result<Vec<BigInt>> {
    w.check_dim(s.d)?;
    let mut counts = vec![0u64; w.max_level(s.r) as usize + 1];
    for p in s.lattice_points() {
        counts[p.weight_unchecked(w) as usize] += 1;
    }
    Ok(counts.into_iter().map(BigInt::from).collect())
}

/// `T_r(t) = Σ_{k=0}^{r} C(k+d-1, d-1) t^k`.
pub fn dilation_polynomial(s: &DilatedSimplex) -> Polynomial {
    let d = s.d as u64;
    Polynomial::new(
        (0..=u64::from(s.r))
            .map(|k| binomial(k + d - 1, d - 1))
            .collect(),
    )
}

/// Generating polynomial of slice sizes under `w`: the coefficient of `z^m`
/// counts lattice points of weight `m`.
///
/// Counted by dynamic programming over coordinates on `(coordinate sum,
/// weight)` states, so no point is ever materialized.
pub fn weighted_polynomial(s: &DilatedSimplex, w: &WeightVector) -> Result<Polynomial> {
    w.check_dim(s.d)?;
    let r = s.r as usize;
    let max_level = w.max_level(s.r) as usize;
    // table[sum][weight] = number of prefixes with that coordinate sum and weight
    let mut table = vec![vec![BigInt::zero(); max_level + 1]; r + 1];
    table[0][0] = BigInt::one();
    for &wi in w.as_slice() {
        let wi = wi as usize;
        let mut next = vec![vec![BigInt::zero(); max_level + 1]; r + 1];
        for (sum, row) in table.iter().enumerate() {
            for (level, count) in row.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                for c in 0..=(r - sum) {
                    let lvl = level + c * wi;
                    if lvl > max_level {
                        break;
                    }
                    next[sum + c][lvl] += count;
                }
            }
        }
        table = next;
    }
    let mut coeffs = vec![BigInt::zero(); max_level + 1];
    for row in &table {
        for (level, c) in row.iter().enumerate() {
            coeffs[level] += c;
        }
    }
    Ok(Polynomial::new(coeffs))
}

/// `Σ_r C(r+d, d) z^r = 1/(1-z)^{d+1}`, truncated at `z^max_z`.
pub fn ehrhart_generating_series(d: usize, max_z: usize) -> Result<Polynomial> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let one_minus_z = BiSeries::from_terms(0, max_z, &[(0, 0, 1), (0, 1, -1)]);
    let den = (0..d).fold(one_minus_z.clone(), |acc, _| {
        acc.mul_truncated(&one_minus_z)
    });
    Ok(series_recip_truncated(&den, 0, max_z)?.t_coefficient(0))
}

/// Denominator `(1 - z)(1 - tz)^d` of the dilation generating series.
pub fn dilation_series_denominator(d: usize, max_t: usize, max_z: usize) -> BiSeries {
    let one_minus_z = BiSeries::from_terms(max_t, max_z, &[(0, 0, 1), (0, 1, -1)]);
    let one_minus_tz = BiSeries::from_terms(max_t, max_z, &[(0, 0, 1), (1, 1, -1)]);
    (0..d).fold(one_minus_z, |acc, _| acc.mul_truncated(&one_minus_tz))
}

/// `G(t, z) = Σ_r T_r(t) z^r = 1 / ((1 - z)(1 - tz)^d)`, truncated.
///
/// The numerator is 1, not `z`: with a `z` numerator the `z^0` coefficient
/// would vanish although `T_0(t) = 1`.
pub fn dilation_generating_series(d: usize, max_t: usize, max_z: usize) -> Result<BiSeries> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    series_recip_truncated(&dilation_series_denominator(d, max_t, max_z), max_t, max_z)
}
