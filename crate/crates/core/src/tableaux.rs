//! One-row semistandard tableaux over the alphabet `{1, …, d}` and the
//! monomials `t_1^{a_1} ⋯ t_d^{a_d}` they encode.
//!
//! A tableau with `k` boxes corresponds to the lattice point whose `j`-th
//! coordinate is the multiplicity of the letter `j`, so the fillings with at
//! most `r` boxes are in graded bijection with the points of `r·Δ_d`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::Polynomial;
use crate::simplex::{enumerate_lattice_points, DilatedSimplex, LatticePoint};

/// Weakly increasing word of positive letters. The empty word is the empty
/// tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct RowTableau {
    entries: Vec<u32>,
}

impl RowTableau {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::ZeroEntry);
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotSemistandard);
        }
        Ok(RowTableau { entries })
    }

    pub fn empty() -> Self {
        RowTableau {
            entries: Vec::new(),
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Number of boxes.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest letter used, 0 for the empty tableau.
    pub fn max_entry(&self) -> u32 {
        self.entries.last().copied().unwrap_or(0)
    }

    /// Multiplicity of letter `letter`.
    pub fn multiplicity(&self, letter: u32) -> usize {
        self.entries.iter().filter(|&&e| e == letter).count()
    }
}

impl<'de> Deserialize<'de> for RowTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<u32>::deserialize(d)?;
        RowTableau::new(entries).map_err(serde::de::Error::custom)
    }
}

/// Exponent vector of `t_1^{a_1} ⋯ t_d^{a_d}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn from_tableau(t: &RowTableau, d: usize) -> Result<Self> {
        Ok(Monomial {
            exponents: tableau_to_point(t, d)?.into_coords(),
        })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&a| u64::from(a)).sum()
    }

    /// Membership in `W_d^r`.
    pub fn is_grassmannian_in(&self, r: u32) -> bool {
        minimal_grassmannian_index(self) <= u64::from(r)
    }

    pub fn eval(&self, values: &[BigInt]) -> Result<BigInt> {
        if values.len() != self.exponents.len() {
            return Err(Error::DimensionMismatch {
                expected: self.exponents.len(),
                actual: values.len(),
            });
        }
        Ok(self
            .exponents
            .iter()
            .zip(values)
            .map(|(&a, x)| x.pow(a))
            .product())
    }
}

/// All one-row fillings with at most `r` boxes and letters in `1..=d`,
/// ordered by length, then lexicographically. Starts with the empty tableau.
pub fn enumerate_row_tableaux(d: usize, r: u32) -> Result<Vec<RowTableau>> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut out = vec![RowTableau::empty()];
    let mut layer = vec![Vec::<u32>::new()];
    for _ in 0..r {
        // Extending each word of the previous layer by letters no smaller than
        // its last one keeps the layer in lexicographic order.
        layer = layer
            .iter()
            .flat_map(|word| {
                let start = word.last().copied().unwrap_or(1);
                (start..=d as u32).map(move |letter| {
                    let mut w = word.clone();
                    w.push(letter);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().map(|w| RowTableau { entries: w.clone() }));
    }
    Ok(out)
}

/// Letter multiplicities of `t` as a point of `Z_{≥0}^d`.
pub fn tableau_to_point(t: &RowTableau, d: usize) -> Result<LatticePoint> {
    let mut coords = vec![0u32; d];
    for &e in &t.entries {
        if e == 0 || e as usize > d {
            return Err(Error::EntryOutOfRange { entry: e, d });
        }
        coords[e as usize - 1] += 1;
    }
    Ok(LatticePoint::new(coords))
}

/// The unique weakly increasing word with letter `j` repeated `v_j` times.
pub fn point_to_tableau(v: &LatticePoint) -> RowTableau {
    let entries = v
        .coords()
        .iter()
        .enumerate()
        .flat_map(|(j, &mult)| std::iter::repeat_n(j as u32 + 1, mult as usize))
        .collect();
    RowTableau { entries }
}

/// Number of semistandard fillings of the one-row shape `(k)` from `1..=d`,
/// by the product `∏_{i<j} (λ_i - λ_j + j - i) / (j - i)` with `λ = (k, 0, …, 0)`.
pub fn count_ssyt_row(d: usize, k: u32) -> BigInt {
    let mut shape = vec![0i64; d];
    if let Some(first) = shape.first_mut() {
        *first = i64::from(k);
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..d {
        for j in i + 1..d {
            let gap = (j - i) as i64;
            num *= shape[i] - shape[j] + gap;
            den *= gap;
        }
    }
    num / den
}

/// Graded count of the d-filling set: coefficient of `t^k` is the number of
/// `k`-box tableaux.
pub fn semistandard_polynomial(d: usize, r: u32) -> Result<Polynomial> {
    let mut counts = vec![0u64; r as usize + 1];
    for t in enumerate_row_tableaux(d, r)? {
        counts[t.len()] += 1;
    }
    Ok(Polynomial::from_u64s(&counts))
}

/// `W_d^r`: monomials whose exponent vectors are the lattice points of `r·Δ_d`,
/// in lexicographic order.
pub fn grassmannian_monomials(d: usize, r: u32) -> Result<Vec<Monomial>> {
    let s = DilatedSimplex::new(d, r)?;
    Ok(enumerate_lattice_points(&s)
        .into_iter()
        .map(|p| Monomial {
            exponents: p.into_coords(),
        })
        .collect())
}

/// Smallest `r` with the monomial in `W_d^r`: its total degree.
pub fn minimal_grassmannian_index(m: &Monomial) -> u64 {
    m.degree()
}

/// Value of the character `Σ_{T} t^{v(T)}` over all fillings with at most `r`
/// boxes, at `t = values`.
///
/// This is `h_0 + h_1 + … + h_r` evaluated at `values`, computed by adding one
/// letter at a time: `h_k(x_1..x_j) = h_k(x_1..x_{j-1}) + x_j·h_{k-1}(x_1..x_j)`.
pub fn character_evaluate(d: usize, r: u32, values: &[BigInt]) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    if values.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            actual: values.len(),
        });
    }
    let r = r as usize;
    let mut h = vec![BigInt::zero(); r + 1];
    h[0] = BigInt::one();
    for x in values {
        for k in 1..=r {
            let prev = &h[k - 1] * x;
            h[k] += prev;
        }
    }
    Ok(h.into_iter().sum())
}

/// The same character through the bialternant formula
/// `s_(k) = det(x_i^{λ_j + d - j}) / det(x_i^{d - j})`, summed over `k ≤ r`.
///
/// Only defined when `values` are pairwise distinct; otherwise the Vandermonde
/// denominator vanishes.
pub fn character_bialternant(d: usize, r: u32, values: &[BigInt]) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    if values.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            actual: values.len(),
        });
    }
    let alternant = |shape: &[u32]| -> BigInt {
        let matrix: Vec<Vec<BigInt>> = values
            .iter()
            .map(|x| {
                (0..d)
                    .map(|j| x.pow(shape[j] + (d - 1 - j) as u32))
                    .collect()
            })
            .collect();
        determinant(matrix)
    };
    let vandermonde = alternant(&vec![0; d]);
    if vandermonde.is_zero() {
        return Err(Error::RepeatedValues);
    }
    let mut total = BigInt::zero();
    for k in 0..=r {
        let mut shape = vec![0; d];
        shape[0] = k;
        total += alternant(&shape) / &vandermonde;
    }
    Ok(total)
}

/// Fraction-free (Bareiss) elimination.
fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    match n {
        0 => BigInt::one(),
        _ => sign * &m[n - 1][n - 1],
    }
}
