//! Exact univariate polynomials and truncated bivariate power series over
//! arbitrary-precision integers.
//!
//! Polynomials are dense: `coeffs[k]` is the coefficient of `t^k`. The zero
//! polynomial is the empty coefficient vector, so the leading coefficient of
//! any stored polynomial is nonzero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Degree of a polynomial. The zero polynomial has degree `MinusInfinity`,
/// which orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Polynomial::new(coeffs)
    }

    /// Builds a polynomial from coefficients in ascending degree, dropping
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Keeps only the terms of degree at most `max_deg`.
    pub fn truncate(&self, max_deg: usize) -> Polynomial {
        Polynomial::new(self.coeffs.iter().take(max_deg + 1).cloned().collect())
    }

    /// True when `coeffs[k] == coeffs[deg - k]` for every `k`.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Exact quotient `self / divisor` in `Z[t]`.
    ///
    /// Fails with [`Error::NonExactDivision`] as soon as a long-division step
    /// needs a non-integral quotient coefficient or leaves a nonzero remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let lead = divisor.leading_coeff().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        let n = self.coeffs.len();
        let m = divisor.coeffs.len();
        if n < m {
            return Err(Error::NonExactDivision);
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let top = &rem[k + m - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NonExactDivision);
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        Ok(Polynomial::new(quot))
    }

    /// Plain-text rendering in ascending degree: `1 + 3*t + 6*t^2`.
    pub fn to_plain(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let term = match k {
                0 => magnitude.to_string(),
                _ => {
                    let power = if k == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{k}")
                    };
                    if magnitude.is_one() {
                        power
                    } else {
                        format!("{magnitude}*{power}")
                    }
                }
            };
            out.push_str(&term);
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain("t"))
    }
}

fn add_coeffs(p: &[BigInt], q: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if p.len() >= q.len() { (p, q) } else { (q, p) };
    let mut out = long.to_vec();
    for (o, c) in out.iter_mut().zip(short) {
        *o += c;
    }
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::new(add_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}

fn serialize_bigints<S: Serializer>(
    coeffs: &[BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(coeffs.len()))?;
    for c in coeffs {
        seq.serialize_element(&c.to_string())?;
    }
    seq.end()
}

fn parse_bigint<E: de::Error>(s: &str) -> std::result::Result<BigInt, E> {
    s.parse::<BigInt>()
        .map_err(|_| E::custom(format!("invalid decimal integer {s:?}")))
}

/// Serialized as a JSON array of decimal strings, index = degree.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_bigints(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct CoeffVisitor;
        impl<'de> Visitor<'de> for CoeffVisitor {
            type Value = Polynomial;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of decimal coefficient strings")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Polynomial, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(s) = seq.next_element::<String>()? {
                    coeffs.push(parse_bigint(&s)?);
                }
                Ok(Polynomial::new(coeffs))
            }
        }
        d.deserialize_seq(CoeffVisitor)
    }
}

/// Exact binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    // Each partial product is itself a binomial coefficient, so every division is exact.
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

/// Bivariate power series in `t` and `z`, truncated to the rectangle
/// `t^0..=t^max_t`, `z^0..=z^max_z`.
///
/// `coeffs[i][j]` is the coefficient of `t^i z^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    max_t: usize,
    max_z: usize,
    coeffs: Vec<Vec<BigInt>>,
}

impl BiSeries {
    pub fn zero(max_t: usize, max_z: usize) -> Self {
        BiSeries {
            max_t,
            max_z,
            coeffs: vec![vec![BigInt::zero(); max_z + 1]; max_t + 1],
        }
    }

    pub fn one(max_t: usize, max_z: usize) -> Self {
        let mut s = BiSeries::zero(max_t, max_z);
        s.coeffs[0][0] = BigInt::one();
        s
    }

    /// Builds a series from `(t_power, z_power, coefficient)` terms; terms
    /// outside the window are dropped.
    pub fn from_terms(max_t: usize, max_z: usize, terms: &[(usize, usize, i64)]) -> Self {
        let mut s = BiSeries::zero(max_t, max_z);
        for &(i, j, c) in terms {
            if i <= max_t && j <= max_z {
                s.coeffs[i][j] += c;
            }
        }
        s
    }

    /// Embeds a polynomial in `z` (no `t` dependence).
    pub fn from_z_polynomial(p: &Polynomial, max_t: usize, max_z: usize) -> Self {
        let mut s = BiSeries::zero(max_t, max_z);
        for (j, c) in p.coeffs().iter().enumerate().take(max_z + 1) {
            s.coeffs[0][j] = c.clone();
        }
        s
    }

    pub fn max_t(&self) -> usize {
        self.max_t
    }

    pub fn max_z(&self) -> usize {
        self.max_z
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    pub fn coeff(&self, t_pow: usize, z_pow: usize) -> BigInt {
        self.coeffs
            .get(t_pow)
            .and_then(|row| row.get(z_pow))
            .cloned()
            .unwrap_or_default()
    }

    /// Coefficient of `z^j` as a polynomial in `t`.
    pub fn z_coefficient(&self, j: usize) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .map(|row| row.get(j).cloned().unwrap_or_default())
                .collect(),
        )
    }

    /// Coefficient of `t^i` as a polynomial in `z`.
    pub fn t_coefficient(&self, i: usize) -> Polynomial {
        Polynomial::new(self.coeffs.get(i).cloned().unwrap_or_default())
    }

    /// Re-windows the series, padding with zeros or discarding terms.
    pub fn truncate(&self, max_t: usize, max_z: usize) -> BiSeries {
        let mut s = BiSeries::zero(max_t, max_z);
        for i in 0..=max_t.min(self.max_t) {
            for j in 0..=max_z.min(self.max_z) {
                s.coeffs[i][j] = self.coeffs[i][j].clone();
            }
        }
        s
    }

    /// Truncated product; the result keeps the window of `self`.
    pub fn mul_truncated(&self, rhs: &BiSeries) -> BiSeries {
        let mut out = BiSeries::zero(self.max_t, self.max_z);
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, rrow) in rhs.coeffs.iter().enumerate().take(self.max_t - i + 1) {
                    for (l, b) in rrow.iter().enumerate().take(self.max_z - j + 1) {
                        out.coeffs[i + k][j + l] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Multiplicative inverse up to the given orders.
    pub fn recip_truncated(&self, max_t: usize, max_z: usize) -> Result<BiSeries> {
        let den = self.truncate(max_t, max_z);
        let c0 = den.coeffs[0][0].clone();
        if !(c0.is_one() || (-&c0).is_one()) {
            return Err(Error::NonUnitConstantTerm(c0.to_string()));
        }
        let mut inv = BiSeries::zero(max_t, max_z);
        for i in 0..=max_t {
            for j in 0..=max_z {
                // den * inv = 1 gives c0 * inv[i][j] = [i==j==0] - sum of the other products.
                let mut acc = if i == 0 && j == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                for a in 0..=i {
                    for b in 0..=j {
                        if a == 0 && b == 0 {
                            continue;
                        }
                        let dc = &den.coeffs[a][b];
                        if !dc.is_zero() {
                            acc -= dc * &inv.coeffs[i - a][j - b];
                        }
                    }
                }
                // c0 is ±1, so dividing equals multiplying.
                inv.coeffs[i][j] = acc * &c0;
            }
        }
        Ok(inv)
    }
}

/// `1 / den`, expanded to `t^max_t` and `z^max_z`.
pub fn series_recip_truncated(den: &BiSeries, max_t: usize, max_z: usize) -> Result<BiSeries> {
    den.recip_truncated(max_t, max_z)
}

/// Serialized as a JSON array of rows, outer index = power of `t`, each row an
/// array of decimal strings indexed by power of `z`.
impl Serialize for BiSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Row<'a>(&'a [BigInt]);
        impl Serialize for Row<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                serialize_bigints(self.0, s)
            }
        }
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for row in &self.coeffs {
            seq.serialize_element(&Row(row))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for BiSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        let width = rows.first().map(Vec::len).unwrap_or(0);
        if width == 0 || rows.iter().any(|r| r.len() != width) {
            return Err(de::Error::custom(
                "series rows must be nonempty and of equal length",
            ));
        }
        let coeffs = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| parse_bigint(s))
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(BiSeries {
            max_t: coeffs.len() - 1,
            max_z: width - 1,
            coeffs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(7, 3), BigInt::from(35));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(5, 0), BigInt::one());
        assert_eq!(binomial(3, 5), BigInt::zero());
        // exceeds 64 bits
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
        for n in 0..20u64 {
            for k in 1..=n {
                assert_eq!(binomial(n + 1, k), binomial(n, k) + binomial(n, k - 1));
            }
        }
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[1, 2]) + &p(&[0, 3, 1]), p(&[1, 5, 1]));
        assert_eq!(&p(&[4, 0, 7]) + &Polynomial::zero(), p(&[4, 0, 7]));
        let sum = &p(&[1, 1]) + &p(&[-1, -1]);
        assert!(sum.is_zero());
        assert!(sum.coeffs().is_empty());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(&p(&[3, -2, 5]) * &Polynomial::one(), p(&[3, -2, 5]));
        assert_eq!(&p(&[1, 1, 1]) * &p(&[1, 1]), p(&[1, 2, 2, 1]));
        assert!((&p(&[1, 2]) * &Polynomial::zero()).is_zero());
    }

    #[test]
    fn degree_of_zero_is_sentinel() {
        assert_eq!(Polynomial::zero().degree(), Degree::MinusInfinity);
        assert_eq!(p(&[0, 0, 0]).degree(), Degree::MinusInfinity);
        assert_eq!(p(&[5]).degree(), Degree::Finite(0));
        assert!(Degree::MinusInfinity < Degree::Finite(0));
    }

    #[test]
    fn div_exact_examples() {
        assert_eq!(
            p(&[1, 0, 0, 0, -1]).div_exact(&p(&[1, -1])).unwrap(),
            p(&[1, 1, 1, 1])
        );
        assert_eq!(
            p(&[2, 7]).div_exact(&Polynomial::one()).unwrap(),
            p(&[2, 7])
        );
        let num = &p(&[1, 0, 0, -1]) * &p(&[1, 0, 0, 0, -1]);
        let den = &p(&[1, -1]) * &p(&[1, 0, -1]);
        assert_eq!(num.div_exact(&den).unwrap(), p(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn div_exact_rejects_remainders() {
        assert_eq!(
            p(&[1, 0, 1]).div_exact(&p(&[1, 1])),
            Err(Error::NonExactDivision)
        );
        assert_eq!(p(&[1, 1]).div_exact(&p(&[2])), Err(Error::NonExactDivision));
        assert_eq!(p(&[1]).div_exact(&p(&[0, 1])), Err(Error::NonExactDivision));
        assert_eq!(
            p(&[1]).div_exact(&Polynomial::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn recip_examples() {
        let one_minus_z = BiSeries::from_terms(0, 5, &[(0, 0, 1), (0, 1, -1)]);
        let inv = series_recip_truncated(&one_minus_z, 0, 5).unwrap();
        assert_eq!(inv.t_coefficient(0), p(&[1, 1, 1, 1, 1, 1]));

        let sq = one_minus_z.mul_truncated(&one_minus_z);
        let inv = series_recip_truncated(&sq, 0, 3).unwrap();
        assert_eq!(inv.t_coefficient(0), p(&[1, 2, 3, 4]));

        let a = BiSeries::from_terms(2, 2, &[(0, 0, 1), (0, 1, -1)]);
        let b = BiSeries::from_terms(2, 2, &[(0, 0, 1), (1, 1, -1)]);
        let inv = series_recip_truncated(&a.mul_truncated(&b), 2, 2).unwrap();
        for i in 0..=2 {
            for j in 0..=2 {
                let expected = if i <= j { 1 } else { 0 };
                assert_eq!(inv.coeff(i, j), BigInt::from(expected), "t^{i} z^{j}");
            }
        }
    }

    #[test]
    fn recip_rejects_non_unit() {
        let den = BiSeries::from_terms(1, 1, &[(0, 0, 2), (0, 1, 1)]);
        assert_eq!(
            series_recip_truncated(&den, 1, 1),
            Err(Error::NonUnitConstantTerm("2".into()))
        );
        let den = BiSeries::from_terms(1, 1, &[(0, 1, 1)]);
        assert!(series_recip_truncated(&den, 1, 1).is_err());
        let den = BiSeries::from_terms(0, 3, &[(0, 0, -1), (0, 1, 1)]);
        let inv = series_recip_truncated(&den, 0, 3).unwrap();
        assert_eq!(inv.t_coefficient(0), p(&[-1, -1, -1, -1]));
    }

    #[test]
    fn plain_rendering() {
        assert_eq!(p(&[1, 3]).to_plain("t"), "1 + 3*t");
        assert_eq!(Polynomial::zero().to_plain("t"), "0");
        assert_eq!(p(&[0, -1, 0, 2]).to_plain("z"), "-z + 2*z^3");
        assert_eq!(p(&[1, -1, 1]).to_string(), "1 - t + t^2");
    }

    #[test]
    fn json_schema() {
        let big = "123456789012345678901234567890";
        let poly = Polynomial::new(vec![BigInt::from(1), big.parse().unwrap()]);
        let json = serde_json::to_string(&poly).unwrap();
        assert_eq!(json, format!("[\"1\",\"{big}\"]"));
        assert_eq!(serde_json::from_str::<Polynomial>(&json).unwrap(), poly);
        assert_eq!(serde_json::to_string(&Polynomial::zero()).unwrap(), "[]");
        assert!(serde_json::from_str::<Polynomial>("[1,2]").is_err());

        let s = BiSeries::from_terms(1, 2, &[(0, 0, 1), (1, 2, -3)]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"[["1","0","0"],["0","0","-3"]]"#);
        assert_eq!(serde_json::from_str::<BiSeries>(&json).unwrap(), s);
    }

    fn arb_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-1000i64..1000, 0..=max_len).prop_map(|c| Polynomial::from_i64s(&c))
    }

    fn arb_unit_series() -> impl Strategy<Value = BiSeries> {
        (
            prop::bool::ANY,
            prop::collection::vec(prop::collection::vec(-5i64..5, 5), 4),
        )
            .prop_map(|(neg, rows)| {
                let mut terms = Vec::new();
                for (i, row) in rows.iter().enumerate() {
                    for (j, &c) in row.iter().enumerate() {
                        terms.push((i, j, c));
                    }
                }
                let mut s = BiSeries::from_terms(3, 4, &terms);
                s.coeffs[0][0] = BigInt::from(if neg { -1 } else { 1 });
                s
            })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(51), b in arb_poly(51), c in arb_poly(51)) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &Polynomial::zero(), a.clone());
            prop_assert_eq!(&a * &Polynomial::one(), a.clone());
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn degree_adds(a in arb_poly(20), b in arb_poly(20)) {
            if let (Degree::Finite(da), Degree::Finite(db)) = (a.degree(), b.degree()) {
                prop_assert_eq!((&a * &b).degree(), Degree::Finite(da + db));
            }
        }

        #[test]
        fn div_exact_inverts_mul(a in arb_poly(30), b in arb_poly(30)) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }

        #[test]
        fn eval_is_homomorphism(a in arb_poly(20), b in arb_poly(20), x in -3i64..=3) {
            let x = BigInt::from(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!(a.eval(&BigInt::one()), a.eval_at_one());
        }

        #[test]
        fn recip_times_den_is_one(den in arb_unit_series()) {
            let inv = series_recip_truncated(&den, 3, 4).unwrap();
            prop_assert_eq!(inv.mul_truncated(&den), BiSeries::one(3, 4));
        }

        #[test]
        fn json_round_trip(a in arb_poly(20)) {
            let json = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<Polynomial>(&json).unwrap(), a);
        }
    }
}
