//! Oracle-equivalence harness.
//!
//! Every [`Identity`] is checked by computing both of its sides through
//! independent routes over the grid `1 ≤ d ≤ d_max`, `0 ≤ r ≤ r_max`, stopping
//! at the first counterexample. [`VerifyOptions::fault`] corrupts the oracle
//! side of one identity so the harness itself can be shown to detect failures.

use std::fmt::{self, Debug};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::grassmann::{
    alpha_partition, beta_partition, enumerate_box_partitions, exponent_from_beta,
    gaussian_binomial, gaussian_binomial_recurrence, grassmannian_permutation, poincare_polynomial,
    triangular_matrix, weight_of, BetaVector, SelfConjugateFamily,
};
use crate::polyring::{binomial, BiSeries, Polynomial};
use crate::simplex::{
    count_lattice_points, dilation_generating_series, dilation_polynomial,
    enumerate_lattice_points, slice_classes, weighted_polynomial, DilatedSimplex, WeightVector,
};
use crate::tableaux::{
    character_bialternant, character_evaluate, count_ssyt_row, enumerate_row_tableaux,
    point_to_tableau, semistandard_polynomial, tableau_to_point,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    LatticeCount,
    SliceSize,
    GeneratingSeries,
    SemistandardGrading,
    TableauBijection,
    BetaBijection,
    Conjugacy,
    SelfConjugateFamilies,
    WeightLength,
    PoincareIdentity,
    CharacterDimension,
    Specialization,
}

impl Identity {
    pub const ALL: [Identity; 12] = [
        Identity::LatticeCount,
        Identity::SliceSize,
        Identity::GeneratingSeries,
        Identity::SemistandardGrading,
        Identity::TableauBijection,
        Identity::BetaBijection,
        Identity::Conjugacy,
        Identity::SelfConjugateFamilies,
        Identity::WeightLength,
        Identity::PoincareIdentity,
        Identity::CharacterDimension,
        Identity::Specialization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::LatticeCount => "lattice-count",
            Identity::SliceSize => "slice-size",
            Identity::GeneratingSeries => "generating-series",
            Identity::SemistandardGrading => "semistandard-grading",
            Identity::TableauBijection => "tableau-bijection",
            Identity::BetaBijection => "beta-bijection",
            Identity::Conjugacy => "conjugacy",
            Identity::SelfConjugateFamilies => "self-conjugate-families",
            Identity::WeightLength => "weight-length",
            Identity::PoincareIdentity => "poincare-identity",
            Identity::CharacterDimension => "character-dimension",
            Identity::Specialization => "specialization",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Identity::LatticeCount => "C(r+d,d) = #lattice points = #row tableaux = #box partitions",
            Identity::SliceSize => "level-k class under (1,...,1) has C(k+d-1,d-1) points; r+1 classes; level 0 is the origin",
            Identity::GeneratingSeries => "z^r coefficient of 1/((1-z)(1-tz)^d) is T_r(t)",
            Identity::SemistandardGrading => "graded tableau count equals T_r(t); row-shape product formula equals C(k+d-1,d-1)",
            Identity::TableauBijection => "tableau <-> lattice point round trips and preserves grading",
            Identity::BetaBijection => "beta vector <-> exponent vector round trips onto the d x r box",
            Identity::Conjugacy => "alpha partition transposes to beta partition; sum (2k-1) lambda_k = sum (lambda*_k)^2; matrix sums",
            Identity::SelfConjugateFamilies => "two-block, hook and stepped-square monomials have self-conjugate alpha partitions",
            Identity::WeightLength => "inversions of w(beta(a)) equal the staircase weight of a; code recovers beta; one descent at d",
            Identity::PoincareIdentity => "staircase-weighted polynomial = q-binomial quotient = q-Pascal recurrence = box-partition sum",
            Identity::CharacterDimension => "character at (1,...,1) is C(r+d,d); recurrence = tableau sum = bialternant at distinct values",
            Identity::Specialization => "weighted polynomial at 1 equals the lattice count for every weight",
        }
    }

    pub fn from_name(name: &str) -> Option<Identity> {
        Identity::ALL.into_iter().find(|id| id.name() == name)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub d_max: usize,
    pub r_max: u32,
    /// Identity whose oracle side is deliberately corrupted.
    pub fault: Option<Identity>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            d_max: 4,
            r_max: 5,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub identity: Identity,
    pub statement: String,
    pub passed: bool,
    pub cases: u64,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub d_max: usize,
    pub r_max: u32,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn outcome(&self, id: Identity) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.identity == id)
    }
}

/// Corruption applied to the oracle side of an injected fault.
trait Perturb {
    fn perturb(self) -> Self;
}

impl Perturb for u64 {
    fn perturb(self) -> Self {
        self + 1
    }
}

impl Perturb for usize {
    fn perturb(self) -> Self {
        self + 1
    }
}

impl Perturb for bool {
    fn perturb(self) -> Self {
        !self
    }
}

impl Perturb for BigInt {
    fn perturb(self) -> Self {
        self + 1
    }
}

impl Perturb for Polynomial {
    fn perturb(self) -> Self {
        &self + &Polynomial::one()
    }
}

impl<T: Perturb + Default> Perturb for Vec<T> {
    fn perturb(mut self) -> Self {
        match self.first_mut() {
            Some(x) => *x = std::mem::take(x).perturb(),
            None => self.push(T::default().perturb()),
        }
        self
    }
}

impl Perturb for u32 {
    fn perturb(self) -> Self {
        self + 1
    }
}

struct Check {
    identity: Identity,
    faulty: bool,
    cases: u64,
    counterexample: Option<String>,
}

impl Check {
    fn new(identity: Identity, opts: &VerifyOptions) -> Self {
        Check {
            identity,
            faulty: opts.fault == Some(identity),
            cases: 0,
            counterexample: None,
        }
    }

    fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    /// Compares an implementation value against its oracle. Only the first
    /// mismatch is recorded.
    fn eq<T: PartialEq + Debug + Perturb>(
        &mut self,
        context: impl FnOnce() -> String,
        actual: T,
        oracle: T,
    ) {
        if self.failed() {
            return;
        }
        self.cases += 1;
        let oracle = if self.faulty {
            oracle.perturb()
        } else {
            oracle
        };
        if actual != oracle {
            self.counterexample = Some(format!(
                "{}: got {:?}, oracle {:?}",
                context(),
                actual,
                oracle
            ));
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            identity: self.identity,
            statement: self.identity.statement().to_string(),
            passed: self.counterexample.is_none(),
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

fn grid(opts: &VerifyOptions) -> impl Iterator<Item = (usize, u32)> + '_ {
    (1..=opts.d_max).flat_map(move |d| (0..=opts.r_max).map(move |r| (d, r)))
}

fn simplex(d: usize, r: u32) -> DilatedSimplex {
    DilatedSimplex::new(d, r).expect("grid dimensions start at 1")
}

fn lattice_count(opts: &VerifyOptions) -> CheckOutcome {
    let mut c = Check::new(Identity::LatticeCount, opts);
    for (d, r) in grid(opts) {
        let s = simplex(d, r);
        let ctx = || format!("d={d} r={r}");
        let expected = binomial(u64::from(r) + d as u64, d as u64);
        c.eq(ctx, count_lattice_points(&s), expected.clone());
        c.eq(
            ctx,
            BigInt::from(enumerate_lattice_points(&s).len()),
            expected.clone(),
        );
        c.eq(
            ctx,
            BigInt::from(enumerate_row_tableaux(d, r).map_or(0, |t| t.len())),
            expected.clone(),
        );
        c.eq(
            ctx,
            BigInt::from(enumerate_box_partitions(d, r).map_or(0, |b| b.len())),
            expected,
        );
    }
    c.finish()
}

fn slice_size(opts: &VerifyOptions) -> CheckOutcome {
    let mut c = Check::new(Identity::SliceSize, opts);
    for (d, r) in grid(opts) {
        let classes =
            slice_classes(&simplex(d, r), &WeightVector::ones(d)).expect("weight has length d");
        c.eq(
            || format!("d={d} r={r} number of classes"),
            classes.len(),
            r as usize + 1,
        );
        let origin_only = classes[0].points.len() == 1 && classes[0].points[0].sum() == 0;
        c.eq(
            || format!("d={d} r={r} level-0 class is the origin"),
            origin_only,
            true,
        );
        for class in &classes {
            let k = class.level;
            let on_level = class.points.iter().all(|p| p.sum() == k);
            c.eq(
                || format!("d={d} r={r} k={k} members on level"),
                on_level,
                true,
            );
            c.eq(
                || format!("d={d} r={r} k={k}"),
                BigInt::from(class.points.len()),
                binomial(k + d as u64 - 1, d as u64 - 1),
            );
        }
    }
    c.finish()
}

fn generating_series(opts: &VerifyOptions) -> CheckOutcome {
    let mut c = Check::new(Identity::GeneratingSeries, opts);
    let max = opts.r_max as usize;
    for d in 1..=opts.d_max {
        let g: BiSeries = dilation_generating_series(d, max, max).expect("d >= 1");
        for r in 0..=opts.r_max {
            c.eq(
                || format!("d={d} r={r}"),
                g.z_coefficient(r as usize),
                dilation_polynomial(&simplex(d, r)),
            );
        }
    }
    c.finish()
}

fn semistandard_grading(opts: &VerifyOptions) -> CheckOutcome {
    let mut c = Check::new(Identity::SemistandardGrading, opts);
    for (d, r) in grid(opts) {
        c.eq(
            || format!("d={d} r={r}"),
            semistandard_polynomial(d, r).unwrap_or_default(),
            dilation_polynomial(&simplex(d, r)),
        );
        c.eq(
            || format!("d={d} k={r} row-shape count"),
            count_ssyt_row(d, r),
            binomial(u64::from(r) + d as u64 - 1, d as u64 - 1),
        );
    }
    c.finish()
}

fn tableau_bijection(opts: &VerifyOptions) -> CheckOutcome {
    let mut c = Check::new(Identity::TableauBijection, opts);
    for (d, r) in grid(opts) {
        for t in enumerate_row_tableaux(d, r).unwrap_or_default() {
            let Ok(p) = tableau_to_point(&t, d) else {
                c.eq(
                    || format!("d={d} r={r} tableau {:?} maps", t.entries()),
                    false,
                    true,
                );
                continue;
            };
            c.eq(
                || format!("d={d} r={r} tableau {:?} grading", t.entries()),
                p.sum(),
                t.len() as u64,
            );
            c.eq(
                || format!("d={d} r={r} tableau {:?} round trip", t.entries()),
                point_to_tableau(&p).entries().to_vec(),
                t.entries().to_vec(),
            );
        }
        for p in enumerate_lattice_points(&simplex(d, r)) {
            let back = tableau_to_point(&point_to_tableau(&p), d)
                .map(|q| q.into_coords())
                .unwrap_or_default();
            c.eq(
                || format!("d={d} r={r} point {:?} round trip", p.coords()),
                back,
                p.coords().to_vec(),
            );
        }
    }
    c.finish()
}

fn beta_bijection(opts: &VerifyOptions) -> CheckOutcome {
    let mut c = Check::new(Identity::BetaBijection, opts);
    for (d, r) in grid(opts) {
        let points = enumerate_lattice_points(&simplex(d, r));
        let mut images: Vec<BetaVector> = Vec::with_capacity(points.len());
        for p in &points {
            let b = beta_partition(p.coords());
            let back = exponent_from_beta(b.entries()).unwrap_or_default();
            c.eq(
                || format!("d={d} r={r} point {:?}", p.coords()),
                back,
                p.coords().to_vec(),
            );
            c.eq(
                || format!("d={d} r={r} point {:?} fits the box", p.coords()),
                b.width() <= r,
                true,
            );
            images.push(b);
        }
        images.sort();
        let boxed = enumerate_box_partitions(d, r).unwrap_or_default();
        c.eq(
            || format!("d={d} r={r} image is the box"),
            images == boxed,
            true,
        );
    }
    c.finish()
}

fn conjugacy(opts: &VerifyOptions) -> CheckOutcome {
    let mut c = Check::new(Identity::Conjugacy, opts);
    for (d, r) in grid(opts) {
        for p in enumerate_lattice_points(&simplex(d, r)) {
            let a = p.coords();
            let alpha = alpha_partition(a);
            let beta = beta_partition(a).to_partition();
            let ctx = || format!("a={a:?}");
            c.eq(
                ctx,
                alpha.conjugate().parts().to_vec(),
                beta.parts().to_vec(),
            );
            c.eq(
                ctx,
                beta.conjugate().parts().to_vec(),
                alpha.parts().to_vec(),
            );
            c.eq(ctx, alpha.odd_weighted_sum(), beta.sum_of_squares());
            let m = triangular_matrix(a);
            c.eq(
                ctx,
                m.row_sums(),
                beta_partition(a)
                    .entries()
                    .iter()
                    .map(|&e| u64::from(e))
                    .collect(),
            );
            c.eq(ctx, m.exponents(), a.to_vec());
        }
    }
    c.finish()
}

fn self_conjugate_families(opts: &VerifyOptions) -> CheckOutcome {
    let mut c = Check::new(Identity::SelfConjugateFamilies, opts);
    // Families are single monomials per dimension, so cover d ≤ 8 regardless of the grid.
    for d in 2..=opts.d_max.max(8) {
        for family in SelfConjugateFamily::ALL {
            if let Some(a) = family.exponents(d) {
                let alpha = alpha_partition(&a);
                c.eq(
                    || format!("{family:?} d={d}"),
                    alpha.conjugate().parts().to_vec(),
                    alpha.parts().to_vec(),
                );
            }
        }
    }
    c.finish()
}

fn weight_length(opts: &VerifyOptions) -> CheckOutcome {
    let mut c = Check::new(Identity::WeightLength, opts);
    // worked code example: c(315426) = (2,0,2,1,0,0)
    let code = crate::grassmann::permutation_code(&[3, 1, 5, 4, 2, 6])
        .map(|c| c.0)
        .unwrap_or_default();
    c.eq(|| "code of 315426".into(), code, vec![2, 0, 2, 1, 0, 0]);
    for (d, r) in grid(opts) {
        let n = d + r as usize;
        for p in enumerate_lattice_points(&simplex(d, r)) {
            let a = p.coords();
            let b = beta_partition(a);
            let Ok(w) = grassmannian_permutation(&b, n) else {
                c.eq(|| format!("a={a:?} n={n} builds"), false, true);
                continue;
            };
            let ctx = || format!("a={a:?} w={:?}", w.permutation().one_line());
            c.eq(ctx, w.permutation().length(), weight_of(a));
            c.eq(ctx, w.permutation().code().sum(), w.permutation().length());
            c.eq(
                ctx,
                w.recover_beta().entries().to_vec(),
                b.entries().to_vec(),
            );
            let expected_descents = if b.size() == 0 { vec![] } else { vec![d] };
            c.eq(ctx, w.permutation().descents(), expected_descents);
        }
    }
    c.finish()
}

fn poincare_identity(opts: &VerifyOptions) -> CheckOutcome {
    let mut c = Check::new(Identity::PoincareIdentity, opts);
    for (d, r) in grid(opts) {
        let ctx = || format!("d={d} r={r}");
        let weighted =
            weighted_polynomial(&simplex(d, r), &WeightVector::staircase(d)).unwrap_or_default();
        let quotient = gaussian_binomial(d, r);
        c.eq(ctx, weighted.clone(), quotient.clone());
        c.eq(ctx, weighted.clone(), gaussian_binomial_recurrence(d, r));
        c.eq(ctx, weighted, poincare_polynomial(d, r).unwrap_or_default());
        c.eq(ctx, quotient.is_palindromic(), true);
        c.eq(ctx, quotient.coeffs().len(), d * r as usize + 1);
    }
    c.finish()
}

fn primes(count: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    let mut n = 2u64;
    while out.len() < count {
        if (2..n)
            .take_while(|p| p * p <= n)
            .all(|p| !n.is_multiple_of(p))
        {
            out.push(BigInt::from(n));
        }
        n += 1;
    }
    out
}

fn character_dimension(opts: &VerifyOptions) -> CheckOutcome {
    let mut c = Check::new(Identity::CharacterDimension, opts);
    for (d, r) in grid(opts) {
        let ctx = || format!("d={d} r={r}");
        let ones = vec![BigInt::one(); d];
        c.eq(
            ctx,
            character_evaluate(d, r, &ones).unwrap_or_default(),
            count_lattice_points(&simplex(d, r)),
        );

        let values = primes(d);
        let recurrence = character_evaluate(d, r, &values).unwrap_or_default();
        let tableau_sum: BigInt = enumerate_row_tableaux(d, r)
            .unwrap_or_default()
            .iter()
            .map(|t| {
                t.entries()
                    .iter()
                    .map(|&e| values[e as usize - 1].clone())
                    .product::<BigInt>()
            })
            .sum();
        c.eq(
            || format!("d={d} r={r} at {values:?}"),
            recurrence.clone(),
            tableau_sum,
        );
        c.eq(
            || format!("d={d} r={r} bialternant at {values:?}"),
            recurrence,
            character_bialternant(d, r, &values).unwrap_or_default(),
        );
    }
    c.finish()
}

fn specialization(opts: &VerifyOptions) -> CheckOutcome {
    let mut c = Check::new(Identity::Specialization, opts);
    for (d, r) in grid(opts) {
        let s = simplex(d, r);
        let count = count_lattice_points(&s);
        // a deterministic spread of weights beyond the two presets
        let spread = WeightVector::new((0..d).map(|i| (i as u32 * 7 + 3) % 5 + 1).collect())
            .expect("weights are positive");
        for w in [WeightVector::ones(d), WeightVector::staircase(d), spread] {
            let p = weighted_polynomial(&s, &w).unwrap_or_default();
            c.eq(
                || format!("d={d} r={r} w={:?}", w.as_slice()),
                p.eval_at_one(),
                count.clone(),
            );
        }
    }
    c.finish()
}

/// Runs every identity in [`Identity::ALL`] order.
pub fn run_verification(opts: &VerifyOptions) -> VerifyReport {
    let checks = Identity::ALL
        .iter()
        .map(|&id| match id {
            Identity::LatticeCount => lattice_count(opts),
            Identity::SliceSize => slice_size(opts),
            Identity::GeneratingSeries => generating_series(opts),
            Identity::SemistandardGrading => semistandard_grading(opts),
            Identity::TableauBijection => tableau_bijection(opts),
            Identity::BetaBijection => beta_bijection(opts),
            Identity::Conjugacy => conjugacy(opts),
            Identity::SelfConjugateFamilies => self_conjugate_families(opts),
            Identity::WeightLength => weight_length(opts),
            Identity::PoincareIdentity => poincare_identity(opts),
            Identity::CharacterDimension => character_dimension(opts),
            Identity::Specialization => specialization(opts),
        })
        .collect();
    VerifyReport {
        d_max: opts.d_max,
        r_max: opts.r_max,
        checks,
    }
}
