//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//!
//! Run with `cargo test -p simplex-grassmann --test acceptance`.

use std::panic::{self, AssertUnwindSafe};
use std::process::Command;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use simplex_grassmann::cli::{format_polynomial, OutputFormat};
use simplex_grassmann::grassmann::{
    alpha_partition, beta_partition, enumerate_box_partitions, exponent_from_beta,
    gaussian_binomial, grassmannian_permutation, permutation_code, poincare_polynomial, weight_of,
    Partition,
};
use simplex_grassmann::polyring::{BiSeries, Polynomial};
use simplex_grassmann::simplex::{
    count_lattice_points, dilation_generating_series, dilation_polynomial,
    dilation_series_denominator, enumerate_lattice_points, slice_classes, weighted_polynomial,
    DilatedSimplex, WeightVector,
};
use simplex_grassmann::tableaux::{
    character_evaluate, enumerate_row_tableaux, point_to_tableau, tableau_to_point,
};
use simplex_grassmann::verify::Identity;

fn simplex(d: usize, r: u32) -> DilatedSimplex {
    DilatedSimplex::new(d, r).unwrap()
}

/// Pascal's triangle, independent of the library's binomial routine.
struct Pascal(Vec<Vec<BigInt>>);

impl Pascal {
    fn new(rows: usize) -> Self {
        let mut t: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=rows {
            let prev = &t[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let left = if k > 0 {
                        prev[k - 1].clone()
                    } else {
                        BigInt::zero()
                    };
                    let right = prev.get(k).cloned().unwrap_or_default();
                    left + right
                })
                .collect();
            t.push(row);
        }
        Pascal(t)
    }

    fn c(&self, n: usize, k: usize) -> BigInt {
        self.0[n].get(k).cloned().unwrap_or_default()
    }
}

/// Brute-force point set: every vector of `[0, r]^d` with coordinate sum ≤ r.
fn cube_points(d: usize, r: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=r).map(move |c| {
                    let mut v = v.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().sum::<u32>() <= r);
    out
}

/// q-Pascal recurrence written out independently of the library:
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
fn q_pascal(n: usize, k: usize) -> Vec<i64> {
    let mut table: Vec<Vec<Vec<i64>>> = vec![vec![vec![1]]];
    for m in 1..=n {
        let mut row = Vec::with_capacity(m + 1);
        for j in 0..=m {
            if j == 0 || j == m {
                row.push(vec![1]);
                continue;
            }
            let a = &table[m - 1][j - 1];
            let b = &table[m - 1][j];
            let mut sum = vec![0i64; (j * (m - j)) + 1];
            for (i, c) in a.iter().enumerate() {
                sum[i] += c;
            }
            for (i, c) in b.iter().enumerate() {
                sum[i + j] += c;
            }
            row.push(sum);
        }
        table.push(row);
    }
    table[n][k].clone()
}

fn criterion_1() {
    let fig1 = format_polynomial(&dilation_polynomial(&simplex(3, 4)), OutputFormat::Plain);
    assert_eq!(fig1, "1 + 3*t + 6*t^2 + 10*t^3 + 15*t^4");
    let fig2 = format_polynomial(&dilation_polynomial(&simplex(3, 3)), OutputFormat::Plain);
    assert_eq!(fig2, "1 + 3*t + 6*t^2 + 10*t^3");
}

fn criterion_2() {
    let pascal = Pascal::new(16);
    for d in 1..=5usize {
        for r in 0..=6u32 {
            let s = simplex(d, r);
            let expected = pascal.c(r as usize + d, d);
            assert_eq!(count_lattice_points(&s), expected, "d={d} r={r}");
            assert_eq!(BigInt::from(enumerate_lattice_points(&s).len()), expected);
            assert_eq!(BigInt::from(cube_points(d, r).len()), expected);
            assert_eq!(
                BigInt::from(enumerate_row_tableaux(d, r).unwrap().len()),
                expected
            );
            assert_eq!(
                BigInt::from(enumerate_box_partitions(d, r).unwrap().len()),
                expected
            );
        }
    }
    assert_eq!(count_lattice_points(&simplex(3, 3)), BigInt::from(20));
}

fn criterion_3() {
    let pascal = Pascal::new(16);
    for d in 1..=5usize {
        for r in 0..=8u32 {
            let classes = slice_classes(&simplex(d, r), &WeightVector::ones(d)).unwrap();
            let mut brute = vec![0usize; r as usize + 1];
            for v in cube_points(d, r) {
                brute[v.iter().sum::<u32>() as usize] += 1;
            }
            assert_eq!(classes.len(), r as usize + 1);
            for k in 0..=r as usize {
                let expected = pascal.c(k + d - 1, d - 1);
                assert_eq!(
                    BigInt::from(classes[k].points.len()),
                    expected,
                    "d={d} r={r} k={k}"
                );
                assert_eq!(BigInt::from(brute[k]), expected);
            }
        }
    }
}

fn criterion_4() {
    for d in 1..=5usize {
        let g = dilation_generating_series(d, 10, 10).unwrap();
        for r in 0..=10u32 {
            assert_eq!(
                g.z_coefficient(r as usize),
                dilation_polynomial(&simplex(d, r)),
                "d={d} r={r}"
            );
        }
        // A numerator of z misses T_0 = 1.
        let z = BiSeries::from_terms(10, 10, &[(0, 1, 1)]);
        let printed = z.mul_truncated(
            &dilation_series_denominator(d, 10, 10)
                .recip_truncated(10, 10)
                .unwrap(),
        );
        assert_ne!(
            printed.z_coefficient(0),
            dilation_polynomial(&simplex(d, 0)),
            "d={d}"
        );
        assert!(printed.z_coefficient(0).is_zero());
    }
}

fn criterion_5() {
    for d in 1..=4usize {
        for r in 0..=6u32 {
            for t in enumerate_row_tableaux(d, r).unwrap() {
                let p = tableau_to_point(&t, d).unwrap();
                assert_eq!(p.sum(), t.len() as u64, "grading");
                assert_eq!(point_to_tableau(&p), t);
            }
            for p in enumerate_lattice_points(&simplex(d, r)) {
                assert_eq!(tableau_to_point(&point_to_tableau(&p), d).unwrap(), p);
                let b = beta_partition(p.coords());
                assert_eq!(exponent_from_beta(b.entries()).unwrap(), p.coords());
            }
            for b in enumerate_box_partitions(d, r).unwrap() {
                let a = exponent_from_beta(b.entries()).unwrap();
                assert!(a.iter().sum::<u32>() <= r);
                assert_eq!(beta_partition(&a), b);
            }
        }
    }
}

fn criterion_6() {
    for d in 1..=5usize {
        for r in 0..=6u32 {
            let weighted =
                weighted_polynomial(&simplex(d, r), &WeightVector::staircase(d)).unwrap();
            assert_eq!(weighted, gaussian_binomial(d, r), "d={d} r={r}");
            assert_eq!(weighted, poincare_polynomial(d, r).unwrap());
            assert_eq!(
                weighted,
                Polynomial::from_i64s(&q_pascal(d + r as usize, d))
            );
        }
    }
}

fn criterion_7() {
    for d in 1..=4usize {
        for r in 0..=6u32 {
            for p in enumerate_lattice_points(&simplex(d, r)) {
                let b = beta_partition(p.coords());
                let w = grassmannian_permutation(&b, d + r as usize).unwrap();
                assert_eq!(
                    w.permutation().length(),
                    weight_of(p.coords()),
                    "a={:?}",
                    p.coords()
                );
                let mut head: Vec<u32> = w.permutation().code().entries()[..d]
                    .iter()
                    .map(|&c| c as u32)
                    .collect();
                head.sort_unstable_by(|x, y| y.cmp(x));
                assert_eq!(head, b.entries());
            }
        }
    }
    assert_eq!(
        permutation_code(&[3, 1, 5, 4, 2, 6]).unwrap().entries(),
        &[2, 0, 2, 1, 0, 0]
    );
}

fn criterion_8() {
    let check = |a: &[u32]| {
        let alpha = alpha_partition(a);
        let beta = beta_partition(a).to_partition();
        assert_eq!(alpha.conjugate(), beta, "a={a:?}");
        assert_eq!(beta.conjugate(), alpha, "a={a:?}");
        // λ indexed in decreasing order, k starting at 1.
        let odd: u64 = alpha
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| (2 * i as u64 + 1) * u64::from(p))
            .sum();
        let squares: u64 = beta.parts().iter().map(|&p| u64::from(p).pow(2)).sum();
        assert_eq!(odd, squares, "a={a:?}");
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let d = rng.gen_range(1..=8);
        let a: Vec<u32> = (0..d).map(|_| rng.gen_range(0..=6)).collect();
        check(&a);
    }
    check(&[3, 2, 3, 2]);
    assert_eq!(
        alpha_partition(&[3, 2, 3, 2]),
        Partition::new(vec![4, 4, 3, 3, 3, 2, 2, 1, 1, 1]).unwrap()
    );
    assert_eq!(beta_partition(&[3, 2, 3, 2]).entries(), &[10, 7, 5, 2]);
}

fn criterion_9() {
    let pascal = Pascal::new(16);
    for d in 1..=5usize {
        for r in 0..=6u32 {
            let ones = vec![BigInt::one(); d];
            assert_eq!(
                character_evaluate(d, r, &ones).unwrap(),
                pascal.c(r as usize + d, d)
            );
        }
    }
    let primes = [2, 3, 5].map(BigInt::from);
    for d in 1..=3usize {
        for r in 0..=5u32 {
            let values = &primes[..d];
            let brute: BigInt = enumerate_row_tableaux(d, r)
                .unwrap()
                .iter()
                .map(|t| {
                    t.entries()
                        .iter()
                        .map(|&e| values[e as usize - 1].clone())
                        .product::<BigInt>()
                })
                .sum();
            assert_eq!(
                character_evaluate(d, r, values).unwrap(),
                brute,
                "d={d} r={r}"
            );
        }
    }
}

fn criterion_10() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for d in 1..=5usize {
        for r in 0..=6u32 {
            let s = simplex(d, r);
            let count = count_lattice_points(&s);
            let random = WeightVector::new((0..d).map(|_| rng.gen_range(1..=9)).collect()).unwrap();
            for w in [WeightVector::ones(d), WeightVector::staircase(d), random] {
                let p = weighted_polynomial(&s, &w).unwrap();
                assert_eq!(p.eval_at_one(), count, "d={d} r={r} w={:?}", w.as_slice());
            }
        }
    }
}

fn run_verify(extra: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_simplex-grassmann"))
        .args(["verify", "--d-max", "4", "--r-max", "5"])
        .args(extra)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn criterion_11() {
    let (code, report) = run_verify(&[]);
    assert_eq!(code, 0, "{report}");
    for id in Identity::ALL {
        assert!(
            report.contains(&format!("PASS {}", id.name())),
            "{} missing from report",
            id.name()
        );
    }
    for id in Identity::ALL {
        let (code, report) = run_verify(&["--inject-fault", id.name()]);
        assert_eq!(code, 1, "fault in {} not detected", id.name());
        assert!(report.contains(&format!("FAIL {}", id.name())));
    }
}

fn main() {
    let criteria: [(&str, fn()); 11] = [
        ("1  dilation polynomials for (3,4) and (3,3) in plain format", criterion_1),
        ("2  counting identities, d<=5 r<=6", criterion_2),
        ("3  slice sizes C(k+d-1,d-1), d<=5 r<=8", criterion_3),
        (
            "4  generating series 1/((1-z)(1-tz)^d), d<=5 r<=10; z-numerator form fails at r=0",
            criterion_4,
        ),
        (
            "5  tableau and beta bijection round trips, d<=4 r<=6",
            criterion_5,
        ),
        (
            "6  weighted = q-binomial = Poincare = q-Pascal, d<=5 r<=6",
            criterion_6,
        ),
        (
            "7  permutation length equals staircase weight, d<=4 r<=6",
            criterion_7,
        ),
        (
            "8  conjugacy and odd-part identity on 10000 random vectors",
            criterion_8,
        ),
        (
            "9  character dimension and tableau-sum agreement",
            criterion_9,
        ),
        (
            "10 weighted polynomial at 1 equals the lattice count",
            criterion_10,
        ),
        (
            "11 verify exits 0 and every injected fault exits 1",
            criterion_11,
        ),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (name, criterion) in criteria {
        match panic::catch_unwind(AssertUnwindSafe(criterion)) {
            Ok(()) => println!("PASS  criterion {name}"),
            Err(e) => {
                failures += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL  criterion {name}\n      {msg}");
            }
        }
    }
    let _ = panic::take_hook();
    println!(
        "{}/{} criteria pass",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
