//! Dilation, weighted and Gaussian-binomial polynomials side by side.

use simplex_grassmann::grassmann::{gaussian_binomial, poincare_polynomial};
use simplex_grassmann::simplex::{
    dilation_polynomial, weighted_polynomial, DilatedSimplex, WeightVector,
};

fn main() -> simplex_grassmann::Result<()> {
    for (d, r) in [(3, 4), (3, 3), (2, 2), (4, 3)] {
        let s = DilatedSimplex::new(d, r)?;
        let staircase = weighted_polynomial(&s, &WeightVector::staircase(d))?;
        println!("d={d} r={r}");
        println!("  T_r(t)         = {}", dilation_polynomial(&s));
        println!("  staircase P(t) = {staircase}");
        println!("  [d+r, d]_t     = {}", gaussian_binomial(d, r));
        assert_eq!(staircase, poincare_polynomial(d, r)?);
        // Any positive weight specializes to the lattice count at t = 1.
        let w = WeightVector::new((1..=d as u32).map(|i| i * i).collect())?;
        println!(
            "  squares P(1)   = {}",
            weighted_polynomial(&s, &w)?.eval_at_one()
        );
    }
    Ok(())
}
