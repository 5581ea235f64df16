//! Grassmannian permutations built from beta vectors; length equals staircase weight.

use simplex_grassmann::grassmann::{
    beta_partition, grassmannian_permutation, permutation_code, weight_of,
};
use simplex_grassmann::simplex::DilatedSimplex;

fn main() -> simplex_grassmann::Result<()> {
    println!(
        "code of 315426: {:?}",
        permutation_code(&[3, 1, 5, 4, 2, 6])?.entries()
    );

    let (d, r) = (2, 3);
    for p in DilatedSimplex::new(d, r)?.lattice_points() {
        let beta = beta_partition(p.coords());
        let w = grassmannian_permutation(&beta, d + r as usize)?;
        println!(
            "{:?}  beta {:?}  w = {:?}  length {}  weight {}",
            p.coords(),
            beta.entries(),
            w.permutation().one_line(),
            w.permutation().length(),
            weight_of(p.coords()),
        );
    }
    Ok(())
}
