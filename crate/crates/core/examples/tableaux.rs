//! One-row tableaux, their monomials, and the character they sum to.

use num_bigint::BigInt;
use simplex_grassmann::tableaux::{
    character_bialternant, character_evaluate, enumerate_row_tableaux, tableau_to_point, Monomial,
};

fn main() -> simplex_grassmann::Result<()> {
    let (d, r) = (3, 3);
    let tableaux = enumerate_row_tableaux(d, r)?;
    println!(
        "{} tableaux with at most {r} boxes over {{1..{d}}}",
        tableaux.len()
    );
    for t in &tableaux {
        let p = tableau_to_point(t, d)?;
        let m = Monomial::from_tableau(t, d)?;
        println!(
            "{:<10} -> {:?}  t^{:?}",
            format!("{:?}", t.entries()),
            p.coords(),
            m.exponents()
        );
    }

    let values: Vec<BigInt> = [2, 3, 5].into_iter().map(BigInt::from).collect();
    let by_recurrence = character_evaluate(d, r, &values)?;
    let by_bialternant = character_bialternant(d, r, &values)?;
    println!("character at (2,3,5): {by_recurrence} (bialternant {by_bialternant})");
    Ok(())
}
