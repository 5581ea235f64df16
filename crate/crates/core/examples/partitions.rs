//! Alpha and beta partitions of an exponent vector, and the self-conjugate families.

use simplex_grassmann::grassmann::{
    alpha_partition, beta_partition, triangular_matrix, SelfConjugateFamily,
};

fn main() {
    let a = [3, 2, 3, 2];
    let alpha = alpha_partition(&a);
    let beta = beta_partition(&a);
    println!("a     = {a:?}");
    println!("alpha = {:?}", alpha.parts());
    println!("beta  = {:?}", beta.entries());
    println!(
        "conjugate(alpha) == beta: {}",
        alpha.conjugate() == beta.to_partition()
    );
    println!(
        "odd-weighted sum {} = sum of squares {}",
        alpha.odd_weighted_sum(),
        beta.to_partition().sum_of_squares()
    );

    let m = triangular_matrix(&a);
    for i in 0..m.d() {
        let row: Vec<String> = (0..m.d())
            .map(|j| format!("{:>2}", m.entry(i, j)))
            .collect();
        println!("  [{}]", row.join(" "));
    }
    println!(
        "row sums {:?}, column sums {:?}",
        m.row_sums(),
        m.column_sums()
    );

    for family in SelfConjugateFamily::ALL {
        for d in 2..=6 {
            if let Some(e) = family.exponents(d) {
                println!(
                    "{family:?} d={d}: {e:?} self-conjugate={}",
                    alpha_partition(&e).is_self_conjugate()
                );
            }
        }
    }
}
