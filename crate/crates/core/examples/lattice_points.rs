//! Lattice points of a dilated simplex, grouped into slice classes.
//!
//! `cargo run --example lattice_points -- 3 3`

use simplex_grassmann::simplex::{
    count_lattice_points, slice_classes, DilatedSimplex, WeightVector,
};

fn main() -> simplex_grassmann::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"));
    let d = args.next().unwrap_or(3) as usize;
    let r = args.next().unwrap_or(3) as u32;

    let s = DilatedSimplex::new(d, r)?;
    println!(
        "{} lattice points in {r}*simplex_{d}",
        count_lattice_points(&s)
    );
    for class in slice_classes(&s, &WeightVector::ones(d))? {
        let pts: Vec<String> = class
            .points
            .iter()
            .map(|p| format!("{:?}", p.coords()))
            .collect();
        println!("X_{} ({}): {}", class.level, pts.len(), pts.join(" "));
    }
    Ok(())
}
