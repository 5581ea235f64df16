//! Truncated expansion of 1/((1-z)(1-tz)^d) and its z-coefficients.

use simplex_grassmann::simplex::{
    dilation_generating_series, dilation_polynomial, ehrhart_generating_series, DilatedSimplex,
};

fn main() -> simplex_grassmann::Result<()> {
    let (d, max_t, max_z) = (3, 6, 6);
    let series = dilation_generating_series(d, max_t, max_z)?;
    for r in 0..=max_z {
        let coeff = series.z_coefficient(r);
        assert_eq!(
            coeff,
            dilation_polynomial(&DilatedSimplex::new(d, r as u32)?)
        );
        println!("z^{r}: {coeff}");
    }
    println!(
        "Ehrhart series 1/(1-z)^{}: {}",
        d + 1,
        ehrhart_generating_series(d, max_z)?.to_plain("z")
    );
    Ok(())
}
