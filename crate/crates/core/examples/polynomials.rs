//! Build a family of Pastro polynomials and their Laurent partners.

use pastro::pastro::{
    biorthogonal_partner, mu_coefficients, pastro_eigenvalue, pastro_poly_from_series, PastroFamily,
};
use pastro::{rat, QParams};

pub fn run() -> pastro::Result<()> {
    let params = QParams::new(rat(1, 2), rat(3, 1), rat(1, 5))?;
    let family = PastroFamily::new(&params, 4)?;

    for (n, p) in family.polys().iter().enumerate() {
        println!("P_{n}(x) = {p}");
        println!("  eigenvalue {}", pastro_eigenvalue(n, &params));
        println!("  R_{n}(x) = {}", biorthogonal_partner(n, &params)?);
        // the descending recurrence and the 2phi1 give the same polynomial
        assert_eq!(p, &pastro_poly_from_series(n, &params)?);
    }

    for n in 1..4 {
        let (mu1, mu2) = mu_coefficients(n, &params)?;
        println!("mu_{n} = ({mu1}, {mu2})");
    }

    // resonant parameters are rejected up front with every offending factor
    let resonant = QParams::new(rat(1, 2), rat(3, 1), rat(4, 1))?;
    match PastroFamily::new(&resonant, 4) {
        Err(e) => println!("b = 4: {e}"),
        Ok(_) => unreachable!("b q^2 = 1"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
