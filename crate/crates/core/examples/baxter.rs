//! Baxter's coupled recurrences rebuild the partners R_n from P_n.

use pastro::pastro::{
    baxter_system, biorthogonal_partner, verify_baxter_coefficients, verify_baxter_system,
};
use pastro::{rat, QParams};

pub fn run() -> pastro::Result<()> {
    let params = QParams::new(rat(1, 2), rat(3, 1), rat(1, 5))?;
    let data = baxter_system(5, &params)?;
    for n in 0..=5 {
        println!(
            "n={n}: alpha={} beta={} h={}",
            data.alpha[n], data.beta[n], data.h[n]
        );
        // Q_n(1/x) from the recurrence equals the closed-form R_n(x)
        assert_eq!(data.q_polys[n].reflect(), biorthogonal_partner(n, &params)?);
    }
    for check in [
        verify_baxter_coefficients(8, &params),
        verify_baxter_system(8, &params),
    ] {
        println!("{check}");
        assert!(check.passed());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
