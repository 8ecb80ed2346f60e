//! Discrete biorthogonality on the grid x_s = q^(s+1), a = q^(1-N).

use pastro::biorth::verify_biorthogonality;
use pastro::pastro::{verify_weights, weights};
use pastro::{rat, Rational};

pub fn run() -> pastro::Result<()> {
    let (q, b) = (rat(1, 2), rat(1, 5));
    let n_points = 4;

    let w = weights(n_points, &b, &q)?;
    for (s, (x, ws)) in w.grid.iter().zip(&w.w).enumerate() {
        println!("x_{s} = {x}  w_{s} = {ws}");
    }
    // weights can be negative; only their sum is pinned down
    assert_eq!(w.w.iter().cloned().sum::<Rational>(), Rational::one());
    assert!(verify_weights(n_points, &b, &q).passed());

    let report = verify_biorthogonality(n_points, &b, &q);
    println!("Gram matrix:\n{:?}", report.gram.as_ref().unwrap());
    println!("{}", report.check);
    assert!(report.check.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
