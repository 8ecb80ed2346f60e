//! Adjoints of the grid matrices and the tau transformation.

use pastro::biorth::{
    adjoint_solution, make_grid_rep, tau_matrix, verify_adjoint_gevp, verify_adjoints, x_matrix,
};
use pastro::{rat, Rational};

pub fn run() -> pastro::Result<()> {
    let (q, b) = (rat(1, 3), rat(-2, 5));
    let n_points = 5;
    let rep = make_grid_rep(n_points, &b, &q)?;
    println!("X =\n{:?}", rep.x);
    println!("X* =\n{:?}", rep.x_star);

    // X* = diag(-b q^s) tau(X)
    let tau_x = tau_matrix(
        |bb: &Rational| Ok(x_matrix(n_points, bb, &q)),
        &b,
        &q,
        n_points,
    )?;
    let diag: Vec<Rational> = (0..n_points).map(|s| -(&b * q.pow(s as i64))).collect();
    assert_eq!(rep.x_star, tau_x.scale_rows(&diag));

    let check = verify_adjoints(n_points, &b, &q);
    println!("{check}");
    assert!(check.passed());

    for n in 0..n_points {
        println!("X* P*_{n} = {:?}", adjoint_solution(n, n_points, &b, &q)?);
        assert!(verify_adjoint_gevp(n, n_points, &b, &q).passed());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
