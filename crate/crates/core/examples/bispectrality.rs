//! The operator triple X, Y, Z: the generalized eigenvalue problem, the
//! q-difference equation and the recurrence, all as exact identities.

use pastro::pastro::{pastro_eigenvalue, pastro_poly};
use pastro::qdiff::{
    make_operators, verify_contiguity, verify_gevp, verify_qdiff_equation, verify_recurrence,
    QDiffOperator,
};
use pastro::{rat, LaurentPoly, QParams};

pub fn run() -> pastro::Result<()> {
    let params = QParams::new(rat(-3, 4), rat(2, 5), rat(-7, 3))?;
    let ops = make_operators(&params);
    println!("X = {}", serde_json::to_string(&ops.x).unwrap());

    let p3 = pastro_poly(3, &params)?;
    let lambda = pastro_eigenvalue(3, &params);
    assert_eq!(ops.y.apply(&p3), ops.x.apply(&p3).scale(&lambda));
    println!("Y P_3 = {lambda} X P_3");

    // x Z = X as operators on polynomials
    let xz = &QDiffOperator::multiplication(params.q(), LaurentPoly::x()) * &ops.z;
    assert_eq!(xz.apply(&p3), ops.x.apply(&p3));

    for n in 0..=6 {
        for check in [
            verify_gevp(n, &params),
            verify_qdiff_equation(n, &params),
            verify_recurrence(n, &params),
            verify_contiguity(n, &params),
        ] {
            println!("{check}");
            assert!(check.passed());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
