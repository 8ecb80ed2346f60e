//! q-Pochhammer symbols and terminating basic hypergeometric series.

use pastro::qcore::{phi10_terminating, phi21_terminating, qpochhammer};
use pastro::{rat, LaurentPoly, Rational};

pub fn run() -> pastro::Result<()> {
    let q = rat(1, 2);

    // (z;q)_n for a few n
    let z = rat(3, 1);
    for n in 0..4 {
        println!("(3;1/2)_{n} = {}", qpochhammer(&z, &q, n));
    }

    // q-binomial theorem, terminating form: 1phi0(q^-n; -; q, z) = (q^-n z;q)_n
    let n = 5;
    let z = rat(2, 7);
    let lhs = phi10_terminating(n, &q, &z)?;
    let rhs = qpochhammer(&(q.pow(-(n as i64)) * &z), &q, n);
    println!("1phi0 at n={n}: {lhs}");
    assert_eq!(lhs, rhs);

    // 2phi1 with a polynomial argument is a polynomial in x
    let series = phi21_terminating(3, &rat(1, 5), &rat(7, 3), &q, &LaurentPoly::x())?;
    println!("2phi1(q^-3, 1/5; 7/3; q, x) = {series}");
    assert_eq!(series.degree(), Some(3));
    assert_eq!(series.eval(&Rational::zero())?, Rational::one());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
