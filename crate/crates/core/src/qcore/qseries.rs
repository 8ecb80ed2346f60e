//! q-Pochhammer symbols and terminating basic hypergeometric series.

use super::laurent::LaurentPoly;
use super::scalar::Rational;
use crate::error::{Error, Result};

/// `(z; q)_n = prod_{j=0}^{n-1} (1 - z q^j)`, equal to 1 for `n = 0`.
pub fn qpochhammer(z: &Rational, q: &Rational, n: usize) -> Rational {
    let one = Rational::one();
    let mut acc = Rational::one();
    let mut zq = z.clone();
    for _ in 0..n {
        acc *= &(&one - &zq);
        zq *= q;
    }
    acc
}

/// `q^k` for integer `k` of either sign.
pub fn qpow(q: &Rational, k: i64) -> Rational {
    q.pow(k)
}

/// Terminating `2phi1(q^-n, upper; lower; q, arg)` where `arg` is any Laurent
/// polynomial:
///
/// `sum_{k=0}^{n} (q^-n;q)_k (upper;q)_k / ((lower;q)_k (q;q)_k) * arg^k`.
///
/// The term ratios are accumulated incrementally, so each factor of the lower
/// Pochhammer symbols is checked once.
pub fn phi21_terminating(
    n: usize,
    upper: &Rational,
    lower: &Rational,
    q: &Rational,
    arg: &LaurentPoly,
) -> Result<LaurentPoly> {
    let one = Rational::one();
    let top = q.pow(-(n as i64));
    let mut coeff = Rational::one();
    let mut power = LaurentPoly::one();
    let mut sum = LaurentPoly::one();
    for j in 0..n {
        let qj = q.pow(j as i64);
        let den = (&one - lower * &qj) * (&one - &qj * q);
        if den.is_zero() {
            return Err(Error::Resonant(format!(
                "(lower;q)_{} (q;q)_{} vanishes with lower = {lower}",
                j + 1,
                j + 1
            )));
        }
        coeff = coeff * (&one - &top * &qj) * (&one - upper * &qj) / den;
        power = &power * arg;
        sum = &sum + &power.scale(&coeff);
    }
    Ok(sum)
}

/// Terminating `1phi0(q^-n; -; q, z) = sum_k (q^-n;q)_k / (q;q)_k z^k`.
pub fn phi10_terminating(n: usize, q: &Rational, z: &Rational) -> Result<Rational> {
    let top = q.pow(-(n as i64));
    let mut total = Rational::zero();
    for k in 0..=n {
        let den = qpochhammer(q, q, k);
        let term = qpochhammer(&top, q, k).checked_div(&den, || format!("(q;q)_{k}"))?;
        total += &(term * z.pow(k as i64));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::scalar::rat;

    #[test]
    fn pochhammer_values() {
        let q = rat(1, 2);
        assert_eq!(qpochhammer(&rat(7, 3), &q, 0), Rational::one());
        assert_eq!(qpochhammer(&rat(1, 5), &q, 2), rat(18, 25));
        assert_eq!(qpochhammer(&Rational::one(), &q, 1), Rational::zero());
        assert_eq!(qpochhammer(&Rational::one(), &q, 0), Rational::one());
    }

    #[test]
    fn phi21_degree_zero_is_one() {
        let r =
            phi21_terminating(0, &rat(3, 1), &rat(1, 1), &rat(1, 2), &LaurentPoly::x()).unwrap();
        assert_eq!(r, LaurentPoly::one());
    }

    #[test]
    fn phi21_two_term_expansion() {
        let (q, b, c) = (rat(1, 2), rat(1, 5), rat(2, 7));
        let one = Rational::one();
        let r = phi21_terminating(1, &b, &c, &q, &LaurentPoly::x()).unwrap();
        let lin = (&one - q.inv()) * (&one - &b) / ((&one - &c) * (&one - &q));
        assert_eq!(r, LaurentPoly::from_terms([(0, one.clone()), (1, lin)]));
    }

    #[test]
    fn phi21_resonant_lower() {
        let err = phi21_terminating(
            1,
            &rat(1, 5),
            &Rational::one(),
            &rat(1, 2),
            &LaurentPoly::x(),
        );
        assert!(matches!(err, Err(Error::Resonant(_))));
    }

    #[test]
    fn phi21_laurent_argument() {
        // arg = 1/x gives exponents in [-n, 0]
        let arg = LaurentPoly::monomial(rat(3, 1), -1);
        let r = phi21_terminating(3, &rat(2, 3), &rat(-5, 4), &rat(1, 3), &arg).unwrap();
        assert_eq!(r.degree(), Some(0));
        assert_eq!(r.valuation(), Some(-3));
    }
}
