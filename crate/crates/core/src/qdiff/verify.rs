//! Exact checks of the spectral identities satisfied by `P_n`.

use super::operator::make_operators;
use crate::error::Result;
use crate::pastro::{pastro_eigenvalue, pastro_poly, three_term_recurrence};
use crate::qcore::{LaurentPoly, QParams, Rational};
use crate::report::{poly_eq, Check, Outcome};

fn check(name: &str, n: usize, anchor: &str, params: &QParams, result: Result<Outcome>) -> Check {
    Check::from_result(format!("{name}[n={n}]"), anchor, result)
        .with_params(params)
        .with_param("n", n)
}

/// `Y P_n = lambda_n X P_n`.
pub fn verify_gevp(n: usize, params: &QParams) -> Check {
    let result = (|| {
        let ops = make_operators(params);
        let p = pastro_poly(n, params)?;
        let lambda = pastro_eigenvalue(n, params);
        Ok(poly_eq(
            "Y P_n vs lambda_n X P_n",
            &ops.y.apply(&p),
            &ops.x.apply(&p).scale(&lambda),
        ))
    })();
    check("gevp", n, "GEVP XY", params, result)
}

/// The second-order q-difference equation written out with dilations of
/// `P_n`, independent of the operator objects:
///
/// ```text
/// (x - a^-1 q) P_n(qx) + (a^-1 q - b^-1 x) P_n(x)
///     = -b^-1 q^n [ (x - q) P_n(x/q) + (q - b x) P_n(x) ]
/// ```
pub fn verify_qdiff_equation(n: usize, params: &QParams) -> Check {
    let result = (|| {
        let (q, a, b) = (params.q(), params.a(), params.b());
        let p = pastro_poly(n, params)?;
        let one = Rational::one();
        let lin = |c0: Rational, c1: Rational| LaurentPoly::from_terms([(0, c0), (1, c1)]);
        let aq = q / a;
        let lhs = &(&lin(-&aq, one.clone()) * &p.dilate(q)) + &(&lin(aq.clone(), -b.inv()) * &p);
        let bracket = &(&lin(-q, one.clone()) * &p.dilate(&q.inv())) + &(&lin(q.clone(), -b) * &p);
        let factor = -(b.inv() * q.pow(n as i64));
        Ok(poly_eq(
            "q-difference equation",
            &lhs,
            &bracket.scale(&factor),
        ))
    })();
    check("qdiff_equation", n, "diff eq Pastro", params, result)
}

/// The operator triple shifts `b -> b q`:
///
/// ```text
/// X P_n(x; a, b) = q^-n (1 - b q^n) x P_n(x; a, b q)
/// Y P_n(x; a, b) = -b^-1 (1 - b q^n) x P_n(x; a, b q)
/// Z P_n(x; a, b) = q^-n (1 - b q^n) P_n(x; a, b q)
/// ```
pub fn verify_contiguity(n: usize, params: &QParams) -> Check {
    let result = (|| {
        let (q, b) = (params.q(), params.b());
        let ops = make_operators(params);
        let p = pastro_poly(n, params)?;
        let shifted = pastro_poly(n, &params.shift_b())?;
        let x = LaurentPoly::x();
        let factor = Rational::one() - b * q.pow(n as i64);
        let cx = q.pow(-(n as i64)) * &factor;
        let cy = -(b.inv() * &factor);
        let xz = &x * &ops.z.apply(&p);
        Ok(poly_eq(
            "X contiguity",
            &ops.x.apply(&p),
            &(&x * &shifted).scale(&cx),
        )
        .and_then(|_| {
            poly_eq(
                "Y contiguity",
                &ops.y.apply(&p),
                &(&x * &shifted).scale(&cy),
            )
        })
        .and_then(|_| poly_eq("Z contiguity", &ops.z.apply(&p), &shifted.scale(&cx)))
        .and_then(|_| poly_eq("x Z P_n vs X P_n", &xz, &ops.x.apply(&p))))
    })();
    check("contiguity", n, "ctg rel X/Y/Z, transf S", params, result)
}

/// Actions of the triple on the `P_n` basis and the three-term recurrence:
///
/// ```text
/// X P_n = q^-n (1 - b q^n) P_(n+1) + q (1 - a^-1 b q^-n) P_n
/// Z P_n = q^-n (1 - b q^n) P_n + b q (1 - q^-n)(1 - a q^(n-1)) / (a (1 - b q^(n-1))) P_(n-1)
/// Y P_n = lambda_n X P_n            (derived, not an independent formula)
/// x Z P_n = X P_n
/// ```
pub fn verify_recurrence(n: usize, params: &QParams) -> Check {
    let result = (|| {
        let (q, a, b) = (params.q(), params.a(), params.b());
        let one = Rational::one();
        let ops = make_operators(params);
        let n_i = n as i64;
        let p = pastro_poly(n, params)?;
        let p_next = pastro_poly(n + 1, params)?;
        let diag = q.pow(-n_i) * (&one - b * q.pow(n_i));
        let x_rhs = &p_next.scale(&diag) + &p.scale(&(q * (&one - b / a * q.pow(-n_i))));
        let z_rhs = if n == 0 {
            p.scale(&diag)
        } else {
            let num = b * q * (&one - q.pow(-n_i)) * (&one - a * q.pow(n_i - 1));
            let low = num.checked_div(&(a * (&one - b * q.pow(n_i - 1))), || {
                format!("1 - b q^{}", n_i - 1)
            })?;
            &p.scale(&diag) + &pastro_poly(n - 1, params)?.scale(&low)
        };
        let lambda = pastro_eigenvalue(n, params);
        let xp = ops.x.apply(&p);
        let zp = ops.z.apply(&p);
        let recurrence = three_term_recurrence(n, params)?;
        Ok(poly_eq("X on P_n basis", &xp, &x_rhs)
            .and_then(|_| poly_eq("Z on P_n basis", &zp, &z_rhs))
            .and_then(|_| poly_eq("Y on P_n basis", &ops.y.apply(&p), &x_rhs.scale(&lambda)))
            .and_then(|_| poly_eq("x Z P_n vs X P_n", &(&LaurentPoly::x() * &zp), &xp))
            .and(recurrence))
    })();
    check(
        "recurrence",
        n,
        "act rec X/Z, same rec rel Pastro, XZPn",
        params,
        result,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pastro::mu_coefficients;
    use crate::qcore::rat;

    fn reference() -> QParams {
        QParams::new(rat(1, 2), rat(3, 1), rat(1, 5)).unwrap()
    }

    #[test]
    fn gevp_reference() {
        let p = reference();
        for n in 0..=10 {
            let c = verify_gevp(n, &p);
            assert!(c.passed(), "{c}");
        }
    }

    #[test]
    fn gevp_degree_zero_by_hand() {
        let p = reference();
        let ops = make_operators(&p);
        let one = Rational::one();
        let y1 = ops.y.apply(&LaurentPoly::one());
        let x1 = ops.x.apply(&LaurentPoly::one());
        assert_eq!(y1, LaurentPoly::monomial(&one - p.b().inv(), 1));
        assert_eq!(x1, LaurentPoly::monomial(&one - p.b(), 1));
        assert_eq!(y1.coeff(1) / x1.coeff(1), pastro_eigenvalue(0, &p));
    }

    #[test]
    fn gevp_resonant_is_error() {
        let q = rat(1, 2);
        let p = QParams::new(q.clone(), rat(1, 1), q).unwrap();
        assert!(verify_gevp(2, &p).is_error());
    }

    #[test]
    fn qdiff_equation_agrees_with_gevp() {
        for p in [
            reference(),
            QParams::new(rat(3, 2), rat(-2, 5), rat(4, 7)).unwrap(),
        ] {
            for n in 0..=10 {
                let a = verify_gevp(n, &p);
                let b = verify_qdiff_equation(n, &p);
                assert!(a.passed() && b.passed(), "{a} / {b}");
            }
        }
    }

    #[test]
    fn contiguity_reference() {
        let p = reference();
        for n in 0..=8 {
            let c = verify_contiguity(n, &p);
            assert!(c.passed(), "{c}");
        }
    }

    #[test]
    fn recurrence_reference() {
        let p = reference();
        for n in 0..=10 {
            let c = verify_recurrence(n, &p);
            assert!(c.passed(), "{c}");
        }
    }

    #[test]
    fn degree_two_from_recurrence() {
        let p = reference();
        let (mu1, mu2) = mu_coefficients(1, &p).unwrap();
        let p1 = pastro_poly(1, &p).unwrap();
        let built =
            &(&LaurentPoly::x() * &(&p1 + &LaurentPoly::one().scale(&mu2))) - &p1.scale(&mu1);
        assert_eq!(built, pastro_poly(2, &p).unwrap());
    }
}
