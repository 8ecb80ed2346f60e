//! Pastro polynomials, their Laurent partners and the recurrence data.
//!
//! `P_n(x; a, b; q)` is the monic degree-`n` polynomial
//!
//! ```text
//! P_n(x) = (a^-1 b q^(1-n);q)_n (q;q)_n / ((q^-n;q)_n (b;q)_n)
//!          * 2phi1(q^-n, b; a^-1 b q^(1-n); q, x)
//! ```
//!
//! Its coefficients are generated by a descending two-term recurrence
//! starting from the leading coefficient 1; the hypergeometric form and the
//! closed-form coefficient ratios are kept as independent cross-checks.

mod baxter;
mod weights;

pub use baxter::{
    baxter_coefficients, baxter_system, norm_constant, verify_baxter_coefficients,
    verify_baxter_system, BaxterData,
};
pub use weights::{verify_weights, weights, weights_t_image, GridWeights};

use crate::error::{Error, Result};
use crate::qcore::{phi21_terminating, qpochhammer, LaurentPoly, QParams, Rational};
use crate::report::{ensure, for_each_index, poly_eq, Check, Outcome};

/// Monic Pastro polynomial of degree `n`.
pub fn pastro_poly(n: usize, params: &QParams) -> Result<LaurentPoly> {
    let (q, a, b) = (params.q(), params.a(), params.b());
    let one = Rational::one();
    let ab = b / a;
    let n_i = n as i64;
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    for k in (0..n).rev() {
        let k_i = k as i64;
        // (1 - q^(k-n)) (1 - b q^k) C_k = (1 - a^-1 b q^(k+1-n)) (1 - q^(k+1)) C_(k+1)
        let upper = &one - &ab * q.pow(k_i + 1 - n_i);
        if upper.is_zero() {
            return Err(Error::Resonant(format!(
                "(a^-1 b q^(1-n);q)_n vanishes (factor 1 - a^-1 b q^{}) at n={n}",
                k_i + 1 - n_i
            )));
        }
        let lower_b = &one - b * q.pow(k_i);
        if lower_b.is_zero() {
            return Err(Error::Resonant(format!(
                "(b;q)_n vanishes (factor 1 - b q^{k}) at n={n}"
            )));
        }
        let lower = (&one - q.pow(k_i - n_i)) * lower_b;
        coeffs[k] = upper * (&one - q.pow(k_i + 1)) * &coeffs[k + 1] / lower;
    }
    Ok(LaurentPoly::from_coeffs(&coeffs))
}

/// Coefficients `C_(n,k) / C_(n,n)` from the closed-form Pochhammer ratio.
pub fn closed_form_coefficients(n: usize, params: &QParams) -> Result<Vec<Rational>> {
    let (q, a, b) = (params.q(), params.a(), params.b());
    let top = q.pow(-(n as i64));
    let lower = b / a * q.pow(1 - n as i64);
    let ratio = |k: usize| -> Result<Rational> {
        let num = qpochhammer(&top, q, k) * qpochhammer(b, q, k);
        let den = qpochhammer(&lower, q, k) * qpochhammer(q, q, k);
        num.checked_div(&den, || format!("(a^-1 b q^(1-n);q)_{k} (q;q)_{k}"))
    };
    let lead = ratio(n)?;
    if lead.is_zero() {
        return Err(Error::Resonant(format!("(b;q)_{n} vanishes")));
    }
    (0..=n).map(|k| Ok(ratio(k)? / &lead)).collect()
}

/// `P_n` assembled directly from the normalized `2phi1` series.
pub fn pastro_poly_from_series(n: usize, params: &QParams) -> Result<LaurentPoly> {
    let (q, a, b) = (params.q(), params.a(), params.b());
    let top = q.pow(-(n as i64));
    let lower = b / a * q.pow(1 - n as i64);
    let pre_num = qpochhammer(&lower, q, n) * qpochhammer(q, q, n);
    let pre_den = qpochhammer(&top, q, n) * qpochhammer(b, q, n);
    let pre = pre_num.checked_div(&pre_den, || format!("(b;q)_{n}"))?;
    let series = phi21_terminating(n, b, &lower, q, &LaurentPoly::x())?;
    Ok(series.scale(&pre))
}

/// `lambda_n = -b^-1 q^n`.
pub fn pastro_eigenvalue(n: usize, params: &QParams) -> Rational {
    -(params.b().inv() * params.qpow(n as i64))
}

/// `(mu_n^(1), mu_n^(2))` of the three-term recurrence
/// `P_(n+1) + mu1 P_n = x (P_n + mu2 P_(n-1))`. `mu2` is 0 at `n = 0`.
pub fn mu_coefficients(n: usize, params: &QParams) -> Result<(Rational, Rational)> {
    let (q, a, b) = (params.q(), params.a(), params.b());
    let one = Rational::one();
    let n_i = n as i64;
    let qn = q.pow(n_i);
    let one_bqn = &one - b * &qn;
    let mu1 = (-(q * (b - a * &qn))).checked_div(&(a * &one_bqn), || format!("1 - b q^{n}"))?;
    if n == 0 {
        return Ok((mu1, Rational::zero()));
    }
    let one_bqn1 = &one - b * q.pow(n_i - 1);
    let num = -(b * q * (&one - &qn) * (&one - a * q.pow(n_i - 1)));
    let mu2 = num.checked_div(&(a * one_bqn * one_bqn1), || {
        format!("(1 - b q^{n})(1 - b q^{})", n_i - 1)
    })?;
    Ok((mu1, mu2))
}

/// Closed-form biorthogonal partner
///
/// ```text
/// R_n(x) = (q^-n;q)_n (b q^-1;q)_n / ((a^-1 b q^-n;q)_n (q;q)_n)
///          * 2phi1(q^-n, a b^-1 q; b^-1 q^(2-n); q, q^2/(a x))
/// ```
///
/// a Laurent polynomial with exponents in `[-n, 0]`.
pub fn biorthogonal_partner(n: usize, params: &QParams) -> Result<LaurentPoly> {
    let (q, a, b) = (params.q(), params.a(), params.b());
    let n_i = n as i64;
    let top = q.pow(-n_i);
    let pre_num = qpochhammer(&top, q, n) * qpochhammer(&(b / q), q, n);
    let pre_den = qpochhammer(&(b / a * &top), q, n) * qpochhammer(q, q, n);
    let pre = pre_num.checked_div(&pre_den, || format!("(a^-1 b q^-n;q)_{n}"))?;
    let upper = a / b * q;
    let lower = b.inv() * q.pow(2 - n_i);
    let arg = LaurentPoly::monomial(q * q / a, -1);
    Ok(phi21_terminating(n, &upper, &lower, q, &arg)?.scale(&pre))
}

/// The family `P_0, ..., P_(n_max)` built after eager validation of every
/// degree.
#[derive(Debug, Clone)]
pub struct PastroFamily {
    params: QParams,
    polys: Vec<LaurentPoly>,
}

impl PastroFamily {
    /// Fails with every offending factor when the parameters are resonant for
    /// some degree `<= n_max`.
    pub fn new(params: &QParams, n_max: usize) -> Result<Self> {
        let bad = params.resonances(n_max);
        if !bad.is_empty() {
            return Err(Error::Resonant(bad.join("; ")));
        }
        let polys = (0..=n_max)
            .map(|n| pastro_poly(n, params))
            .collect::<Result<Vec<_>>>()?;
        Ok(PastroFamily {
            params: params.clone(),
            polys,
        })
    }

    pub fn params(&self) -> &QParams {
        &self.params
    }

    pub fn n_max(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&LaurentPoly> {
        self.polys.get(n)
    }

    pub fn polys(&self) -> &[LaurentPoly] {
        &self.polys
    }
}

/// Recurrence output against the closed-form coefficient ratios and the
/// hypergeometric form, for `n <= n_max`.
pub fn verify_construction(n_max: usize, params: &QParams) -> Check {
    let result = for_each_index(0..=n_max, "n", |n| {
        let p = pastro_poly(n, params)?;
        let closed = LaurentPoly::from_coeffs(&closed_form_coefficients(n, params)?);
        let series = pastro_poly_from_series(n, params)?;
        let monic = ensure(
            p.degree() == Some(n as i64) && p.leading_coeff().is_some_and(Rational::is_one),
            || format!("P_{n} is not monic of degree {n}"),
        );
        Ok(monic
            .and_then(|_| poly_eq("recurrence vs closed form", &p, &closed))
            .and_then(|_| poly_eq("recurrence vs 2phi1", &p, &series)))
    });
    Check::from_result(
        format!("pastro_construction n<={n_max}"),
        "def Pastro / two-term rec / Cnk",
        result,
    )
    .with_params(params)
}

/// `P_(n+1) + mu1 P_n = x (P_n + mu2 P_(n-1))` for `n <= n_max`.
pub fn three_term_recurrence(n: usize, params: &QParams) -> Result<Outcome> {
    let (mu1, mu2) = mu_coefficients(n, params)?;
    let p_next = pastro_poly(n + 1, params)?;
    let p = pastro_poly(n, params)?;
    let lhs = &p_next + &p.scale(&mu1);
    let inner = if n == 0 {
        p.clone()
    } else {
        &p + &pastro_poly(n - 1, params)?.scale(&mu2)
    };
    let rhs = &LaurentPoly::x() * &inner;
    Ok(poly_eq("three-term recurrence", &lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::rat;

    fn reference() -> QParams {
        QParams::new(rat(1, 2), rat(3, 1), rat(1, 5)).unwrap()
    }

    #[test]
    fn degree_zero_is_one() {
        assert_eq!(pastro_poly(0, &reference()).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn degree_one_reference_value() {
        let p = pastro_poly(1, &reference()).unwrap();
        assert_eq!(p, LaurentPoly::from_coeffs(&[rat(-7, 12), rat(1, 1)]));
        // x + q(b-a)/(a(1-b))
        let (q, a, b) = (rat(1, 2), rat(3, 1), rat(1, 5));
        let c0 = &q * (&b - &a) / (&a * (Rational::one() - &b));
        assert_eq!(p.coeff(0), c0);
    }

    #[test]
    fn resonant_degree_two() {
        // b = q and a = b q^-1
        let q = rat(1, 2);
        let params = QParams::new(q.clone(), rat(1, 1), q).unwrap();
        assert!(matches!(pastro_poly(2, &params), Err(Error::Resonant(_))));
        assert!(matches!(
            PastroFamily::new(&params, 2),
            Err(Error::Resonant(_))
        ));
        assert!(PastroFamily::new(&params, 1).is_ok());
    }

    #[test]
    fn family_lists_all_offending_factors() {
        let params = QParams::new(rat(1, 2), rat(3, 1), rat(4, 1)).unwrap();
        // b q^2 = 1
        let err = PastroFamily::new(&params, 4).unwrap_err();
        let Error::Resonant(msg) = err else { panic!() };
        assert!(msg.contains("1 - b q^2"), "{msg}");
    }

    #[test]
    fn eigenvalues() {
        let p = reference();
        assert_eq!(pastro_eigenvalue(0, &p), rat(-5, 1));
        assert_eq!(pastro_eigenvalue(1, &p), rat(-5, 2));
        assert_eq!(pastro_eigenvalue(2, &p), rat(-5, 4));
    }

    #[test]
    fn mu_reference_values() {
        let p = reference();
        assert_eq!(mu_coefficients(0, &p).unwrap(), (rat(7, 12), rat(0, 1)));
        assert_eq!(mu_coefficients(1, &p).unwrap(), (rat(13, 54), rat(5, 108)));
    }

    #[test]
    fn construction_routes_agree() {
        assert!(verify_construction(10, &reference()).passed());
        let other = QParams::new(rat(-2, 3), rat(5, 7), rat(-3, 4)).unwrap();
        assert!(verify_construction(8, &other).passed());
    }

    #[test]
    fn recurrence_holds() {
        let p = reference();
        for n in 0..=10 {
            assert_eq!(three_term_recurrence(n, &p).unwrap(), Ok(()), "n={n}");
        }
    }

    #[test]
    fn partner_support() {
        let p = reference();
        assert_eq!(biorthogonal_partner(0, &p).unwrap(), LaurentPoly::one());
        let r1 = biorthogonal_partner(1, &p).unwrap();
        let exps: Vec<i64> = r1.terms().map(|(k, _)| k).collect();
        assert_eq!(exps, vec![-1, 0]);
        let r5 = biorthogonal_partner(5, &p).unwrap();
        assert_eq!((r5.valuation(), r5.degree()), (Some(-5), Some(0)));
    }

    #[test]
    fn zeros_on_the_grid() {
        // a = q^(1-N): P_N = prod (x - q^(s+1))
        for n_points in 1..=6usize {
            let params = QParams::restricted(n_points, rat(1, 2), rat(1, 5)).unwrap();
            let p = pastro_poly(n_points, &params).unwrap();
            let mut expected = LaurentPoly::one();
            for s in 0..n_points {
                let root = rat(1, 2).pow(s as i64 + 1);
                expected = &expected * &LaurentPoly::from_coeffs(&[-root, Rational::one()]);
            }
            assert_eq!(p, expected, "N={n_points}");
        }
    }
}
