//! Baxter's recurrence system
//!
//! ```text
//! P_(n+1)(x) = x P_n(x) - alpha_n x^n Q_n(1/x)
//! Q_(n+1)(x) = x Q_n(x) - beta_n  x^n P_n(1/x)
//! P_0 = Q_0 = 1
//! ```
//!
//! with closed-form `alpha_n`, `beta_n` and `h_n = prod_(k<n) (1 - alpha_k beta_k)`.

use serde::Serialize;

use super::{biorthogonal_partner, mu_coefficients, pastro_poly};
use crate::error::{Error, Result};
use crate::qcore::{qpochhammer, LaurentPoly, QParams, Rational};
use crate::report::{for_each_index, poly_eq, scalar_eq, Check, Outcome};

#[derive(Debug, Clone, Serialize)]
pub struct BaxterData {
    pub alpha: Vec<Rational>,
    pub beta: Vec<Rational>,
    pub h: Vec<Rational>,
    /// `Q_0, ..., Q_(n_max)`; empty when only the coefficients were requested.
    pub q_polys: Vec<LaurentPoly>,
}

fn alpha(n: usize, params: &QParams) -> Result<Rational> {
    let (q, a, b) = (params.q(), params.a(), params.b());
    let num = (b * q / a).pow(n as i64 + 1) * qpochhammer(&(a / b), q, n + 1);
    let den = qpochhammer(b, q, n + 1);
    Ok(-num.checked_div(&den, || format!("(b;q)_{}", n + 1))?)
}

fn beta(n: usize, params: &QParams) -> Result<Rational> {
    let (q, a, b) = (params.q(), params.a(), params.b());
    let num = (b / a).pow(-(n as i64) - 1) * qpochhammer(&(b / q), q, n + 1);
    let den = qpochhammer(&(a / b * q), q, n + 1);
    Ok(-num.checked_div(&den, || format!("(a b^-1 q;q)_{}", n + 1))?)
}

/// `h_n = (a;q)_n (q;q)_n / ((a b^-1 q;q)_n (b;q)_n)`.
pub fn norm_constant(n: usize, params: &QParams) -> Result<Rational> {
    let (q, a, b) = (params.q(), params.a(), params.b());
    let num = qpochhammer(a, q, n) * qpochhammer(q, q, n);
    let den = qpochhammer(&(a / b * q), q, n) * qpochhammer(b, q, n);
    num.checked_div(&den, || format!("(a b^-1 q;q)_{n} (b;q)_{n}"))
}

/// Closed-form `alpha_n`, `beta_n`, `h_n` for `n <= n_max`.
pub fn baxter_coefficients(n_max: usize, params: &QParams) -> Result<BaxterData> {
    let range = 0..=n_max;
    Ok(BaxterData {
        alpha: range
            .clone()
            .map(|n| alpha(n, params))
            .collect::<Result<_>>()?,
        beta: range
            .clone()
            .map(|n| beta(n, params))
            .collect::<Result<_>>()?,
        h: range
            .map(|n| norm_constant(n, params))
            .collect::<Result<_>>()?,
        q_polys: Vec::new(),
    })
}

/// Closed forms against `alpha_n = -alpha_(n-1) mu_n^(1)`,
/// `beta_n = (mu_(n+1)^(2) - mu_(n+1)^(1)) / alpha_(n+1)` and the product
/// formula for `h_n`.
pub fn verify_baxter_coefficients(n_max: usize, params: &QParams) -> Check {
    let result = (|| -> Result<Outcome> {
        let data = baxter_coefficients(n_max + 1, params)?;
        let mut h_prod = Rational::one();
        for_each_index(0..=n_max, "n", |n| {
            if n > 0 {
                let (mu1, _) = mu_coefficients(n, params)?;
                let expect = -(&data.alpha[n - 1] * &mu1);
                if let Err(w) = scalar_eq("alpha recurrence", &data.alpha[n], &expect) {
                    return Ok(Err(w));
                }
            }
            let (mu1, mu2) = mu_coefficients(n + 1, params)?;
            let expect =
                (&mu2 - &mu1).checked_div(&data.alpha[n + 1], || format!("alpha_{}", n + 1))?;
            if let Err(w) = scalar_eq("beta recurrence", &data.beta[n], &expect) {
                return Ok(Err(w));
            }
            let out = scalar_eq("h product", &data.h[n], &h_prod);
            h_prod *= &(Rational::one() - &data.alpha[n] * &data.beta[n]);
            Ok(out)
        })
    })();
    Check::from_result(
        format!("baxter_coefficients n<={n_max}"),
        "full rec coeff alpha/beta, norm h",
        result,
    )
    .with_params(params)
}

/// Builds `Q_0, ..., Q_(n_max)` by iterating the second Baxter recurrence
/// with the closed-form `beta_n`.
pub fn baxter_system(n_max: usize, params: &QParams) -> Result<BaxterData> {
    let mut data = baxter_coefficients(n_max, params)?;
    let x = LaurentPoly::x();
    let mut q_polys = vec![LaurentPoly::one()];
    for n in 0..n_max {
        let p_reflected = pastro_poly(n, params)?.reflect().shift_exponents(n as i64);
        let next = &(&x * &q_polys[n]) - &p_reflected.scale(&data.beta[n]);
        q_polys.push(next);
    }
    data.q_polys = q_polys;
    Ok(data)
}

/// Checks, for `n <= n_max`: the first recurrence with the iterated `Q_n`;
/// that `(x P_n - P_(n+1)) / (alpha_n x^n)` reproduces `Q_n(1/x)`; and that
/// `Q_n(1/x)` equals the closed-form partner `R_n(x)`.
pub fn verify_baxter_system(n_max: usize, params: &QParams) -> Check {
    let result = (|| -> Result<Outcome> {
        let data = baxter_system(n_max, params)?;
        let x = LaurentPoly::x();
        for_each_index(0..=n_max, "n", |n| {
            let p = pastro_poly(n, params)?;
            let p_next = pastro_poly(n + 1, params)?;
            let q_reflected = data.q_polys[n].reflect();
            let rec = &(&x * &p) - &q_reflected.shift_exponents(n as i64).scale(&data.alpha[n]);
            if let Err(w) = poly_eq("first recurrence", &p_next, &rec) {
                return Ok(Err(w));
            }
            let inv_alpha = data.alpha[n]
                .checked_inv()
                .ok_or_else(|| Error::Resonant(format!("alpha_{n} vanishes")))?;
            let extracted = (&(&x * &p) - &p_next)
                .shift_exponents(-(n as i64))
                .scale(&inv_alpha);
            if let Err(w) = poly_eq("extracted Q_n(1/x)", &extracted, &q_reflected) {
                return Ok(Err(w));
            }
            let partner = biorthogonal_partner(n, params)?;
            Ok(poly_eq("Q_n(1/x) vs R_n(x)", &q_reflected, &partner))
        })
    })();
    Check::from_result(
        format!("baxter_system n<={n_max}"),
        "rec sys 1-3, poly Q, full poly Q",
        result,
    )
    .with_params(params)
}
