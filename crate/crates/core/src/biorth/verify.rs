//! Adjoint relations and the discrete biorthogonality on the grid.

use serde::Serialize;

use super::grid::{
    adjoint, make_grid_rep, shift_matrix, t_minus_adjoint_closed_form, t_plus_adjoint_closed_form,
    tau_b, tau_function, tau_matrix, x_matrix, x_star_closed_form, y_matrix, y_star_closed_form,
    GridRep,
};
use super::matrix::{GridFunction, Matrix};
use crate::error::{Error, Result};
use crate::pastro::{
    baxter_system, biorthogonal_partner, norm_constant, pastro_eigenvalue, pastro_poly, GridWeights,
};
use crate::qcore::{QParams, Rational};
use crate::report::{ensure, scalar_eq, Check, Outcome};

fn matrix_eq(label: &str, lhs: &Matrix, rhs: &Matrix) -> Outcome {
    match lhs.first_difference(rhs) {
        None => Ok(()),
        Some((i, j)) => Err(format!(
            "{label}: entry ({i},{j}): lhs={} rhs={}",
            lhs.get(i, j),
            rhs.get(i, j)
        )),
    }
}

fn grid_check(
    name: String,
    anchor: &str,
    n_points: usize,
    b: &Rational,
    q: &Rational,
    result: Result<Outcome>,
) -> Check {
    Check::from_result(name, anchor, result)
        .with_param("N", n_points)
        .with_param("q", q)
        .with_param("b", b)
}

/// Adjoint structure on an `N`-point grid:
/// the defining identity `(W e_i, e_j) = (e_i, W* e_j)` over all basis pairs;
/// closed forms of `X*`, `Y*`, `(T^+)*`, `(T^-)*`; `X* = diag(-b q^s) tau(X)`,
/// `Y* = diag(-b^-1 q^(s+1-N)) tau(Y)`; `tau^2 = id`; `(W*)* = W`; and
/// `tau = S then T` on `b`.
pub fn verify_adjoints(n_points: usize, b: &Rational, q: &Rational) -> Check {
    let result = (|| -> Result<Outcome> {
        let rep = make_grid_rep(n_points, b, q)?;
        let n = n_points;
        let w = rep.w();
        for (label, m, star) in [("X", &rep.x, &rep.x_star), ("Y", &rep.y, &rep.y_star)] {
            for i in 0..n {
                for j in 0..n {
                    let (ei, ej) = (GridFunction::basis(n, i), GridFunction::basis(n, j));
                    let lhs = rep.scalar_product(&m.mul_vec(&ei)?, &ej);
                    let rhs = rep.scalar_product(&ei, &star.mul_vec(&ej)?);
                    if let Err(wit) = scalar_eq(&format!("({label} e_{i}, e_{j})"), &lhs, &rhs) {
                        return Ok(Err(wit));
                    }
                }
            }
            if let Err(wit) = matrix_eq(&format!("({label}*)*"), &adjoint(star, w)?, m) {
                return Ok(Err(wit));
            }
        }
        let t_plus_star = adjoint(&shift_matrix(n, true), w)?;
        let t_minus_star = adjoint(&shift_matrix(n, false), w)?;
        let scale_x: Vec<Rational> = (0..n).map(|s| -(b * q.pow(s as i64))).collect();
        let scale_y: Vec<Rational> = (0..n)
            .map(|s| -(b.inv() * q.pow(s as i64 + 1 - n as i64)))
            .collect();
        let tau_x = tau_matrix(|bb| Ok(x_matrix(n, bb, q)), b, q, n)?;
        let tau_y = tau_matrix(|bb| Ok(y_matrix(n, bb, q)), b, q, n)?;
        let tau2_x = tau_matrix(
            |bb| tau_matrix(|c| Ok(x_matrix(n, c, q)), bb, q, n),
            b,
            q,
            n,
        )?;
        let tau2_y = tau_matrix(
            |bb| tau_matrix(|c| Ok(y_matrix(n, c, q)), bb, q, n),
            b,
            q,
            n,
        )?;
        // S: b -> b q, then T: b -> b^-1 q^(2-N)
        let s_then_t = (b * q).inv() * q.pow(2 - n as i64);
        Ok(
            matrix_eq("X* closed form", &rep.x_star, &x_star_closed_form(n, b, q))
                .and_then(|_| {
                    matrix_eq("Y* closed form", &rep.y_star, &y_star_closed_form(n, b, q))
                })
                .and_then(|_| {
                    matrix_eq("(T+)*", &t_plus_star, &t_plus_adjoint_closed_form(n, b, q))
                })
                .and_then(|_| {
                    matrix_eq(
                        "(T-)*",
                        &t_minus_star,
                        &t_minus_adjoint_closed_form(n, b, q),
                    )
                })
                .and_then(|_| {
                    matrix_eq(
                        "X* vs -b q^s tau(X)",
                        &rep.x_star,
                        &tau_x.scale_rows(&scale_x),
                    )
                })
                .and_then(|_| {
                    matrix_eq(
                        "Y* vs -b^-1 q^(s+1-N) tau(Y)",
                        &rep.y_star,
                        &tau_y.scale_rows(&scale_y),
                    )
                })
                .and_then(|_| matrix_eq("tau^2(X)", &tau2_x, &rep.x))
                .and_then(|_| matrix_eq("tau^2(Y)", &tau2_y, &rep.y))
                .and_then(|_| scalar_eq("tau on b vs S then T", &tau_b(b, q, n), &s_then_t)),
        )
    })();
    grid_check(
        format!("adjoints N={n_points}"),
        "adj id, adj Tp/Tm, act trans X/Y, tranf tau",
        n_points,
        b,
        q,
        result,
    )
}

/// `P_n(q^(N-s); q^(1-N), b^-1 q^(1-N))`: the `tau`-image of `P_n` on the grid.
pub fn adjoint_solution(
    n: usize,
    n_points: usize,
    b: &Rational,
    q: &Rational,
) -> Result<GridFunction> {
    tau_function(
        |bb| {
            let params = QParams::restricted(n_points, q.clone(), bb.clone())?;
            let grid: Vec<Rational> = (0..n_points).map(|s| q.pow(s as i64 + 1)).collect();
            GridFunction::sample(&pastro_poly(n, &params)?, &grid)
        },
        b,
        q,
        n_points,
    )
}

/// Adjoint generalized eigenproblem for `n < N`:
/// `Y* P_n* = lambda_n X* P_n*`; `X* P_n*` is a nonzero multiple of the
/// closed-form partner `R_n`, of the Baxter partner `Q_n(1/x)`, and of
/// `P_n(q^(N-s); q^(1-N), b^-1 q^(2-N))`; and `tau` commutes with applying
/// `X` to `P_n`.
pub fn verify_adjoint_gevp(n: usize, n_points: usize, b: &Rational, q: &Rational) -> Check {
    let result = (|| -> Result<Outcome> {
        if n >= n_points {
            return Err(Error::InvalidParams(format!(
                "need n < N, got n={n}, N={n_points}"
            )));
        }
        let rep = make_grid_rep(n_points, b, q)?;
        let grid = rep.grid();
        let p_star = adjoint_solution(n, n_points, b, q)?;
        let lambda = pastro_eigenvalue(n, &rep.params);
        let xs = rep.x_star.mul_vec(&p_star)?;
        let ys = rep.y_star.mul_vec(&p_star)?;
        if let Err(w) = ensure(ys == xs.scale(&lambda), || {
            format!(
                "Y* P_n* != lambda_n X* P_n*: {ys:?} vs {:?}",
                xs.scale(&lambda)
            )
        }) {
            return Ok(Err(w));
        }
        if xs.is_zero() {
            return Err(Error::Degenerate(format!("X* P_{n}* vanishes on the grid")));
        }
        let partner = GridFunction::sample(&biorthogonal_partner(n, &rep.params)?, grid)?;
        let baxter = baxter_system(n, &rep.params)?;
        let baxter_partner = GridFunction::sample(&baxter.q_polys[n].reflect(), grid)?;
        let t_params =
            QParams::restricted(n_points, q.clone(), b.inv() * q.pow(2 - n_points as i64))?;
        let t_image = GridFunction::sample(&pastro_poly(n, &t_params)?, grid)?.reversed();
        // tau(X P_n) = tau(X) tau(P_n)
        let x_p = |bb: &Rational| -> Result<GridFunction> {
            let params = QParams::restricted(n_points, q.clone(), bb.clone())?;
            let f = GridFunction::sample(&pastro_poly(n, &params)?, grid)?;
            x_matrix(n_points, bb, q).mul_vec(&f)
        };
        let lhs_nat = tau_function(x_p, b, q, n_points)?;
        let tau_x = tau_matrix(|bb| Ok(x_matrix(n_points, bb, q)), b, q, n_points)?;
        let rhs_nat = tau_x.mul_vec(&p_star)?;
        let nonzero_prop = |label: &str, v: &GridFunction| {
            ensure(!v.is_zero() && xs.proportional_to(v), || {
                format!("X* P_n* not proportional to {label}: {xs:?} vs {v:?}")
            })
        };
        Ok(nonzero_prop("R_n", &partner)
            .and_then(|_| nonzero_prop("Baxter Q_n(1/x)", &baxter_partner))
            .and_then(|_| nonzero_prop("T P_n", &t_image))
            .and_then(|_| {
                ensure(lhs_nat == rhs_nat, || {
                    format!("tau(X P_n) != tau(X) tau(P_n): {lhs_nat:?} vs {rhs_nat:?}")
                })
            }))
    })();
    grid_check(
        format!("adjoint_gevp[n={n}] N={n_points}"),
        "adj GEVP XY, adPtauP, eq R, RnPn",
        n_points,
        b,
        q,
        result,
    )
    .with_param("n", n)
}

#[derive(Debug, Clone, Serialize)]
pub struct BiorthogonalityReport {
    pub weights: Option<GridWeights>,
    pub h: Vec<Rational>,
    pub gram: Option<Matrix>,
    pub check: Check,
}

/// Gram matrix `G_nm = sum_s w_s P_n(x_s) R_m(x_s)` for `n, m < N`, checked
/// against `diag(h_0, ..., h_(N-1))`, together with `h_N = 0`, simple zeros
/// of `P_N` at the grid points and the weight formula
/// `w_s = h_(N-1) / (P_N'(x_s) Q_(N-1)(1/x_s))`.
pub fn verify_biorthogonality(
    n_points: usize,
    b: &Rational,
    q: &Rational,
) -> BiorthogonalityReport {
    let mut report = BiorthogonalityReport {
        weights: None,
        h: Vec::new(),
        gram: None,
        check: Check::new("", ""),
    };
    let result = (|| -> Result<Outcome> {
        let rep: GridRep = make_grid_rep(n_points, b, q)?;
        let params = &rep.params;
        let grid = rep.grid().to_vec();
        report.weights = Some(rep.weights.clone());
        let h: Vec<Rational> = (0..=n_points)
            .map(|n| norm_constant(n, params))
            .collect::<Result<_>>()?;
        report.h = h[..n_points].to_vec();
        let p_samples: Vec<GridFunction> = (0..n_points)
            .map(|n| GridFunction::sample(&pastro_poly(n, params)?, &grid))
            .collect::<Result<_>>()?;
        let r_samples: Vec<GridFunction> = (0..n_points)
            .map(|n| GridFunction::sample(&biorthogonal_partner(n, params)?, &grid))
            .collect::<Result<_>>()?;
        let gram = Matrix::from_fn(n_points, |n, m| {
            rep.scalar_product(&p_samples[n], &r_samples[m])
        });
        report.gram = Some(gram.clone());
        if let Err(w) = matrix_eq("Gram vs diag(h)", &gram, &Matrix::diagonal(&h[..n_points])) {
            return Ok(Err(w));
        }
        if let Some(n) = h[..n_points].iter().position(Rational::is_zero) {
            return Ok(Err(format!("h_{n} vanishes")));
        }
        if let Err(w) = scalar_eq("h_N", &h[n_points], &Rational::zero()) {
            return Ok(Err(w));
        }
        let p_top = pastro_poly(n_points, params)?;
        let dp_top = p_top.derivative();
        let r_last = biorthogonal_partner(n_points - 1, params)?;
        for (s, x) in grid.iter().enumerate() {
            let value = p_top.eval(x)?;
            let slope = dp_top.eval(x)?;
            if !value.is_zero() || slope.is_zero() {
                return Ok(Err(format!(
                    "P_N at x_{s}: value={value} derivative={slope}"
                )));
            }
            let expected = h[n_points - 1].checked_div(&(slope * r_last.eval(x)?), || {
                format!("P_N'(x_{s}) Q_(N-1)(1/x_{s})")
            })?;
            if let Err(w) = scalar_eq(&format!("w_{s} from Baxter data"), &rep.w()[s], &expected) {
                return Ok(Err(w));
            }
        }
        let total: Rational = rep.w().iter().cloned().sum();
        Ok(scalar_eq("sum of weights", &total, &Rational::one()))
    })();
    report.check = grid_check(
        format!("biorthogonality N={n_points}"),
        "rel biorth2, full norm h, cond 1/2, eq weight",
        n_points,
        b,
        q,
        result,
    );
    report
}
