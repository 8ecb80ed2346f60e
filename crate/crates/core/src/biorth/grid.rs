//! Restriction of `X` and `Y` to the grid `x_s = q^(s+1)` with `a = q^(1-N)`,
//! their adjoints under `(f, g) = sum_s w_s f(x_s) g(x_s)`, and the
//! transformation `tau`.

use serde::Serialize;

use super::matrix::{GridFunction, Matrix};
use crate::error::{Error, Result};
use crate::pastro::{weights, GridWeights};
use crate::qcore::{QParams, Rational};

/// `(X f)_s = q(q^s - 1) f_(s-1) + q(1 - b q^s) f_s`.
pub fn x_matrix(n_points: usize, b: &Rational, q: &Rational) -> Matrix {
    let one = Rational::one();
    let mut m = Matrix::zeros(n_points);
    for s in 0..n_points {
        let qs = q.pow(s as i64);
        m.set(s, s, q * (&one - b * &qs));
        if s > 0 {
            m.set(s, s - 1, q * (&qs - &one));
        }
    }
    m
}

/// `(Y f)_s = (q^(s+1) - q^N) f_(s+1) + (q^N - b^-1 q^(s+1)) f_s`.
pub fn y_matrix(n_points: usize, b: &Rational, q: &Rational) -> Matrix {
    let qn = q.pow(n_points as i64);
    let mut m = Matrix::zeros(n_points);
    for s in 0..n_points {
        let qs1 = q.pow(s as i64 + 1);
        m.set(s, s, &qn - b.inv() * &qs1);
        if s + 1 < n_points {
            m.set(s, s + 1, &qs1 - &qn);
        }
    }
    m
}

/// `(T^+ f)_s = f_(s+1)`, `(T^- f)_s = f_(s-1)`, zero past the ends.
pub fn shift_matrix(n_points: usize, up: bool) -> Matrix {
    Matrix::from_fn(n_points, |s, t| {
        let hit = if up { t == s + 1 } else { s == t + 1 };
        if hit {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `W*_(t,s) = w_s W_(s,t) / w_t`, so that `(W f, g) = (f, W* g)`.
pub fn adjoint(m: &Matrix, w: &[Rational]) -> Result<Matrix> {
    if let Some(s) = w.iter().position(Rational::is_zero) {
        return Err(Error::ZeroWeight(s));
    }
    Ok(Matrix::from_fn(m.size(), |t, s| {
        &w[s] * m.get(s, t) / &w[t]
    }))
}

/// `X* = b(q^(s+1) - q^N) T^+ + q(1 - b q^s) I`.
pub fn x_star_closed_form(n_points: usize, b: &Rational, q: &Rational) -> Matrix {
    let one = Rational::one();
    let qn = q.pow(n_points as i64);
    let mut m = Matrix::zeros(n_points);
    for s in 0..n_points {
        let qs = q.pow(s as i64);
        m.set(s, s, q * (&one - b * &qs));
        if s + 1 < n_points {
            m.set(s, s + 1, b * (&qs * q - &qn));
        }
    }
    m
}

/// `Y* = b^-1 q(q^s - 1) T^- + (q^N - b^-1 q^(s+1)) I`.
pub fn y_star_closed_form(n_points: usize, b: &Rational, q: &Rational) -> Matrix {
    let one = Rational::one();
    let qn = q.pow(n_points as i64);
    let mut m = Matrix::zeros(n_points);
    for s in 0..n_points {
        let qs = q.pow(s as i64);
        m.set(s, s, &qn - b.inv() * &qs * q);
        if s > 0 {
            m.set(s, s - 1, b.inv() * q * (&qs - &one));
        }
    }
    m
}

/// `(T^+)* = q(1 - q^s) / (b(q^N - q^s)) T^-`.
pub fn t_plus_adjoint_closed_form(n_points: usize, b: &Rational, q: &Rational) -> Matrix {
    let one = Rational::one();
    let qn = q.pow(n_points as i64);
    Matrix::from_fn(n_points, |s, t| {
        if s == t + 1 {
            let qs = q.pow(s as i64);
            q * (&one - &qs) / (b * (&qn - &qs))
        } else {
            Rational::zero()
        }
    })
}

/// `(T^-)* = b(q^N - q^(s+1)) / (q(1 - q^(s+1))) T^+`.
pub fn t_minus_adjoint_closed_form(n_points: usize, b: &Rational, q: &Rational) -> Matrix {
    let one = Rational::one();
    let qn = q.pow(n_points as i64);
    Matrix::from_fn(n_points, |s, t| {
        if t == s + 1 {
            let qs1 = q.pow(s as i64 + 1);
            b * (&qn - &qs1) / (q * (&one - &qs1))
        } else {
            Rational::zero()
        }
    })
}

/// `b -> b^-1 q^(1-N)`.
pub fn tau_b(b: &Rational, q: &Rational, n_points: usize) -> Rational {
    b.inv() * q.pow(1 - n_points as i64)
}

/// `tau(W)_(s,t) = W|_(b -> tau b) (N-1-s, N-1-t)`. Reversing both indices
/// also exchanges the roles of `T^+` and `T^-`.
pub fn tau_matrix<F>(build: F, b: &Rational, q: &Rational, n_points: usize) -> Result<Matrix>
where
    F: Fn(&Rational) -> Result<Matrix>,
{
    Ok(build(&tau_b(b, q, n_points))?.reversed())
}

/// `tau` on a `b`-dependent grid function.
pub fn tau_function<F>(
    build: F,
    b: &Rational,
    q: &Rational,
    n_points: usize,
) -> Result<GridFunction>
where
    F: Fn(&Rational) -> Result<GridFunction>,
{
    Ok(build(&tau_b(b, q, n_points))?.reversed())
}

/// Grid data for an `N`-point grid.
#[derive(Debug, Clone, Serialize)]
pub struct GridRep {
    pub n_points: usize,
    pub params: QParams,
    pub weights: GridWeights,
    pub x: Matrix,
    pub y: Matrix,
    pub x_star: Matrix,
    pub y_star: Matrix,
}

impl GridRep {
    pub fn b(&self) -> &Rational {
        self.params.b()
    }

    pub fn q(&self) -> &Rational {
        self.params.q()
    }

    pub fn grid(&self) -> &[Rational] {
        &self.weights.grid
    }

    pub fn w(&self) -> &[Rational] {
        &self.weights.w
    }

    /// `(f, g)`.
    pub fn scalar_product(&self, f: &GridFunction, g: &GridFunction) -> Rational {
        f.weighted_dot(g, self.w())
    }
}

/// Builds `X`, `Y` on the grid and their adjoints from the weights.
pub fn make_grid_rep(n_points: usize, b: &Rational, q: &Rational) -> Result<GridRep> {
    let params = QParams::restricted(n_points, q.clone(), b.clone())?;
    let gw = weights(n_points, b, q)?;
    let x = x_matrix(n_points, b, q);
    let y = y_matrix(n_points, b, q);
    let x_star = adjoint(&x, &gw.w)?;
    let y_star = adjoint(&y, &gw.w)?;
    Ok(GridRep {
        n_points,
        params,
        weights: gw,
        x,
        y,
        x_star,
        y_star,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pastro::pastro_poly;
    use crate::qcore::rat;
    use crate::qdiff::make_operators;

    #[test]
    fn single_point_is_self_adjoint() {
        let (b, q) = (rat(1, 5), rat(1, 2));
        let rep = make_grid_rep(1, &b, &q).unwrap();
        assert_eq!(rep.x, Matrix::diagonal(&[&q * (Rational::one() - &b)]));
        assert_eq!(rep.x_star, rep.x);
    }

    #[test]
    fn matrices_match_operators_on_polynomials() {
        // boundary terms vanish on their own, so the matrices act exactly on
        // samples of polynomials
        let (b, q) = (rat(1, 5), rat(1, 2));
        for n_points in 1..=6 {
            let rep = make_grid_rep(n_points, &b, &q).unwrap();
            let ops = make_operators(&rep.params);
            for n in 0..=n_points + 1 {
                let p = pastro_poly(n, &rep.params).unwrap();
                let f = GridFunction::sample(&p, rep.grid()).unwrap();
                let xf = GridFunction::sample(&ops.x.apply(&p), rep.grid()).unwrap();
                let yf = GridFunction::sample(&ops.y.apply(&p), rep.grid()).unwrap();
                assert_eq!(rep.x.mul_vec(&f).unwrap(), xf);
                assert_eq!(rep.y.mul_vec(&f).unwrap(), yf);
            }
        }
    }

    #[test]
    fn tau_squared_is_identity() {
        let (b, q) = (rat(1, 5), rat(1, 2));
        let build = |bb: &Rational| Ok(x_matrix(4, bb, &q));
        let twice = tau_matrix(|bb| tau_matrix(build, bb, &q, 4), &b, &q, 4).unwrap();
        assert_eq!(twice, x_matrix(4, &b, &q));
        assert_eq!(tau_b(&tau_b(&b, &q, 4), &q, 4), b);
    }
}
