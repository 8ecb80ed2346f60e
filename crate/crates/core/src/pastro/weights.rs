//! Discrete weights on the grid `x_s = q^(s+1)`, `s = 0..N-1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qcore::{qpochhammer, QParams, Rational};
use crate::report::{ensure, scalar_eq, Check, Outcome};

/// Weights `w_s` and grid points `x_s` for an `N`-point grid. The implicit
/// parameter is `a = q^(1-N)`. Weights sum to 1 and may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridWeights {
    pub n_points: usize,
    pub q: Rational,
    pub b: Rational,
    pub w: Vec<Rational>,
    pub grid: Vec<Rational>,
}

impl GridWeights {
    pub fn params(&self) -> Result<QParams> {
        QParams::restricted(self.n_points, self.q.clone(), self.b.clone())
    }
}

/// `w_s = (q^(1-N);q)_s / (q;q)_s * (b q^(N-1))^s / (b;q)_(N-1)`.
pub fn weights(n_points: usize, b: &Rational, q: &Rational) -> Result<GridWeights> {
    if n_points == 0 {
        return Err(Error::InvalidParams("N must be at least 1".into()));
    }
    QParams::check_q(q)?;
    if b.is_zero() {
        return Err(Error::InvalidParams("b must be nonzero".into()));
    }
    let n_i = n_points as i64;
    let norm = qpochhammer(b, q, n_points - 1);
    if norm.is_zero() {
        return Err(Error::Resonant(format!("(b;q)_{} vanishes", n_points - 1)));
    }
    let low = q.pow(1 - n_i);
    let ratio = b * q.pow(n_i - 1);
    let w: Vec<Rational> = (0..n_points)
        .map(|s| qpochhammer(&low, q, s) / qpochhammer(q, q, s) * ratio.pow(s as i64) / &norm)
        .collect();
    if let Some(s) = w.iter().position(Rational::is_zero) {
        return Err(Error::ZeroWeight(s));
    }
    let total: Rational = w.iter().cloned().sum();
    if !total.is_one() {
        return Err(Error::Degenerate(format!("weights sum to {total}, not 1")));
    }
    let grid = (0..n_points).map(|s| q.pow(s as i64 + 1)).collect();
    Ok(GridWeights {
        n_points,
        q: q.clone(),
        b: b.clone(),
        w,
        grid,
    })
}

/// Weights after `b -> b^-1 q^(2-N)` and `s -> N-1-s`.
pub fn weights_t_image(n_points: usize, b: &Rational, q: &Rational) -> Result<Vec<Rational>> {
    let b_t = b.inv() * q.pow(2 - n_points as i64);
    let mut w = weights(n_points, &b_t, q)?.w;
    w.reverse();
    Ok(w)
}

/// Normalization and invariance of the weights under the reflection above.
pub fn verify_weights(n_points: usize, b: &Rational, q: &Rational) -> Check {
    let result = (|| -> Result<Outcome> {
        let gw = weights(n_points, b, q)?;
        let total: Rational = gw.w.iter().cloned().sum();
        if let Err(w) = scalar_eq("sum of weights", &total, &Rational::one()) {
            return Ok(Err(w));
        }
        let image = weights_t_image(n_points, b, q)?;
        Ok(ensure(image == gw.w, || {
            let s = image
                .iter()
                .zip(&gw.w)
                .position(|(x, y)| x != y)
                .unwrap_or(0);
            format!("T-image differs at s={s}: {} vs {}", image[s], gw.w[s])
        }))
    })();
    Check::from_result(
        format!("weights N={n_points}"),
        "full eq weight, transf T",
        result,
    )
    .with_param("N", n_points)
    .with_param("q", q)
    .with_param("b", b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::rat;

    #[test]
    fn single_point() {
        let gw = weights(1, &rat(1, 5), &rat(1, 2)).unwrap();
        assert_eq!(gw.w, vec![Rational::one()]);
        assert_eq!(gw.grid, vec![rat(1, 2)]);
    }

    #[test]
    fn two_points_reference() {
        let gw = weights(2, &rat(1, 5), &rat(1, 2)).unwrap();
        assert_eq!(gw.w, vec![rat(5, 4), rat(-1, 4)]);
    }

    #[test]
    fn resonant_b() {
        // (b;q)_2 vanishes for b = q^-1
        assert!(matches!(
            weights(3, &rat(2, 1), &rat(1, 2)),
            Err(Error::Resonant(_))
        ));
    }

    #[test]
    fn invariant_under_reflection() {
        for n_points in 1..=8 {
            for b in [rat(1, 5), rat(-2, 3), rat(7, 3)] {
                assert!(verify_weights(n_points, &b, &rat(1, 2)).passed());
            }
        }
    }
}
