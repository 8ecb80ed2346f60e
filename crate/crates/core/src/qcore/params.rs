use std::fmt;

use serde::Serialize;

use super::scalar::Rational;
use crate::error::{Error, Result};

/// The parameter triple `(q, a, b)`.
///
/// Construction rejects `q in {0, 1, -1}` and zero `a` or `b`. Degree-dependent
/// resonances are reported by [`QParams::resonances`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QParams {
    q: Rational,
    a: Rational,
    b: Rational,
}

impl QParams {
    pub fn new(q: Rational, a: Rational, b: Rational) -> Result<Self> {
        Self::check_q(&q)?;
        if a.is_zero() {
            return Err(Error::InvalidParams("a must be nonzero".into()));
        }
        if b.is_zero() {
            return Err(Error::InvalidParams("b must be nonzero".into()));
        }
        Ok(QParams { q, a, b })
    }

    /// `q` must avoid 0 and the roots of unity `1`, `-1` (the only rational ones).
    pub fn check_q(q: &Rational) -> Result<()> {
        if q.is_zero() || q.abs().is_one() {
            return Err(Error::InvalidParams(format!(
                "q must be generic (not 0, 1 or -1), got {q}"
            )));
        }
        Ok(())
    }

    /// Parameters with `a = q^(1-N)`, the restricted setting of the grid theory.
    pub fn restricted(n_points: usize, q: Rational, b: Rational) -> Result<Self> {
        if n_points == 0 {
            return Err(Error::InvalidParams("N must be at least 1".into()));
        }
        Self::check_q(&q)?;
        let a = q.pow(1 - n_points as i64);
        Self::new(q, a, b)
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn with_b(&self, b: Rational) -> Result<Self> {
        Self::new(self.q.clone(), self.a.clone(), b)
    }

    /// `b -> b q`, the parameter shift produced by the operator triple.
    pub fn shift_b(&self) -> Self {
        QParams {
            q: self.q.clone(),
            a: self.a.clone(),
            b: &self.b * &self.q,
        }
    }

    pub fn qpow(&self, k: i64) -> Rational {
        self.q.pow(k)
    }

    /// Every vanishing factor among those the constructions up to degree
    /// `n_max` divide by: `1 - b q^k` for `0 <= k <= n_max` (covering `(b;q)_n`
    /// and the recurrence coefficients) and `(a^-1 b q^(1-n);q)_n`.
    pub fn resonances(&self, n_max: usize) -> Vec<String> {
        let one = Rational::one();
        let n_max = n_max as i64;
        let mut out = Vec::new();
        for k in 0..=n_max {
            if (&one - &self.b * self.qpow(k)).is_zero() {
                out.push(format!("(b;q)_n vanishes (factor 1 - b q^{k})"));
            }
        }
        let ab = &self.b / &self.a;
        for m in (1 - n_max)..=0 {
            if n_max > 0 && (&one - &ab * self.qpow(m)).is_zero() {
                out.push(format!(
                    "(a^-1 b q^(1-n);q)_n vanishes (factor 1 - a^-1 b q^{m})"
                ));
            }
        }
        out
    }

    /// Fails with the first resonance for degrees `<= n_max`.
    pub fn validate(&self, n_max: usize) -> Result<()> {
        match self.resonances(n_max).into_iter().next() {
            Some(factor) => Err(Error::Resonant(factor)),
            None => Ok(()),
        }
    }
}

impl fmt::Display for QParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={} a={} b={}", self.q, self.a, self.b)
    }
}

impl fmt::Debug for QParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
