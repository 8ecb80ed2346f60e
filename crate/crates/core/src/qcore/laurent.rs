//! Laurent polynomials in one variable `x` over exact rationals.
//!
//! Stored as a sorted map from exponent to nonzero coefficient. Every
//! constructor and operation drops zero coefficients, so structural equality
//! is mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use super::scalar::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in iter {
            p.add_term(k, &c);
        }
        p
    }

    /// Coefficients `c_0, c_1, ...` of an ordinary polynomial.
    pub fn from_coeffs(coeffs: &[Rational]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .cloned()
                .enumerate()
                .map(|(k, c)| (k as i64, c)),
        )
    }

    fn add_term(&mut self, k: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `x^k`, zero when absent.
    pub fn coeff(&self, k: i64) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Highest exponent; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// True when no negative exponent occurs.
    pub fn is_polynomial(&self) -> bool {
        self.valuation().is_none_or(|v| v >= 0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplication by `x^shift`.
    pub fn shift_exponents(&self, shift: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k + shift, v.clone()))
                .collect(),
        }
    }

    /// `p(c x)`: the coefficient of `x^k` is multiplied by `c^k`.
    /// Panics if `c` is zero and `p` has negative exponents.
    pub fn dilate(&self, c: &Rational) -> Self {
        LaurentPoly::from_terms(self.terms.iter().map(|(k, v)| (*k, v * c.pow(*k))))
    }

    /// `p(1/x)`.
    pub fn reflect(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (-k, v.clone())).collect(),
        }
    }

    /// Formal derivative, `x^k -> k x^(k-1)` for every integer `k`.
    pub fn derivative(&self) -> Self {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .map(|(k, v)| (k - 1, v * Rational::from_int(*k))),
        )
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if x.is_zero() {
            if self.valuation().is_some_and(|v| v < 0) {
                return Err(Error::EvalAtZero);
            }
            return Ok(self.coeff(0));
        }
        // Horner over the exponent window [valuation, degree].
        let (Some(lo), Some(hi)) = (self.valuation(), self.degree()) else {
            return Ok(Rational::zero());
        };
        let mut acc = Rational::zero();
        for k in (lo..=hi).rev() {
            acc *= x;
            if let Some(c) = self.terms.get(&k) {
                acc += c;
            }
        }
        Ok(acc * x.pow(lo))
    }

    /// Integer power; `p^0 = 1`.
    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    /// First exponent where `self` and `other` differ, with both coefficients.
    pub fn first_difference(&self, other: &LaurentPoly) -> Option<(i64, Rational, Rational)> {
        let diff = self - other;
        let (k, _) = diff.terms().next()?;
        Some((k, self.coeff(k), other.coeff(k)))
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &-c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                out.add_term(i + j, &(a * b));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&Rational::from_int(-1))
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let show_coeff = !mag.is_one() || *k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match *k {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{}", if show_coeff { "*" } else { "" }, k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as an exponent -> "p/r" record.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(self.terms.iter().map(|(k, c)| (k.to_string(), c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::scalar::rat;

    fn poly(terms: &[(i64, Rational)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().cloned())
    }

    #[test]
    fn dilate_scales_by_exponent() {
        let p = poly(&[(2, rat(1, 1)), (0, rat(1, 1))]);
        assert_eq!(
            p.dilate(&rat(1, 2)),
            poly(&[(2, rat(1, 4)), (0, rat(1, 1))])
        );
    }

    #[test]
    fn difference_of_squares() {
        let a = poly(&[(1, rat(1, 1)), (0, rat(-1, 1))]);
        let b = poly(&[(1, rat(1, 1)), (0, rat(1, 1))]);
        assert_eq!(&a * &b, poly(&[(2, rat(1, 1)), (0, rat(-1, 1))]));
    }

    #[test]
    fn eval_reciprocal() {
        let p = LaurentPoly::monomial(Rational::one(), -1);
        assert_eq!(p.eval(&rat(1, 4)).unwrap(), rat(4, 1));
        assert_eq!(p.eval(&Rational::zero()), Err(Error::EvalAtZero));
        let c = poly(&[(0, rat(3, 1)), (2, rat(1, 1))]);
        assert_eq!(c.eval(&Rational::zero()).unwrap(), rat(3, 1));
        assert_eq!(c.eval(&rat(-2, 1)).unwrap(), rat(7, 1));
    }

    #[test]
    fn zeros_are_dropped() {
        let a = poly(&[(3, rat(2, 1)), (-1, rat(1, 1))]);
        let diff = &a - &a;
        assert!(diff.is_zero());
        assert_eq!(diff, LaurentPoly::zero());
        assert!(poly(&[(5, Rational::zero())]).is_zero());
        assert!(a.scale(&Rational::zero()).is_zero());
    }

    #[test]
    fn derivative_of_negative_powers() {
        let p = poly(&[(-2, rat(1, 1)), (0, rat(5, 1)), (3, rat(1, 1))]);
        assert_eq!(p.derivative(), poly(&[(-3, rat(-2, 1)), (2, rat(3, 1))]));
    }

    #[test]
    fn degree_and_valuation() {
        let p = poly(&[(-2, rat(1, 1)), (4, rat(-3, 1))]);
        assert_eq!(p.degree(), Some(4));
        assert_eq!(p.valuation(), Some(-2));
        assert!(!p.is_polynomial());
        assert_eq!(LaurentPoly::zero().degree(), None);
        assert!(LaurentPoly::zero().is_polynomial());
    }

    #[test]
    fn display_and_json() {
        let p = poly(&[(2, rat(1, 1)), (1, rat(-1, 2)), (-1, rat(3, 1))]);
        assert_eq!(p.to_string(), "x^2 - 1/2*x + 3*x^-1");
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"-1":"3","1":"-1/2","2":"1"}"#
        );
    }

    #[test]
    fn first_difference_witness() {
        let a = poly(&[(2, rat(1, 1)), (0, rat(1, 1))]);
        let b = poly(&[(2, rat(1, 1)), (0, rat(2, 1))]);
        assert_eq!(a.first_difference(&b), Some((0, rat(1, 1), rat(2, 1))));
        assert_eq!(a.first_difference(&a), None);
    }
}
