use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qcore::{LaurentPoly, QParams, Rational};

/// A finite sum `sum_k c_k(x) T^k` with Laurent coefficients, where
/// `(T^k f)(x) = f(q^k x)`.
///
/// At most one term per shift and no zero coefficients, so `==` is operator
/// equality. The std arithmetic traits panic when the operands act with
/// different `q`; [`QDiffOperator::compose`] and [`QDiffOperator::try_add`]
/// report that as an error instead.
#[derive(Clone, PartialEq, Eq)]
pub struct QDiffOperator {
    q: Rational,
    terms: BTreeMap<i64, LaurentPoly>,
}

/// First term where two operators differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorWitness {
    pub shift: i64,
    pub exponent: i64,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for OperatorWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient of x^{} T^{}: lhs={} rhs={}",
            self.exponent, self.shift, self.lhs, self.rhs
        )
    }
}

impl QDiffOperator {
    pub fn zero(q: &Rational) -> Self {
        QDiffOperator {
            q: q.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `c(x) T^k`.
    pub fn term(q: &Rational, coeff: LaurentPoly, shift: i64) -> Self {
        let mut op = Self::zero(q);
        op.add_term(shift, &coeff);
        op
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, LaurentPoly)>>(q: &Rational, iter: I) -> Self {
        let mut op = Self::zero(q);
        for (k, c) in iter {
            op.add_term(k, &c);
        }
        op
    }

    pub fn identity(q: &Rational) -> Self {
        Self::term(q, LaurentPoly::one(), 0)
    }

    pub fn shift(q: &Rational, k: i64) -> Self {
        Self::term(q, LaurentPoly::one(), k)
    }

    /// Multiplication by a Laurent polynomial.
    pub fn multiplication(q: &Rational, p: LaurentPoly) -> Self {
        Self::term(q, p, 0)
    }

    /// `c * I`.
    pub fn scalar(q: &Rational, c: Rational) -> Self {
        Self::term(q, LaurentPoly::constant(c), 0)
    }

    fn add_term(&mut self, shift: i64, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let sum = match self.terms.get(&shift) {
            Some(existing) => existing + coeff,
            None => coeff.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&shift);
        } else {
            self.terms.insert(shift, sum);
        }
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &LaurentPoly)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, shift: i64) -> LaurentPoly {
        self.terms.get(&shift).cloned().unwrap_or_default()
    }

    /// `sum_k c_k(x) f(q^k x)`.
    pub fn apply(&self, f: &LaurentPoly) -> LaurentPoly {
        self.terms.iter().fold(LaurentPoly::zero(), |acc, (k, c)| {
            &acc + &(c * &f.dilate(&self.q.pow(*k)))
        })
    }

    fn check_same_q(&self, other: &Self) -> Result<()> {
        if self.q != other.q {
            return Err(Error::MismatchedQ(self.q.to_string(), other.q.to_string()));
        }
        Ok(())
    }

    /// `(c1 T^k1)(c2 T^k2) = c1(x) c2(q^k1 x) T^(k1+k2)`, extended bilinearly.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same_q(other)?;
        let mut out = Self::zero(&self.q);
        for (k1, c1) in &self.terms {
            let dil = self.q.pow(*k1);
            for (k2, c2) in &other.terms {
                out.add_term(k1 + k2, &(c1 * &c2.dilate(&dil)));
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_q(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(&self.q, self.terms.iter().map(|(k, p)| (*k, p.scale(c))))
    }

    /// `p(x) * self`.
    pub fn left_multiply(&self, p: &LaurentPoly) -> Self {
        Self::from_terms(&self.q, self.terms.iter().map(|(k, c)| (*k, p * c)))
    }

    /// `c * self * other - other * self`.
    pub fn q_commutator(&self, other: &Self, c: &Rational) -> Self {
        &(self * other).scale(c) - &(other * self)
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.q_commutator(other, &Rational::one())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(&self.q), |acc, _| &acc * self)
    }

    /// Lowest shift, then lowest exponent, at which `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<OperatorWitness> {
        let diff = self - other;
        let (shift, poly) = diff.terms.iter().next()?;
        let (exponent, _) = poly.terms().next()?;
        Some(OperatorWitness {
            shift: *shift,
            exponent,
            lhs: self.coeff(*shift).coeff(exponent),
            rhs: other.coeff(*shift).coeff(exponent),
        })
    }
}

impl Add<&QDiffOperator> for &QDiffOperator {
    type Output = QDiffOperator;
    fn add(self, rhs: &QDiffOperator) -> QDiffOperator {
        self.try_add(rhs).expect("operators act with different q")
    }
}

impl Sub<&QDiffOperator> for &QDiffOperator {
    type Output = QDiffOperator;
    fn sub(self, rhs: &QDiffOperator) -> QDiffOperator {
        self + &(-rhs)
    }
}

impl Mul<&QDiffOperator> for &QDiffOperator {
    type Output = QDiffOperator;
    fn mul(self, rhs: &QDiffOperator) -> QDiffOperator {
        self.compose(rhs).expect("operators act with different q")
    }
}

impl Neg for &QDiffOperator {
    type Output = QDiffOperator;
    fn neg(self) -> QDiffOperator {
        self.scale(&Rational::from_int(-1))
    }
}

impl fmt::Display for QDiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "({c})")?,
                _ => write!(f, "({c})T^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QDiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as a list of `{shift, coefficient}` records.
impl Serialize for QDiffOperator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            shift: i64,
            coefficient: &'a LaurentPoly,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (shift, coefficient) in &self.terms {
            seq.serialize_element(&Term {
                shift: *shift,
                coefficient,
            })?;
        }
        seq.end()
    }
}

/// The operator triple acting on functions of `x`.
#[derive(Debug, Clone, Serialize)]
pub struct OperatorTriple {
    pub x: QDiffOperator,
    pub y: QDiffOperator,
    pub z: QDiffOperator,
}

/// ```text
/// X = (x - q) T^-1 + (q - b x) I
/// Y = (x - a^-1 q) T + (a^-1 q - b^-1 x) I
/// Z = (1 - q x^-1) T^-1 + (q x^-1 - b) I
/// ```
pub fn make_operators(params: &QParams) -> OperatorTriple {
    let (q, a, b) = (params.q(), params.a(), params.b());
    let one = Rational::one();
    let poly = |terms: Vec<(i64, Rational)>| LaurentPoly::from_terms(terms);
    let aq = q / a;
    let x = QDiffOperator::from_terms(
        q,
        [
            (-1, poly(vec![(1, one.clone()), (0, -q)])),
            (0, poly(vec![(0, q.clone()), (1, -b)])),
        ],
    );
    let y = QDiffOperator::from_terms(
        q,
        [
            (1, poly(vec![(1, one.clone()), (0, -&aq)])),
            (0, poly(vec![(0, aq.clone()), (1, -b.inv())])),
        ],
    );
    let z = QDiffOperator::from_terms(
        q,
        [
            (-1, poly(vec![(0, one.clone()), (-1, -q)])),
            (0, poly(vec![(-1, q.clone()), (0, -b)])),
        ],
    );
    OperatorTriple { x, y, z }
}
