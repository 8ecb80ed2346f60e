use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qcore::{LaurentPoly, Rational};

/// Dense square matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        Self::from_fn(d.len(), |i, j| {
            if i == j {
                d[i].clone()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul_vec(&self, v: &GridFunction) -> Result<GridFunction> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        Ok(GridFunction(
            (0..self.n)
                .map(|i| (0..self.n).map(|j| self.get(i, j) * &v.0[j]).sum())
                .collect(),
        ))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| {
            (0..self.n).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    /// `diag(d) * self`.
    pub fn scale_rows(&self, d: &[Rational]) -> Matrix {
        Self::from_fn(self.n, |i, j| &d[i] * self.get(i, j))
    }

    /// `M_(N-1-s, N-1-t)`: index reversal on both sides.
    pub fn reversed(&self) -> Matrix {
        let last = self.n.saturating_sub(1);
        Self::from_fn(self.n, |s, t| self.get(last - s, last - t).clone())
    }

    /// First `(row, col)` where the matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        let pos = self
            .data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)?;
        Some((pos / self.n, pos % self.n))
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        self.data.chunks(self.n.max(1))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Serialized as an array of rows of rational strings.
impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.n))?;
        for row in self.rows().take(self.n) {
            seq.serialize_element(row)?;
        }
        seq.end()
    }
}

/// Values `f(x_0), ..., f(x_(N-1))` of a function on the grid, keyed by the
/// grid index `s`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct GridFunction(pub Vec<Rational>);

impl GridFunction {
    pub fn sample(p: &LaurentPoly, points: &[Rational]) -> Result<Self> {
        points
            .iter()
            .map(|x| p.eval(x))
            .collect::<Result<_>>()
            .map(GridFunction)
    }

    pub fn basis(n: usize, i: usize) -> Self {
        GridFunction(
            (0..n)
                .map(|s| {
                    if s == i {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GridFunction(self.0.iter().map(|v| v * c).collect())
    }

    pub fn reversed(&self) -> Self {
        GridFunction(self.0.iter().rev().cloned().collect())
    }

    /// Cross-product criterion `u_i v_j = u_j v_i` for all `i, j`.
    pub fn proportional_to(&self, other: &GridFunction) -> bool {
        self.len() == other.len()
            && (0..self.len()).all(|i| {
                (i + 1..self.len()).all(|j| &self.0[i] * &other.0[j] == &self.0[j] * &other.0[i])
            })
    }

    /// `sum_s w_s f_s g_s`.
    pub fn weighted_dot(&self, other: &GridFunction, w: &[Rational]) -> Rational {
        self.0
            .iter()
            .zip(&other.0)
            .zip(w)
            .map(|((f, g), w)| w * f * g)
            .sum()
    }
}

impl fmt::Debug for GridFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", cells.join(", "))
    }
}
