use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::fmt;

/// A vector in `R^d`, `d >= 1`. The ambient dimension is fixed per
/// computation; operations across mismatched dimensions error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector<T> {
    entries: Vec<T>,
}

impl<T: Scalar> Vector<T> {
    pub fn new(entries: Vec<T>) -> Self {
        assert!(!entries.is_empty(), "vectors have dimension >= 1");
        Self { entries }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![T::zero(); dim])
    }

    /// The standard basis vector `e_i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.entries[i] = T::one();
        v
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&n| crate::scalar::int(n)).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &T {
        &self.entries[i]
    }

    pub fn set(&mut self, i: usize, value: T) {
        self.entries[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other.dim())?;
        Ok(Self::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        ))
    }

    pub fn scale(&self, t: &T) -> Self {
        Self::new(self.entries.iter().map(|a| a.clone() * t.clone()).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.entries.iter().map(|a| -a.clone()).collect())
    }

    /// Componentwise absolute value `|x|`.
    pub fn abs(&self) -> Self {
        Self::new(self.entries.iter().map(|a| a.abs()).collect())
    }

    /// Componentwise positive part `x v 0`.
    pub fn positive_part(&self) -> Self {
        Self::new(
            self.entries
                .iter()
                .map(|a| if a.is_positive() { a.clone() } else { T::zero() })
                .collect(),
        )
    }

    /// Componentwise negative part `(-x) v 0`.
    pub fn negative_part(&self) -> Self {
        Self::new(
            self.entries
                .iter()
                .map(|a| if a.is_negative() { -a.clone() } else { T::zero() })
                .collect(),
        )
    }

    pub(crate) fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() == expected {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected,
                got: self.dim(),
            })
        }
    }
}

impl<T: Scalar> fmt::Display for Vector<T> {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A linear functional `phi(x) = sum_i a_i x_i`, stored as its coefficient
/// vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functional<T> {
    coefficients: Vector<T>,
}

impl<T: Scalar> Functional<T> {
    pub fn new(coefficients: Vector<T>) -> Self {
        Self { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(Vector::from_i64(coefficients))
    }

    pub fn coefficients(&self) -> &Vector<T> {
        &self.coefficients
    }

    pub fn dim(&self) -> usize {
        self.coefficients.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_zero()
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coefficients.neg())
    }

    /// `phi(x)`.
    pub fn apply(&self, x: &Vector<T>) -> Result<T> {
        x.check_dim(self.dim())?;
        Ok(self
            .coefficients
            .entries()
            .iter()
            .zip(x.entries())
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
    }

    /// Indices of the nonzero coefficients.
    pub fn support(&self) -> Vec<usize> {
        self.coefficients
            .entries()
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Writes `phi = t * psi` with `psi` scaled so its first nonzero
    /// coefficient is `+1`, and returns `(t, psi)`. `None` for the zero
    /// functional.
    ///
    /// Two functionals are proportional (over the scalar field, negative
    /// ratios included) exactly when they share a canonical direction, which
    /// is what term amalgamation keys on.
    pub fn canonical_direction(&self) -> Option<(T, Functional<T>)> {
        let lead = self
            .coefficients
            .entries()
            .iter()
            .find(|a| !a.is_zero())?
            .clone();
        let inv = T::one() / lead.clone();
        Some((lead, Self::new(self.coefficients.scale(&inv))))
    }
}

impl<T: Scalar> fmt::Display for Functional<T> {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.coefficients.entries().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            if first {
                if a.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if a.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag.is_one() {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "{}*x{}", mag, i + 1)?;
            }
        }
        Ok(())
    }
}
