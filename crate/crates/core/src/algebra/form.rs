use super::index::{compositions, MultiIndex};
use super::poly::MonomialPoly;
use super::vector::{Functional, Vector};
use crate::error::{Error, Result};
use crate::scalar::{falling_factorial, BinomialTable, Scalar};
use num_traits::pow::pow;
use std::fmt;

/// An `m`-homogeneous polynomial written as scaled `m`-th powers of linear
/// functionals: `P = sum_j lambda_j phi_j^m`.
///
/// Terms with `lambda = 0` or `phi = 0` contribute nothing and are dropped
/// on construction, so amalgamation cancellations leave no debris.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowersForm<T> {
    degree: u32,
    dim: usize,
    terms: Vec<(T, Functional<T>)>,
}

impl<T: Scalar> PowersForm<T> {
    pub fn new(degree: u32, dim: usize, terms: Vec<(T, Functional<T>)>) -> Result<Self> {
        if degree < 1 {
            return Err(Error::DegreeOutOfRange {
                detail: "powers forms have degree >= 1",
            });
        }
        if dim < 1 {
            return Err(Error::InvalidParameter {
                detail: "dimension must be >= 1",
            });
        }
        let mut kept = Vec::with_capacity(terms.len());
        for (lambda, phi) in terms {
            if phi.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: phi.dim(),
                });
            }
            if lambda.is_zero() || phi.is_zero() {
                continue;
            }
            kept.push((lambda, phi));
        }
        Ok(Self {
            degree,
            dim,
            terms: kept,
        })
    }

    /// Convenience constructor from integer functional coefficients.
    pub fn from_i64_terms(degree: u32, dim: usize, terms: &[(T, &[i64])]) -> Result<Self> {
        Self::new(
            degree,
            dim,
            terms
                .iter()
                .map(|(l, phi)| (l.clone(), Functional::from_i64(phi)))
                .collect(),
        )
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[(T, Functional<T>)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `sum_j lambda_j phi_j(x)^m`, computed without expanding.
    pub fn evaluate(&self, x: &Vector<T>) -> Result<T> {
        x.check_dim(self.dim)?;
        let mut acc = T::zero();
        for (lambda, phi) in &self.terms {
            let v = phi.apply(x)?;
            acc = acc + lambda.clone() * pow(v, self.degree as usize);
        }
        Ok(acc)
    }

    /// The exact monomial expansion, via the multinomial theorem applied to
    /// each `phi_j^m` over the support of `phi_j`.
    pub fn expand(&self) -> MonomialPoly<T> {
        let mut out = MonomialPoly::zero(self.degree, self.dim);
        let table = BinomialTable::<T>::up_to(self.degree);
        for (lambda, phi) in &self.terms {
            let support = phi.support();
            debug_assert!(!support.is_empty());
            for alpha in compositions(self.degree, support.len()) {
                let mut coeff = lambda.clone() * table.multinomial(&alpha);
                let mut exponents = vec![0u32; self.dim];
                for (slot, &e) in alpha.iter().enumerate() {
                    let i = support[slot];
                    exponents[i] = e;
                    if e > 0 {
                        coeff = coeff * pow(phi.coefficients().get(i).clone(), e as usize);
                    }
                }
                out.accumulate(MultiIndex::new(exponents), coeff);
            }
        }
        out
    }

    /// Merges proportional terms so the remaining functionals are pairwise
    /// independent.
    ///
    /// Every functional is keyed by its canonical direction `psi` (first
    /// nonzero coefficient `+1`); writing `phi = t * psi` folds the scale
    /// into the weight as `lambda * t^m`. Merged weights that cancel to zero
    /// drop out. The expansion is unchanged.
    pub fn amalgamate(&self) -> Self {
        let mut merged: Vec<(Functional<T>, T)> = Vec::new();
        for (lambda, phi) in &self.terms {
            let (scale, canonical) = phi
                .canonical_direction()
                .expect("stored functionals are nonzero");
            let contribution = lambda.clone() * pow(scale, self.degree as usize);
            match merged.iter_mut().find(|(c, _)| *c == canonical) {
                Some((_, sum)) => *sum = sum.clone() + contribution,
                None => merged.push((canonical, contribution)),
            }
        }
        Self::new(
            self.degree,
            self.dim,
            merged.into_iter().map(|(phi, l)| (l, phi)).collect(),
        )
        .expect("amalgamation preserves validity")
    }

    /// The `k`-th differential at `point` as a degree-`k` powers form:
    /// `(m!/(m-k)!) * sum_j lambda_j phi_j(point)^(m-k) phi_j^k`.
    ///
    /// Requires `1 <= k < m`. Terms with `phi_j(point) = 0` vanish and are
    /// dropped.
    pub fn derivative_at(&self, point: &Vector<T>, k: u32) -> Result<Self> {
        if k < 1 || k >= self.degree {
            return Err(Error::DegreeOutOfRange {
                detail: "differential order must satisfy 1 <= k < m",
            });
        }
        point.check_dim(self.dim)?;
        let factor = falling_factorial::<T>(self.degree, k);
        let mut terms = Vec::with_capacity(self.terms.len());
        for (lambda, phi) in &self.terms {
            let v = phi.apply(point)?;
            if v.is_zero() {
                continue;
            }
            let weight =
                factor.clone() * lambda.clone() * pow(v, (self.degree - k) as usize);
            terms.push((weight, phi.clone()));
        }
        Self::new(k, self.dim, terms)
    }

    /// Scales every weight by `t`.
    pub fn scale(&self, t: &T) -> Self {
        Self::new(
            self.degree,
            self.dim,
            self.terms
                .iter()
                .map(|(l, phi)| (l.clone() * t.clone(), phi.clone()))
                .collect(),
        )
        .expect("scaling preserves validity")
    }
}

impl<T: Scalar> fmt::Display for PowersForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, phi)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({lambda})*({phi})^{}", self.degree)?;
        }
        Ok(())
    }
}
