use super::index::{compositions, MultiIndex};
use super::vector::Vector;
use crate::error::{Error, Result};
use crate::scalar::{factorial, BinomialTable, Scalar};
use num_traits::pow::pow;
use std::collections::BTreeMap;
use std::fmt;

/// A homogeneous polynomial of degree `m` in expanded normal form: a sparse
/// map from exponent multi-indices to nonzero coefficients.
///
/// Stored coefficients are never zero and every key sums to `m`; the empty
/// map is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialPoly<T> {
    degree: u32,
    dim: usize,
    monomials: BTreeMap<MultiIndex, T>,
}

impl<T: Scalar> MonomialPoly<T> {
    pub fn zero(degree: u32, dim: usize) -> Self {
        assert!(degree >= 1, "homogeneous degree must be >= 1");
        assert!(dim >= 1, "dimension must be >= 1");
        Self {
            degree,
            dim,
            monomials: BTreeMap::new(),
        }
    }

    /// Builds a polynomial from `(multi-index, coefficient)` pairs,
    /// accumulating duplicates and dropping anything that cancels to zero.
    pub fn from_terms(
        degree: u32,
        dim: usize,
        terms: impl IntoIterator<Item = (MultiIndex, T)>,
    ) -> Result<Self> {
        let mut poly = Self::zero(degree, dim);
        for (idx, coeff) in terms {
            if idx.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: idx.dim(),
                });
            }
            idx.check_degree(degree)?;
            poly.accumulate(idx, coeff);
        }
        Ok(poly)
    }

    pub(crate) fn accumulate(&mut self, idx: MultiIndex, coeff: T) {
        debug_assert_eq!(idx.dim(), self.dim);
        debug_assert_eq!(idx.degree(), self.degree);
        if coeff.is_zero() {
            return;
        }
        let entry = self.monomials.entry(idx);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Monomials in lexicographic multi-index order.
    pub fn monomials(&self) -> impl Iterator<Item = (&MultiIndex, &T)> {
        self.monomials.iter()
    }

    pub fn coefficient(&self, idx: &MultiIndex) -> Option<&T> {
        self.monomials.get(idx)
    }

    /// The coefficient of `x_i^m`.
    pub fn pure_power_coefficient(&self, i: usize) -> T {
        self.coefficient(&MultiIndex::pure_power(self.dim, i, self.degree))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn scale(&self, t: &T) -> Self {
        let mut out = Self::zero(self.degree, self.dim);
        if t.is_zero() {
            return out;
        }
        for (idx, c) in &self.monomials {
            out.monomials.insert(idx.clone(), c.clone() * t.clone());
        }
        out
    }

    /// Exact value `sum_alpha c_alpha x^alpha`.
    pub fn evaluate(&self, x: &Vector<T>) -> Result<T> {
        x.check_dim(self.dim)?;
        let mut acc = T::zero();
        for (idx, coeff) in &self.monomials {
            let mut term = coeff.clone();
            for (i, &e) in idx.exponents().iter().enumerate() {
                if e > 0 {
                    term = term * pow(x.get(i).clone(), e as usize);
                }
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// The `k`-th differential at `point`, as a degree-`k` polynomial in the
    /// increment direction: `k!` times the degree-`k`-in-`y` part of
    /// `P(point + y)`.
    ///
    /// Requires `1 <= k < m`. This route never factors through a powers
    /// form, so it serves as an independent cross-check of
    /// [`super::PowersForm::derivative_at`].
    pub fn derivative_at(&self, point: &Vector<T>, k: u32) -> Result<Self> {
        if k < 1 || k >= self.degree {
            return Err(Error::DegreeOutOfRange {
                detail: "differential order must satisfy 1 <= k < m",
            });
        }
        point.check_dim(self.dim)?;
        let table = BinomialTable::<T>::up_to(self.degree);
        let k_factorial = factorial::<T>(k);
        let mut out = Self::zero(k, self.dim);
        for (alpha, coeff) in &self.monomials {
            for beta in compositions(k, self.dim) {
                if beta
                    .iter()
                    .zip(alpha.exponents())
                    .any(|(&b, &a)| b > a)
                {
                    continue;
                }
                let mut weight = coeff.clone() * k_factorial.clone();
                for (i, (&b, &a)) in beta.iter().zip(alpha.exponents()).enumerate() {
                    if a == 0 {
                        continue;
                    }
                    weight = weight * table.binomial(a, b);
                    if a > b {
                        weight = weight * pow(point.get(i).clone(), (a - b) as usize);
                    }
                    if weight.is_zero() {
                        break;
                    }
                }
                out.accumulate(MultiIndex::new(beta), weight);
            }
        }
        Ok(out)
    }
}

impl<T: Scalar> fmt::Display for MonomialPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // descending lexicographic order puts x1-leading monomials first
        let mut first = true;
        for (idx, coeff) in self.monomials.iter().rev() {
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            let mut wrote_var = false;
            for (i, &e) in idx.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote_var {
                    write!(f, "*")?;
                }
                wrote_var = true;
                if e == 1 {
                    write!(f, "x{}", i + 1)?;
                } else {
                    write!(f, "x{}^{}", i + 1, e)?;
                }
            }
            if !wrote_var && mag.is_one() {
                write!(f, "1")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::Rational;

    fn q(p: i64, q_: i64) -> Rational {
        int::<Rational>(p) / int::<Rational>(q_)
    }

    fn poly(degree: u32, dim: usize, terms: &[(&[u32], Rational)]) -> MonomialPoly<Rational> {
        MonomialPoly::from_terms(
            degree,
            dim,
            terms
                .iter()
                .map(|(e, c)| (MultiIndex::new(e.to_vec()), c.clone())),
        )
        .unwrap()
    }

    #[test]
    fn evaluate_direct_substitution() {
        // 2x1^2 + 2x2^2 at (1,1) -> 4
        let p = poly(2, 2, &[(&[2, 0], q(2, 1)), (&[0, 2], q(2, 1))]);
        assert_eq!(p.evaluate(&Vector::from_i64(&[1, 1])).unwrap(), q(4, 1));
        // x1^4 - (1/4)x2^4 at (0,2) -> -4
        let p = poly(4, 2, &[(&[4, 0], q(1, 1)), (&[0, 4], q(-1, 4))]);
        assert_eq!(p.evaluate(&Vector::from_i64(&[0, 2])).unwrap(), q(-4, 1));
        // empty polynomial evaluates to 0
        let z = MonomialPoly::<Rational>::zero(3, 2);
        assert_eq!(z.evaluate(&Vector::from_i64(&[7, -3])).unwrap(), q(0, 1));
    }

    #[test]
    fn evaluate_dimension_mismatch() {
        let p = poly(2, 2, &[(&[2, 0], q(1, 1))]);
        assert!(matches!(
            p.evaluate(&Vector::from_i64(&[1, 1, 1])),
            Err(Error::DimensionMismatch { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn from_terms_rejects_degree_mismatch() {
        let r = MonomialPoly::from_terms(3, 2, [(MultiIndex::new(vec![1, 1]), q(1, 1))]);
        assert!(matches!(r, Err(Error::DegreeSumMismatch { .. })));
    }

    #[test]
    fn cancellation_drops_monomials() {
        let p = poly(2, 2, &[(&[1, 1], q(1, 1)), (&[1, 1], q(-1, 1))]);
        assert!(p.is_zero());
    }

    #[test]
    fn derivative_of_square_is_gradient() {
        // d^1(x1^2) at (1,0) -> 2x1
        let p = poly(2, 2, &[(&[2, 0], q(1, 1))]);
        let d = p.derivative_at(&Vector::from_i64(&[1, 0]), 1).unwrap();
        assert_eq!(d, poly(1, 2, &[(&[1, 0], q(2, 1))]));
    }

    #[test]
    fn derivative_mixed_square() {
        // d^2(x1^2 x2^2) at (1,1) -> 2x1^2 + 8x1x2 + 2x2^2
        let p = poly(4, 2, &[(&[2, 2], q(1, 1))]);
        let d = p.derivative_at(&Vector::from_i64(&[1, 1]), 2).unwrap();
        let expected = poly(
            2,
            2,
            &[
                (&[2, 0], q(2, 1)),
                (&[1, 1], q(8, 1)),
                (&[0, 2], q(2, 1)),
            ],
        );
        assert_eq!(d, expected);
    }

    #[test]
    fn top_derivative_of_pure_power() {
        // d^(2n-1)(x1^(2n)) at (1,1) -> (2n)! x1^(2n-1), n = 3
        let n = 3u32;
        let p = poly(2 * n, 2, &[(&[2 * n, 0], q(1, 1))]);
        let d = p
            .derivative_at(&Vector::from_i64(&[1, 1]), 2 * n - 1)
            .unwrap();
        let fact: Rational = factorial(2 * n);
        assert_eq!(d, poly(2 * n - 1, 2, &[(&[2 * n - 1, 0], fact)]));
    }

    #[test]
    fn derivative_rejects_out_of_range_order() {
        let p = poly(2, 2, &[(&[2, 0], q(1, 1))]);
        let x = Vector::from_i64(&[1, 1]);
        assert!(p.derivative_at(&x, 0).is_err());
        assert!(p.derivative_at(&x, 2).is_err());
    }

    #[test]
    fn display_is_ordered_and_readable() {
        let p = poly(4, 2, &[(&[0, 4], q(-1, 4)), (&[4, 0], q(1, 1))]);
        assert_eq!(p.to_string(), "x1^4 - 1/4*x2^4");
        assert_eq!(MonomialPoly::<Rational>::zero(2, 2).to_string(), "0");
    }
}
