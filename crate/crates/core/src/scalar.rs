//! The scalar abstraction and small exact-combinatorics helpers.

use num_traits::{FromPrimitive, Num, Signed};
use std::fmt;

/// Scalars the algorithms operate over: an ordered field with exact
/// arithmetic in the intended instantiations. Everything in this crate is
/// written against this bound; the shipped alias is
/// [`crate::Rational`].
pub trait Scalar:
    Num + Signed + PartialOrd + FromPrimitive + Clone + fmt::Debug + fmt::Display
{
}

impl<T> Scalar for T where
    T: Num + Signed + PartialOrd + FromPrimitive + Clone + fmt::Debug + fmt::Display
{
}

/// Embeds a small signed integer into the scalar type.
pub fn int<T: Scalar>(n: i64) -> T {
    T::from_i64(n).expect("small integer embeds into scalar")
}

/// `m!` computed by repeated multiplication of embedded integers.
pub fn factorial<T: Scalar>(m: u32) -> T {
    let mut acc = T::one();
    for i in 2..=m as i64 {
        acc = acc * int::<T>(i);
    }
    acc
}

/// The falling factorial `m! / (m - k)!`.
pub fn falling_factorial<T: Scalar>(m: u32, k: u32) -> T {
    assert!(k <= m, "falling factorial needs k <= m");
    let mut acc = T::one();
    for i in (m - k + 1)..=m {
        acc = acc * int::<T>(i as i64);
    }
    acc
}

/// Rows `0..=m` of Pascal's triangle, exact in `T`.
///
/// Binomial and multinomial coefficients are built from this table by
/// additions only, so no intermediate value ever leaves the scalar type.
pub struct BinomialTable<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> BinomialTable<T> {
    pub fn up_to(m: u32) -> Self {
        let mut rows: Vec<Vec<T>> = Vec::with_capacity(m as usize + 1);
        rows.push(vec![T::one()]);
        for n in 1..=m as usize {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(T::one());
            for k in 1..n {
                row.push(prev[k - 1].clone() + prev[k].clone());
            }
            row.push(T::one());
            rows.push(row);
        }
        Self { rows }
    }

    /// `C(n, k)`; requires `n <= m` from construction.
    pub fn binomial(&self, n: u32, k: u32) -> T {
        self.rows[n as usize][k as usize].clone()
    }

    /// Multinomial coefficient `(sum alpha)! / prod(alpha_i!)` as a product
    /// of binomials.
    pub fn multinomial(&self, alpha: &[u32]) -> T {
        let mut remaining: u32 = alpha.iter().sum();
        let mut acc = T::one();
        for &a in alpha {
            acc = acc * self.binomial(remaining, a);
            remaining -= a;
        }
        acc
    }
}
