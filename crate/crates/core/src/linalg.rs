//! Exact dense matrices and fraction-free Gaussian elimination.

use crate::algebra::Vector;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A dense matrix with exact entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> ExactMatrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::MatrixShape {
                detail: "matrices need at least one row and column",
            });
        }
        if entries.len() != rows * cols {
            return Err(Error::MatrixShape {
                detail: "entry count must equal rows * cols",
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![T::zero(); rows * cols]).expect("positive shape")
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn mul_vector(&self, v: &Vector<T>) -> Result<Vector<T>> {
        v.check_dim(self.cols)?;
        Ok(Vector::new(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols).fold(T::zero(), |acc, j| {
                        acc + self.get(i, j).clone() * v.get(j).clone()
                    })
                })
                .collect(),
        ))
    }

    /// Solves `M x = rhs` exactly by Bareiss fraction-free elimination with
    /// partial (first-nonzero) pivoting, followed by back substitution. The
    /// residual of the returned solution is exactly zero.
    pub fn solve(&self, rhs: &Vector<T>) -> Result<Vector<T>> {
        if self.rows != self.cols {
            return Err(Error::MatrixShape {
                detail: "solve requires a square matrix",
            });
        }
        rhs.check_dim(self.rows)?;
        let n = self.rows;
        let cols = n + 1;
        let mut a: Vec<T> = Vec::with_capacity(n * cols);
        for i in 0..n {
            for j in 0..n {
                a.push(self.get(i, j).clone());
            }
            a.push(rhs.get(i).clone());
        }
        eliminate(&mut a, n, cols)?;
        // back substitution on the triangularized augmented system
        let mut x = vec![T::zero(); n];
        for i in (0..n).rev() {
            let mut acc = a[i * cols + n].clone();
            for (j, xj) in x.iter().enumerate().take(n).skip(i + 1) {
                acc = acc - a[i * cols + j].clone() * xj.clone();
            }
            x[i] = acc / a[i * cols + i].clone();
        }
        Ok(Vector::new(x))
    }

    /// The determinant, read off as the last Bareiss pivot.
    pub fn determinant(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::MatrixShape {
                detail: "determinant requires a square matrix",
            });
        }
        let n = self.rows;
        let mut a = self.entries.clone();
        match eliminate(&mut a, n, n) {
            Ok(sign) => {
                let last = a[(n - 1) * n + (n - 1)].clone();
                Ok(if sign { -last } else { last })
            }
            Err(Error::SingularMatrix) => Ok(T::zero()),
            Err(e) => Err(e),
        }
    }
}

/// Bareiss forward elimination in place on an `n x cols` array whose first
/// `n` columns hold the square system. Returns whether an odd number of row
/// swaps occurred. Each update
/// `a[i][j] = (a[k][k] a[i][j] - a[i][k] a[k][j]) / prev`
/// divides exactly.
fn eliminate<T: Scalar>(a: &mut [T], n: usize, cols: usize) -> Result<bool> {
    let mut prev = T::one();
    let mut swapped = false;
    for k in 0..n {
        let pivot = (k..n)
            .find(|&r| !a[r * cols + k].is_zero())
            .ok_or(Error::SingularMatrix)?;
        if pivot != k {
            for j in 0..cols {
                a.swap(pivot * cols + j, k * cols + j);
            }
            swapped = !swapped;
        }
        let pivot_value = a[k * cols + k].clone();
        for i in (k + 1)..n {
            let factor = a[i * cols + k].clone();
            for j in (k + 1)..cols {
                let updated = (pivot_value.clone() * a[i * cols + j].clone()
                    - factor.clone() * a[k * cols + j].clone())
                    / prev.clone();
                a[i * cols + j] = updated;
            }
            a[i * cols + k] = T::zero();
        }
        prev = pivot_value;
    }
    Ok(swapped)
}
