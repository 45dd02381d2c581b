use crate::error::{Error, Result};

/// An exponent multi-index `alpha`; `x^alpha = prod_i x_i^{alpha_i}`.
///
/// The derived ordering is lexicographic on the exponent list, which fixes
/// the iteration order of sparse polynomials and makes every reported
/// witness deterministic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex {
    exponents: Vec<u32>,
}

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(!exponents.is_empty(), "multi-indices have dimension >= 1");
        Self { exponents }
    }

    /// `m * e_i`, the pure power `x_i^m`.
    pub fn pure_power(dim: usize, i: usize, m: u32) -> Self {
        let mut exponents = vec![0; dim];
        exponents[i] = m;
        Self::new(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Coordinates with nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// True when the monomial involves at most one coordinate.
    pub fn is_pure_power(&self) -> bool {
        self.exponents.iter().filter(|&&e| e > 0).count() <= 1
    }

    pub(crate) fn check_degree(&self, degree: u32) -> Result<()> {
        if self.degree() == degree {
            Ok(())
        } else {
            Err(Error::DegreeSumMismatch {
                expected: degree,
                got: self.degree(),
            })
        }
    }
}

/// All vectors of `d` nonnegative integers summing to `m`, in lexicographic
/// order.
pub fn compositions(m: u32, d: usize) -> Vec<Vec<u32>> {
    assert!(d >= 1);
    let mut out = Vec::new();
    let mut cur = vec![0u32; d];
    fill(m, 0, &mut cur, &mut out);
    out
}

fn fill(remaining: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if pos == cur.len() - 1 {
        cur[pos] = remaining;
        out.push(cur.clone());
        return;
    }
    for v in 0..=remaining {
        cur[pos] = v;
        fill(remaining - v, pos + 1, cur, out);
    }
}
