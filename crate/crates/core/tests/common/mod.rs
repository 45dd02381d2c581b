//! Independent oracles shared by the integration suites. Nothing here goes
//! through the code paths under test: expansion is repeated naive
//! polynomial multiplication, and linear systems are solved by cofactor
//! determinants.
//!
//! Not every suite uses every oracle.
#![allow(dead_code)]

use num_traits::{One, Zero};
use oapoly::algebra::{MonomialPoly, MultiIndex};
use oapoly::linalg::ExactMatrix;
use oapoly::{QMonomialPoly, QPowersForm, Rational};
use std::collections::BTreeMap;

pub type Sparse = BTreeMap<Vec<u32>, Rational>;

fn sparse_insert(map: &mut Sparse, key: Vec<u32>, value: Rational) {
    if value.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(value);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += value;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn sparse_mul(a: &Sparse, b: &Sparse, dim: usize) -> Sparse {
    let mut out = Sparse::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let mut e = vec![0u32; dim];
            for i in 0..dim {
                e[i] = ea[i] + eb[i];
            }
            sparse_insert(&mut out, e, ca.clone() * cb.clone());
        }
    }
    out
}

/// Expands a powers form by plain repeated multiplication of the degree-one
/// polynomials `phi_j`, term by term.
pub fn naive_expand(form: &QPowersForm) -> QMonomialPoly {
    let d = form.dim();
    let mut total = Sparse::new();
    for (lambda, phi) in form.terms() {
        let mut linear = Sparse::new();
        for (i, a) in phi.coefficients().entries().iter().enumerate() {
            if !a.is_zero() {
                let mut e = vec![0u32; d];
                e[i] = 1;
                linear.insert(e, a.clone());
            }
        }
        let mut power: Sparse = [(vec![0u32; d], Rational::one())].into_iter().collect();
        for _ in 0..form.degree() {
            power = sparse_mul(&power, &linear, d);
        }
        for (e, c) in power {
            sparse_insert(&mut total, e, lambda.clone() * c);
        }
    }
    MonomialPoly::from_terms(
        form.degree(),
        d,
        total
            .into_iter()
            .map(|(e, c)| (MultiIndex::new(e), c)),
    )
    .expect("every product of m linear factors has degree m")
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &ExactMatrix<Rational>) -> Rational {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut det = Rational::zero();
    for j in 0..n {
        if m.get(0, j).is_zero() {
            continue;
        }
        let mut minor = ExactMatrix::zeros(n - 1, n - 1);
        for i in 1..n {
            let mut col = 0;
            for jj in 0..n {
                if jj == j {
                    continue;
                }
                minor.set(i - 1, col, m.get(i, jj).clone());
                col += 1;
            }
        }
        let signed = if j % 2 == 0 {
            m.get(0, j).clone()
        } else {
            -m.get(0, j).clone()
        };
        det += signed * cofactor_det(&minor);
    }
    det
}

/// Cramer's rule; a deliberately different exact route than elimination.
pub fn cramer_solve(m: &ExactMatrix<Rational>, rhs: &[Rational]) -> Vec<Rational> {
    let n = m.rows();
    let det = cofactor_det(m);
    assert!(!det.is_zero(), "Cramer oracle needs a nonsingular matrix");
    (0..n)
        .map(|col| {
            let mut replaced = m.clone();
            for (i, value) in rhs.iter().enumerate() {
                replaced.set(i, col, value.clone());
            }
            cofactor_det(&replaced) / det.clone()
        })
        .collect()
}
