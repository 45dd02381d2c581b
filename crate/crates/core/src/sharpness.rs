//! Construction and exact verification of the degree-`m` boundary families:
//! for every `m >= 2`, a powers form with exactly `m` pairwise independent
//! terms, none of whose functionals (nor their negatives) is a lattice
//! homomorphism, that nevertheless expands to the orthogonally additive
//! `x1^m + B2 x2^m`.
//!
//! Even degrees `m = 2n` come from an exact Vandermonde-type solve that
//! cancels every mixed monomial of
//! `sum_r A_r ((r x1 + x2)^{2n} + (r x1 - x2)^{2n})`; odd degrees
//! `m = 2n - 1` are the `(2n-1)`-st differential of the even family at
//! `(1, 1)` with the common factorial factor cancelled.

use crate::algebra::{Functional, MonomialPoly, PowersForm, Vector};
use crate::error::{Error, Result};
use crate::lattice::{classify_homomorphism, is_orthogonally_additive};
use crate::linalg::ExactMatrix;
use crate::scalar::{int, Scalar};
use num_traits::pow::pow;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A fully materialized boundary instance for degree `m`, carrying the
/// solved weights, both polynomial representations, and the claimed
/// pure-power coefficient `B2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpnessInstance<T> {
    pub n: usize,
    pub m: u32,
    pub parity: Parity,
    /// Solved weights `A_1..A_n` of the even-degree system.
    pub weights: Vec<T>,
    /// Coefficient of `x2^m` in the expansion, computed independently as
    /// `2 * sum_r A_r`.
    pub b2: T,
    pub form: PowersForm<T>,
    pub expanded: MonomialPoly<T>,
}

/// The `n x n` system whose row `j` (from 0) tabulates `r^{2(n-j)}` for
/// `r = 1..n`, together with the right-hand side `(1/2, 0, .., 0)`.
///
/// Row 0 normalizes `sum_r A_r r^{2n} = 1/2` so the expansion's leading
/// coefficient is exactly 1; the remaining rows cancel the mixed monomials.
/// The transpose has a nonzero Vandermonde-style determinant, so the system
/// is uniquely solvable.
pub fn build_system<T: Scalar>(n: usize) -> Result<(ExactMatrix<T>, Vector<T>)> {
    if n < 1 {
        return Err(Error::InvalidParameter {
            detail: "system size must satisfy n >= 1",
        });
    }
    let mut matrix = ExactMatrix::zeros(n, n);
    for j in 0..n {
        for r in 1..=n {
            let power = 2 * (n - j) as u32;
            matrix.set(j, r - 1, pow(int::<T>(r as i64), power as usize));
        }
    }
    let mut rhs = Vector::zero(n);
    rhs.set(0, T::one() / int::<T>(2));
    Ok((matrix, rhs))
}

/// Exact solve; the residual of the returned vector is exactly zero.
pub fn solve_exact<T: Scalar>(matrix: &ExactMatrix<T>, rhs: &Vector<T>) -> Result<Vector<T>> {
    matrix.solve(rhs)
}

/// The even-degree instance `m = 2n`: weights `A_r` on both `r x1 + x2` and
/// `r x1 - x2`, expanding to `x1^{2n} + B2 x2^{2n}`.
pub fn gen_even<T: Scalar>(n: usize) -> Result<SharpnessInstance<T>> {
    let (matrix, rhs) = build_system::<T>(n)?;
    let weights = matrix
        .solve(&rhs)
        .expect("power-table system is Vandermonde-invertible");
    let m = 2 * n as u32;
    let mut terms = Vec::with_capacity(2 * n);
    for r in 1..=n {
        let a = weights.get(r - 1).clone();
        terms.push((a.clone(), functional_r(r as i64, 1)));
        terms.push((a, functional_r(r as i64, -1)));
    }
    let form = PowersForm::new(m, 2, terms)?;
    let expanded = form.expand();
    let b2 = weights
        .entries()
        .iter()
        .fold(T::zero(), |acc, a| acc + a.clone())
        * int::<T>(2);
    Ok(SharpnessInstance {
        n,
        m,
        parity: Parity::Even,
        weights: weights.entries().to_vec(),
        b2,
        form,
        expanded,
    })
}

/// The odd-degree instance `m = 2n - 1`, `n >= 2`: weight `2 A_1` on
/// `x1 + x2`, and `A_r (r + 1)` on `r x1 + x2`, `A_r (r - 1)` on
/// `r x1 - x2` for `r = 2..n` — exactly `2n - 1` terms, expanding to
/// `x1^{2n-1} + B2 x2^{2n-1}` with the same `B2` as [`gen_even`].
///
/// `n = 1` would give the degenerate degree `m = 1`, where every linear
/// functional is already additive on disjoint vectors, so it is rejected.
pub fn gen_odd<T: Scalar>(n: usize) -> Result<SharpnessInstance<T>> {
    if n < 2 {
        return Err(Error::InvalidParameter {
            detail: "odd-degree instances need n >= 2",
        });
    }
    let even = gen_even::<T>(n)?;
    let m = 2 * n as u32 - 1;
    let mut terms = Vec::with_capacity(2 * n - 1);
    terms.push((
        even.weights[0].clone() * int::<T>(2),
        functional_r(1, 1),
    ));
    for r in 2..=n {
        let a = even.weights[r - 1].clone();
        terms.push((
            a.clone() * int::<T>(r as i64 + 1),
            functional_r(r as i64, 1),
        ));
        terms.push((a * int::<T>(r as i64 - 1), functional_r(r as i64, -1)));
    }
    let form = PowersForm::new(m, 2, terms)?;
    let expanded = form.expand();
    Ok(SharpnessInstance {
        n,
        m,
        parity: Parity::Odd,
        weights: even.weights,
        b2: even.b2,
        form,
        expanded,
    })
}

/// Builds the instance for a requested degree `m >= 2`, choosing the even
/// or odd construction.
pub fn gen_for_degree<T: Scalar>(m: u32) -> Result<SharpnessInstance<T>> {
    if m < 2 {
        return Err(Error::InvalidParameter {
            detail: "sharpness instances exist for degree m >= 2",
        });
    }
    if m.is_multiple_of(2) {
        gen_even(m as usize / 2)
    } else {
        gen_odd((m as usize).div_ceil(2))
    }
}

fn functional_r<T: Scalar>(r: i64, sign: i64) -> Functional<T> {
    Functional::from_i64(&[r, sign])
}

/// One verified clause of [`verify_instance`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

/// Outcome of checking a [`SharpnessInstance`] clause by clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub clauses: Vec<ClauseResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        for clause in &self.clauses {
            writeln!(
                f,
                "{}: {}{}",
                clause.name,
                if clause.passed { "pass" } else { "FAIL" },
                clause
                    .detail
                    .as_deref()
                    .map(|d| format!(" ({d})"))
                    .unwrap_or_default()
            )?;
        }
        Ok(())
    }
}

/// Re-checks every claim an instance makes, in exact arithmetic:
/// 1. the stored expansion matches a fresh expansion of the form, and
///    equals `x1^m + B2 x2^m` built independently from the stored `B2`;
/// 2. the expansion is orthogonally additive (pure powers only);
/// 3. no term's functional, nor its negative, is a lattice homomorphism;
/// 4. the functionals are pairwise independent;
/// 5. the form has exactly `m` terms.
pub fn verify_instance<T: Scalar>(inst: &SharpnessInstance<T>) -> VerificationReport {
    let mut clauses = Vec::with_capacity(5);

    let fresh = inst.form.expand();
    let claimed = claimed_expansion(inst);
    let expansion_ok = fresh == inst.expanded && inst.expanded == claimed;
    clauses.push(ClauseResult {
        name: "expansion_matches",
        passed: expansion_ok,
        detail: (!expansion_ok).then(|| {
            format!(
                "expand(form) = {fresh}, stored = {}, claimed = {claimed}",
                inst.expanded
            )
        }),
    });

    let oa = is_orthogonally_additive(&inst.expanded);
    clauses.push(ClauseResult {
        name: "orthogonally_additive",
        passed: oa.is_oa,
        detail: oa
            .witness
            .map(|(idx, c)| format!("mixed monomial {:?} with coefficient {c}", idx.exponents())),
    });

    let offender = inst
        .form
        .terms()
        .iter()
        .position(|(_, phi)| classify_homomorphism(phi).either());
    clauses.push(ClauseResult {
        name: "no_homomorphisms",
        passed: offender.is_none(),
        detail: offender.map(|i| {
            format!(
                "term {i} functional {} (or its negative) is a homomorphism",
                inst.form.terms()[i].1
            )
        }),
    });

    let dependent = dependent_pair(&inst.form);
    clauses.push(ClauseResult {
        name: "pairwise_independent",
        passed: dependent.is_none(),
        detail: dependent.map(|(i, j)| format!("terms {i} and {j} are proportional")),
    });

    let count_ok = inst.form.len() == inst.m as usize;
    clauses.push(ClauseResult {
        name: "term_count",
        passed: count_ok,
        detail: (!count_ok).then(|| {
            format!("expected {} terms, found {}", inst.m, inst.form.len())
        }),
    });

    VerificationReport { clauses }
}

/// `x1^m + B2 x2^m` assembled from the stored `B2` — the independent route
/// the expansion is compared against.
fn claimed_expansion<T: Scalar>(inst: &SharpnessInstance<T>) -> MonomialPoly<T> {
    use crate::algebra::MultiIndex;
    MonomialPoly::from_terms(
        inst.m,
        2,
        [
            (MultiIndex::pure_power(2, 0, inst.m), T::one()),
            (MultiIndex::pure_power(2, 1, inst.m), inst.b2.clone()),
        ],
    )
    .expect("pure powers have the right degree")
}

fn dependent_pair<T: Scalar>(form: &PowersForm<T>) -> Option<(usize, usize)> {
    let canonical: Vec<_> = form
        .terms()
        .iter()
        .map(|(_, phi)| phi.canonical_direction().expect("terms are nonzero").1)
        .collect();
    for i in 0..canonical.len() {
        for j in (i + 1)..canonical.len() {
            if canonical[i] == canonical[j] {
                return Some((i, j));
            }
        }
    }
    None
}
