//! Exact decision procedures for orthogonal additivity of sums of powers of
//! linear functionals on finite-dimensional vector lattices.
//!
//! The library works with `m`-homogeneous polynomials on `R^d` (componentwise
//! order) represented two ways: as *powers forms* `P = sum_j lambda_j phi_j^m`
//! with linear functionals `phi_j`, and as sparse *monomial expansions*. All
//! arithmetic is exact; the shipped scalar is [`Rational`]
//! (arbitrary-precision, always in lowest terms), and the algorithms are
//! generic over any [`scalar::Scalar`].
//!
//! Main entry points:
//! - [`algebra`]: expansion, evaluation, derivatives, term amalgamation.
//! - [`lattice`]: meet/join/abs, lattice-homomorphism classification,
//!   the orthogonal-additivity decision, polarization.
//! - [`sharpness`]: for every degree `m >= 2`, a family of `m` functionals
//!   (none of which, nor their negatives, is a homomorphism) whose scaled
//!   `m`-th powers sum to a pure-power polynomial, with exact verification.
//! - [`harness`]: seeded randomized campaigns checking the classification
//!   theorem and the derivative/agreement properties at desk scale.

pub mod algebra;
pub mod error;
pub mod harness;
pub mod lattice;
pub mod linalg;
pub mod rng;
pub mod scalar;
pub mod sharpness;

pub use error::Error;
pub use scalar::Scalar;

/// The scalar used throughout the shipped tooling: exact big rationals.
pub type Rational = num_rational::BigRational;

/// Vector over `Q`.
pub type QVector = algebra::Vector<Rational>;
/// Linear functional over `Q`.
pub type QFunctional = algebra::Functional<Rational>;
/// Powers form over `Q`.
pub type QPowersForm = algebra::PowersForm<Rational>;
/// Sparse monomial polynomial over `Q`.
pub type QMonomialPoly = algebra::MonomialPoly<Rational>;
