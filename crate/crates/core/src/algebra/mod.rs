//! Exact representations of homogeneous polynomials: powers forms
//! `sum_j lambda_j phi_j^m` and sparse monomial expansions, with expansion,
//! evaluation, differentials, and term amalgamation.

mod form;
mod index;
mod poly;
mod vector;

pub use form::PowersForm;
pub use index::{compositions, MultiIndex};
pub use poly::MonomialPoly;
pub use vector::{Functional, Vector};
