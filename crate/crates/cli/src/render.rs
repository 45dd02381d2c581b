//! LaTeX and plain-text rendering of expanded polynomials.

use oapoly::QMonomialPoly;
use oapoly::Rational;
use num_traits::{One, Signed};

/// Renders e.g. `2x_1^{2}+2x_2^{2}` or `x_1^{4}-\frac{1}{4}x_2^{4}`.
pub fn latex(poly: &QMonomialPoly) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (position, (idx, coeff)) in poly.monomials().collect::<Vec<_>>().into_iter().rev().enumerate() {
        let magnitude = coeff.abs();
        if coeff.is_negative() {
            out.push('-');
        } else if position > 0 {
            out.push('+');
        }
        if !magnitude.is_one() {
            out.push_str(&latex_rational(&magnitude));
        }
        for (i, &e) in idx.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e == 1 {
                out.push_str(&format!("x_{}", i + 1));
            } else {
                out.push_str(&format!("x_{}^{{{e}}}", i + 1));
            }
        }
    }
    out
}

fn latex_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", value.numer(), value.denom())
    }
}

/// Plain-text rendering, identical to the library's display form.
pub fn text(poly: &QMonomialPoly) -> String {
    poly.to_string()
}
