//! The JSON interchange documents and their conversions to and from the
//! library types.
//!
//! Every rational travels as a string `"p/q"` (or `"p"` for integers) so no
//! consumer is tempted to coerce to floating point. Monomials are emitted
//! in descending lexicographic exponent order, so identical inputs always
//! produce byte-identical output.

use oapoly::algebra::{Functional, MonomialPoly, MultiIndex, PowersForm, Vector};
use oapoly::harness::TrialReport;
use oapoly::sharpness::{Parity, SharpnessInstance, VerificationReport};
use oapoly::{QMonomialPoly, QPowersForm, Rational};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A diagnostic meant for stderr; always maps to exit code 2.
#[derive(Debug)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for CliError {}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError(format!("invalid JSON input: {e}"))
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError(format!("i/o error: {e}"))
    }
}

impl From<oapoly::Error> for CliError {
    fn from(e: oapoly::Error) -> Self {
        CliError(e.to_string())
    }
}

fn parse_rational(text: &str, field: &str) -> Result<Rational, CliError> {
    text.parse::<Rational>()
        .map_err(|_| CliError(format!("{field}: invalid rational literal {text:?}")))
}

/// Either polynomial representation, tagged by `kind`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PolynomialDoc {
    PowersForm {
        m: u32,
        d: usize,
        terms: Vec<TermDoc>,
    },
    MonomialPoly {
        m: u32,
        d: usize,
        monomials: Vec<MonomialDoc>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub lambda: String,
    pub phi: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialDoc {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

impl PolynomialDoc {
    pub fn from_form(form: &QPowersForm) -> Self {
        PolynomialDoc::PowersForm {
            m: form.degree(),
            d: form.dim(),
            terms: form
                .terms()
                .iter()
                .map(|(lambda, phi)| TermDoc {
                    lambda: lambda.to_string(),
                    phi: phi
                        .coefficients()
                        .entries()
                        .iter()
                        .map(Rational::to_string)
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_poly(poly: &QMonomialPoly) -> Self {
        PolynomialDoc::MonomialPoly {
            m: poly.degree(),
            d: poly.dim(),
            monomials: poly
                .monomials()
                .collect::<Vec<_>>()
                .into_iter()
                .rev()
                .map(|(idx, coeff)| MonomialDoc {
                    exponents: idx.exponents().to_vec(),
                    coeff: coeff.to_string(),
                })
                .collect(),
        }
    }

    /// Converts, requiring the powers-form kind.
    pub fn into_powers_form(self) -> Result<QPowersForm, CliError> {
        match self {
            PolynomialDoc::PowersForm { m, d, terms } => build_form(m, d, &terms),
            PolynomialDoc::MonomialPoly { .. } => Err(CliError(
                "kind: expected \"powers_form\", got \"monomial_poly\"".into(),
            )),
        }
    }

    /// Converts either kind into an expanded polynomial.
    pub fn into_monomial_poly(self) -> Result<QMonomialPoly, CliError> {
        match self {
            PolynomialDoc::PowersForm { m, d, terms } => {
                Ok(build_form(m, d, &terms)?.expand())
            }
            PolynomialDoc::MonomialPoly { m, d, monomials } => build_poly(m, d, &monomials),
        }
    }
}

fn check_shape(m: u32, d: usize) -> Result<(), CliError> {
    if m < 1 {
        return Err(CliError("m: degree must be >= 1".into()));
    }
    if d < 1 {
        return Err(CliError("d: dimension must be >= 1".into()));
    }
    Ok(())
}

fn build_form(m: u32, d: usize, terms: &[TermDoc]) -> Result<QPowersForm, CliError> {
    check_shape(m, d)?;
    let mut converted = Vec::with_capacity(terms.len());
    for (i, term) in terms.iter().enumerate() {
        let lambda = parse_rational(&term.lambda, &format!("terms[{i}].lambda"))?;
        if term.phi.len() != d {
            return Err(CliError(format!(
                "terms[{i}].phi: expected {d} coefficients, got {}",
                term.phi.len()
            )));
        }
        let coeffs = term
            .phi
            .iter()
            .enumerate()
            .map(|(j, c)| parse_rational(c, &format!("terms[{i}].phi[{j}]")))
            .collect::<Result<Vec<_>, _>>()?;
        converted.push((lambda, Functional::new(Vector::new(coeffs))));
    }
    Ok(PowersForm::new(m, d, converted)?)
}

fn build_poly(m: u32, d: usize, monomials: &[MonomialDoc]) -> Result<QMonomialPoly, CliError> {
    check_shape(m, d)?;
    let mut terms = Vec::with_capacity(monomials.len());
    for (i, monomial) in monomials.iter().enumerate() {
        if monomial.exponents.len() != d {
            return Err(CliError(format!(
                "monomials[{i}].exponents: expected {d} entries, got {}",
                monomial.exponents.len()
            )));
        }
        let total: u32 = monomial.exponents.iter().sum();
        if total != m {
            return Err(CliError(format!(
                "monomials[{i}].exponents: sum to {total}, expected degree {m}"
            )));
        }
        let coeff = parse_rational(&monomial.coeff, &format!("monomials[{i}].coeff"))?;
        terms.push((MultiIndex::new(monomial.exponents.clone()), coeff));
    }
    Ok(MonomialPoly::from_terms(m, d, terms)?)
}

fn vector_doc(v: &Vector<Rational>) -> Vec<String> {
    v.entries().iter().map(Rational::to_string).collect()
}

/// Verdict document for `check-oa`.
#[derive(Debug, Serialize, Deserialize)]
pub struct OaVerdictDoc {
    pub kind: String,
    pub is_oa: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_monomial: Option<MonomialDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disjoint_pair: Option<DisjointPairDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DisjointPairDoc {
    pub x: Vec<String>,
    pub y: Vec<String>,
}

pub fn oa_verdict_doc(verdict: &oapoly::lattice::OaVerdict<Rational>) -> OaVerdictDoc {
    OaVerdictDoc {
        kind: "oa_verdict".into(),
        is_oa: verdict.is_oa,
        witness_monomial: verdict.witness.as_ref().map(|(idx, coeff)| MonomialDoc {
            exponents: idx.exponents().to_vec(),
            coeff: coeff.to_string(),
        }),
        disjoint_pair: verdict
            .disjoint_witness
            .as_ref()
            .map(|(x, y)| DisjointPairDoc {
                x: vector_doc(x),
                y: vector_doc(y),
            }),
    }
}

/// Verdict document for `classify`.
#[derive(Debug, Serialize, Deserialize)]
pub struct ClassifyDoc {
    pub homomorphism: bool,
    pub negation: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

pub fn classify_doc(verdict: &oapoly::lattice::HomVerdict<Rational>) -> ClassifyDoc {
    ClassifyDoc {
        homomorphism: verdict.is_homomorphism,
        negation: verdict.negation_is,
        witness: verdict.witness.as_ref().map(|w| {
            w.entries()
                .iter()
                .map(Rational::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }),
    }
}

/// Full instance document for `gen-sharp`.
#[derive(Debug, Serialize, Deserialize)]
pub struct SharpnessDoc {
    pub kind: String,
    pub n: usize,
    pub m: u32,
    pub parity: String,
    #[serde(rename = "A")]
    pub weights: Vec<String>,
    #[serde(rename = "B2")]
    pub b2: String,
    pub form: PolynomialDoc,
    pub expanded: PolynomialDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationDoc>,
}

pub fn sharpness_doc(inst: &SharpnessInstance<Rational>) -> SharpnessDoc {
    SharpnessDoc {
        kind: "sharpness_instance".into(),
        n: inst.n,
        m: inst.m,
        parity: match inst.parity {
            Parity::Even => "even".into(),
            Parity::Odd => "odd".into(),
        },
        weights: inst.weights.iter().map(Rational::to_string).collect(),
        b2: inst.b2.to_string(),
        form: PolynomialDoc::from_form(&inst.form),
        expanded: PolynomialDoc::from_poly(&inst.expanded),
        verification: None,
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VerificationDoc {
    pub all_passed: bool,
    pub clauses: Vec<ClauseDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ClauseDoc {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

pub fn verification_doc(report: &VerificationReport) -> VerificationDoc {
    VerificationDoc {
        all_passed: report.all_passed(),
        clauses: report
            .clauses
            .iter()
            .map(|c| ClauseDoc {
                name: c.name.to_string(),
                passed: c.passed,
                detail: c.detail.clone(),
            })
            .collect(),
    }
}

/// Campaign report documents for `verify-theorem`.
#[derive(Debug, Serialize, Deserialize)]
pub struct TrialReportDoc {
    pub trials_run: u64,
    pub failures: Vec<FailureDoc>,
    pub counts: BTreeMap<String, u64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FailureDoc {
    pub trial: u64,
    pub instance: String,
    pub clause: String,
}

pub fn trial_report_doc(report: &TrialReport) -> TrialReportDoc {
    TrialReportDoc {
        trials_run: report.trials_run,
        failures: report
            .failures
            .iter()
            .map(|f| FailureDoc {
                trial: f.trial,
                instance: f.instance.clone(),
                clause: f.clause.clone(),
            })
            .collect(),
        counts: report.counts.clone(),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CampaignDoc {
    pub kind: String,
    pub seed: u64,
    pub trials: u32,
    pub d_max: usize,
    pub m_max: u32,
    pub k_policy: String,
    pub theorem: TrialReportDoc,
    pub derivative: TrialReportDoc,
    pub agreement: TrialReportDoc,
    pub failures_total: u64,
    pub sharpness_confirmations: u64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use oapoly::sharpness::gen_for_degree;

    /// parse(serialize(x)) = x, at both the document and the library level.
    #[test]
    fn documents_round_trip_losslessly() {
        let inst = gen_for_degree::<Rational>(5).unwrap();
        for doc in [
            PolynomialDoc::from_form(&inst.form),
            PolynomialDoc::from_poly(&inst.expanded),
        ] {
            let json = serde_json::to_string(&doc).unwrap();
            let reparsed: PolynomialDoc = serde_json::from_str(&json).unwrap();
            assert_eq!(reparsed, doc);
        }

        let form_doc = PolynomialDoc::from_form(&inst.form);
        let rebuilt = form_doc.clone().into_powers_form().unwrap();
        assert_eq!(rebuilt, inst.form);
        assert_eq!(PolynomialDoc::from_form(&rebuilt), form_doc);

        let poly_doc = PolynomialDoc::from_poly(&inst.expanded);
        let rebuilt = poly_doc.clone().into_monomial_poly().unwrap();
        assert_eq!(rebuilt, inst.expanded);
        assert_eq!(PolynomialDoc::from_poly(&rebuilt), poly_doc);
    }

    #[test]
    fn field_diagnostics() {
        let doc = PolynomialDoc::PowersForm {
            m: 2,
            d: 2,
            terms: vec![TermDoc {
                lambda: "1".into(),
                phi: vec!["1".into(), "1/0".into()],
            }],
        };
        let err = doc.into_powers_form().unwrap_err();
        assert!(err.0.contains("terms[0].phi[1]"), "{err}");

        let doc = PolynomialDoc::MonomialPoly {
            m: 3,
            d: 2,
            monomials: vec![MonomialDoc {
                exponents: vec![1, 1],
                coeff: "1".into(),
            }],
        };
        let err = doc.into_monomial_poly().unwrap_err();
        assert!(err.0.contains("monomials[0].exponents"), "{err}");
    }
}
