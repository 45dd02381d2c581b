//! `oapoly` — exact decisions about orthogonally additive polynomials on
//! finite-dimensional vector lattices.
//!
//! Subcommands: `expand`, `check-oa`, `classify`, `gen-sharp`,
//! `verify-theorem`. Output goes to stdout as JSON (or LaTeX/plain text for
//! `expand`), diagnostics to stderr. Exit codes: 0 when the checked
//! property holds, 1 when it is falsified (a witness is included in the
//! output), 2 on input errors.

mod docs;
mod render;

use clap::{Parser, Subcommand, ValueEnum};
use docs::CliError;
use oapoly::harness::{
    run_agreement_trials, run_deriv_trials, run_theorem_trials, KPolicy, TrialConfig,
};
use oapoly::lattice::{classify_homomorphism, is_orthogonally_additive};
use oapoly::algebra::{Functional, Vector};
use oapoly::sharpness::{gen_for_degree, verify_instance};
use oapoly::Rational;
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "oapoly",
    version,
    about = "Exact decisions for orthogonally additive sums of powers of linear functionals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a powers form into its exact monomial normal form.
    Expand {
        /// Input file with a powers_form JSON document, or "-" for stdin.
        #[arg(long = "in")]
        input: String,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Decide orthogonal additivity; falsification carries a witness.
    CheckOa {
        /// Input file with a powers_form or monomial_poly document, or "-".
        #[arg(long = "in")]
        input: String,
    },
    /// Classify a linear functional against the lattice-homomorphism
    /// characterization.
    Classify {
        /// Comma-separated rational coefficients, e.g. "1,-1/2,0".
        #[arg(long, allow_hyphen_values = true)]
        functional: String,
    },
    /// Generate the degree-m boundary instance (k = m functionals, none a
    /// homomorphism, additive sum) and optionally verify it.
    GenSharp {
        /// Homogeneity degree m >= 2.
        #[arg(long)]
        degree: u32,
        /// Re-verify every clause of the instance; exit 1 on any failure.
        #[arg(long)]
        verify: bool,
    },
    /// Run the seeded theorem / derivative / agreement campaigns.
    VerifyTheorem {
        #[arg(long, default_value_t = 1000)]
        trials: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long = "dmax", default_value_t = 5)]
        d_max: usize,
        #[arg(long = "mmax", default_value_t = 6)]
        m_max: u32,
        #[arg(long = "k-policy", value_enum, default_value_t = KPolicyArg::BelowM)]
        k_policy: KPolicyArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum KPolicyArg {
    #[value(name = "below_m")]
    BelowM,
    #[value(name = "equal_m")]
    EqualM,
    #[value(name = "any")]
    Any,
}

impl KPolicyArg {
    fn to_policy(self) -> KPolicy {
        match self {
            KPolicyArg::BelowM => KPolicy::BelowM,
            KPolicyArg::EqualM => KPolicy::EqualM,
            KPolicyArg::Any => KPolicy::Any,
        }
    }

    fn name(self) -> &'static str {
        match self {
            KPolicyArg::BelowM => "below_m",
            KPolicyArg::EqualM => "equal_m",
            KPolicyArg::Any => "any",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Expand { input, format } => expand(&input, format),
        Command::CheckOa { input } => check_oa(&input),
        Command::Classify { functional } => classify(&functional),
        Command::GenSharp { degree, verify } => gen_sharp(degree, verify),
        Command::VerifyTheorem {
            trials,
            seed,
            d_max,
            m_max,
            k_policy,
        } => verify_theorem(trials, seed, d_max, m_max, k_policy),
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buffer = String::new();
        std::io::stdin().read_to_string(&mut buffer)?;
        Ok(buffer)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn parse_document(path: &str) -> Result<docs::PolynomialDoc, CliError> {
    Ok(serde_json::from_str(&read_input(path)?)?)
}

fn emit<T: serde::Serialize>(value: &T) -> Result<(), CliError> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn expand(input: &str, format: Format) -> Result<u8, CliError> {
    let form = parse_document(input)?.into_powers_form()?;
    let expanded = form.expand();
    match format {
        Format::Json => emit(&docs::PolynomialDoc::from_poly(&expanded))?,
        Format::Latex => println!("{}", render::latex(&expanded)),
        Format::Text => println!("{}", render::text(&expanded)),
    }
    Ok(0)
}

fn check_oa(input: &str) -> Result<u8, CliError> {
    let poly = parse_document(input)?.into_monomial_poly()?;
    let verdict = is_orthogonally_additive(&poly);
    emit(&docs::oa_verdict_doc(&verdict))?;
    Ok(if verdict.is_oa { 0 } else { 1 })
}

fn classify(functional: &str) -> Result<u8, CliError> {
    let coefficients = functional
        .split(',')
        .enumerate()
        .map(|(i, part)| {
            part.trim()
                .parse::<Rational>()
                .map_err(|_| CliError(format!("functional[{i}]: invalid rational literal {part:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coefficients.is_empty() {
        return Err(CliError("functional: expected at least one coefficient".into()));
    }
    let verdict = classify_homomorphism(&Functional::new(Vector::new(coefficients)));
    emit(&docs::classify_doc(&verdict))?;
    Ok(if verdict.either() { 0 } else { 1 })
}

fn gen_sharp(degree: u32, verify: bool) -> Result<u8, CliError> {
    let instance = gen_for_degree::<Rational>(degree)?;
    let mut doc = docs::sharpness_doc(&instance);
    let mut exit = 0;
    if verify {
        let report = verify_instance(&instance);
        if !report.all_passed() {
            exit = 1;
        }
        doc.verification = Some(docs::verification_doc(&report));
    }
    emit(&doc)?;
    Ok(exit)
}

fn verify_theorem(
    trials: u32,
    seed: u64,
    d_max: usize,
    m_max: u32,
    k_policy: KPolicyArg,
) -> Result<u8, CliError> {
    let config = TrialConfig::new(seed, trials, d_max, m_max, k_policy.to_policy())?;
    let theorem = run_theorem_trials::<Rational>(&config);
    let derivative = run_deriv_trials::<Rational>(&config);
    let agreement = run_agreement_trials::<Rational>(&config);
    let failures_total =
        (theorem.failures.len() + derivative.failures.len() + agreement.failures.len()) as u64;
    let sharpness_confirmations = theorem
        .counts
        .get("sharpness_confirmations")
        .copied()
        .unwrap_or(0);
    let doc = docs::CampaignDoc {
        kind: "trial_report".into(),
        seed,
        trials,
        d_max,
        m_max,
        k_policy: k_policy.name().into(),
        theorem: docs::trial_report_doc(&theorem),
        derivative: docs::trial_report_doc(&derivative),
        agreement: docs::trial_report_doc(&agreement),
        failures_total,
        sharpness_confirmations,
    };
    emit(&doc)?;
    Ok(if failures_total == 0 { 0 } else { 1 })
}
