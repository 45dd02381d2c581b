//! End-to-end tests of the binary: exit-code contract, JSON round-trips,
//! and byte-identical reruns.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oapoly"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = binary()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn expand_latex_matches_known_form() {
    let output = run(&[
        "expand",
        "--in",
        &fixture("example_k2_m2.json"),
        "--format",
        "latex",
    ]);
    assert!(output.status.success());
    assert_eq!(stdout(&output).trim(), "2x_1^{2}+2x_2^{2}");
}

#[test]
fn expand_reads_stdin_and_emits_json() {
    let doc = std::fs::read_to_string(fixture("sharp_even_n2.json")).unwrap();
    let output = run_with_stdin(&["expand", "--in", "-"], &doc);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["kind"], "monomial_poly");
    assert_eq!(value["monomials"][0]["exponents"], serde_json::json!([4, 0]));
    assert_eq!(value["monomials"][0]["coeff"], "1");
    assert_eq!(value["monomials"][1]["coeff"], "-1/4");
}

#[test]
fn expand_empty_form_renders_zero() {
    let output = run_with_stdin(
        &["expand", "--in", "-", "--format", "latex"],
        r#"{"kind":"powers_form","m":2,"d":2,"terms":[]}"#,
    );
    assert!(output.status.success());
    assert_eq!(stdout(&output).trim(), "0");
}

#[test]
fn expand_rejects_monomial_input() {
    let output = run_with_stdin(
        &["expand", "--in", "-"],
        r#"{"kind":"monomial_poly","m":2,"d":2,"monomials":[]}"#,
    );
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("powers_form"), "stderr: {stderr}");
}

#[test]
fn parse_errors_name_the_field() {
    let output = run_with_stdin(
        &["expand", "--in", "-"],
        r#"{"kind":"powers_form","m":2,"d":2,"terms":[{"lambda":"oops","phi":["1","1"]}]}"#,
    );
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(
        stderr.contains("terms[0].lambda"),
        "diagnostic should name the field: {stderr}"
    );

    let output = run_with_stdin(
        &["expand", "--in", "-"],
        r#"{"kind":"powers_form","m":2,"d":2,"terms":[{"lambda":"1","phi":["1"]}]}"#,
    );
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("terms[0].phi"), "stderr: {stderr}");
}

#[test]
fn check_oa_exit_codes_and_witness() {
    // mixed monomial: falsified with witness, exit 1
    let output = run_with_stdin(
        &["check-oa", "--in", "-"],
        r#"{"kind":"monomial_poly","m":2,"d":2,"monomials":[{"exponents":[1,1],"coeff":"1"}]}"#,
    );
    assert_eq!(output.status.code(), Some(1));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["is_oa"], false);
    assert_eq!(value["disjoint_pair"]["x"], serde_json::json!(["1", "0"]));
    assert_eq!(value["disjoint_pair"]["y"], serde_json::json!(["0", "1"]));

    // the expanded k = m = 2 example is additive: exit 0
    let doc = std::fs::read_to_string(fixture("example_k2_m2.json")).unwrap();
    let output = run_with_stdin(&["check-oa", "--in", "-"], &doc);
    assert_eq!(output.status.code(), Some(0));

    // garbage input: exit 2
    let output = run_with_stdin(&["check-oa", "--in", "-"], "not json");
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn classify_matches_contract() {
    let output = run(&["classify", "--functional", "0,3"]);
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["homomorphism"], true);

    let output = run(&["classify", "--functional", "1,1"]);
    assert_eq!(output.status.code(), Some(1));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["homomorphism"], false);
    assert_eq!(value["negation"], false);
    assert_eq!(value["witness"], "1,-1");

    let output = run(&["classify", "--functional", "-2,0"]);
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["homomorphism"], false);
    assert_eq!(value["negation"], true);

    let output = run(&["classify", "--functional", "1,x"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn gen_sharp_even_degree_four() {
    let output = run(&["gen-sharp", "--degree", "4"]);
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["A"], serde_json::json!(["-1/6", "1/24"]));
    assert_eq!(value["B2"], "-1/4");
    assert_eq!(value["parity"], "even");
}

#[test]
fn gen_sharp_odd_degree_three() {
    let output = run(&["gen-sharp", "--degree", "3", "--verify"]);
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    let terms = &value["form"]["terms"];
    assert_eq!(terms[0]["lambda"], "-1/3");
    assert_eq!(terms[0]["phi"], serde_json::json!(["1", "1"]));
    assert_eq!(terms[1]["lambda"], "1/8");
    assert_eq!(terms[2]["lambda"], "1/24");
    assert_eq!(value["verification"]["all_passed"], true);
    // the emitted form equals the odd fixture
    let emitted = serde_json::to_string(&value["form"]).unwrap();
    let fixture_doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(fixture("sharp_odd_n2.json")).unwrap())
            .unwrap();
    assert_eq!(emitted, serde_json::to_string(&fixture_doc).unwrap());
}

#[test]
fn gen_sharp_rejects_low_degree() {
    assert_eq!(run(&["gen-sharp", "--degree", "1"]).status.code(), Some(2));
    assert_eq!(run(&["gen-sharp", "--degree", "0"]).status.code(), Some(2));
}

#[test]
fn verify_theorem_contract() {
    let output = run(&[
        "verify-theorem",
        "--trials",
        "25",
        "--seed",
        "42",
        "--dmax",
        "4",
        "--mmax",
        "5",
        "--k-policy",
        "below_m",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["failures_total"], 0);
    assert_eq!(value["theorem"]["trials_run"], 25);

    // equal_m reports boundary confirmations without failing the run
    let output = run(&[
        "verify-theorem",
        "--trials",
        "25",
        "--k-policy",
        "equal_m",
        "--mmax",
        "4",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert!(value["sharpness_confirmations"].as_u64().unwrap() >= 1);

    assert_eq!(run(&["verify-theorem", "--trials", "0"]).status.code(), Some(2));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "verify-theorem",
        "--trials",
        "10",
        "--seed",
        "9",
        "--dmax",
        "3",
        "--mmax",
        "4",
        "--k-policy",
        "any",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), second.status.code());
    assert_eq!(first.stdout, second.stdout);

    let sharp_first = run(&["gen-sharp", "--degree", "8", "--verify"]);
    let sharp_second = run(&["gen-sharp", "--degree", "8", "--verify"]);
    assert_eq!(sharp_first.stdout, sharp_second.stdout);
}

#[test]
fn emitted_documents_feed_back_in() {
    // expand output is a valid input document for check-oa, and expanding
    // the already-expanded document decides the same way
    let doc = std::fs::read_to_string(fixture("sharp_odd_n2.json")).unwrap();
    let output = run_with_stdin(&["expand", "--in", "-"], &doc);
    let text = stdout(&output);
    let output = run_with_stdin(&["check-oa", "--in", "-"], &text);
    assert_eq!(output.status.code(), Some(0));
    let verdict: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(verdict["is_oa"], true);
}
