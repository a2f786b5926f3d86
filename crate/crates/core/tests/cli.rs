//! Exit-code and output contract of the command-line interface.

use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_aci3"))
}

fn write_temp(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

const GOLDEN_B: &str = r#"{"codim":3,"F":[[4,4,6,7],[7,8,10,10,11],[11,14]]}"#;
const GOLDEN_C: &str = r#"{"codim":3,"F":[[2,2,2,5],[4,4,4,4,6,6],[5,5,7]]}"#;

fn run(args: &[&str]) -> Output {
    bin().args(args).env_remove("ACI3_SEED").output().unwrap()
}

#[test]
fn analyze_reports_shape_of_valid_table() {
    let f = write_temp(GOLDEN_B);
    let out = run(&["analyze-betti", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dstar"], 4);
    assert_eq!(v["t"], 2);
}

#[test]
fn analyze_rejects_complete_intersection_table() {
    // three generators: no almost-complete-intersection decomposition
    let f = write_temp(r#"{"codim":3,"F":[[2,3,4],[5,6,7],[9]]}"#);
    let out = run(&["analyze-betti", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn analyze_malformed_json_is_a_usage_error() {
    let f = write_temp("{not json");
    let out = run(&["analyze-betti", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_aci_exit_codes_follow_verdict() {
    let f = write_temp(GOLDEN_C);
    let path = f.path().to_str().unwrap();
    // built-in provider cannot answer the minimum question: inconclusive
    let out = run(&["check-aci", path, "--min-provider", "ci"]);
    assert_eq!(out.status.code(), Some(3));
    // searching provider certifies a witness: valid
    let out = run(&["check-aci", path, "--min-provider", "oracle", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn randomized_commands_require_a_seed() {
    let f = write_temp(GOLDEN_C);
    let path = f.path().to_str().unwrap();
    let out = run(&["check-aci", path, "--min-provider", "oracle"]);
    assert_eq!(out.status.code(), Some(2));
    // environment seed is honored only when explicitly allowed
    let out = bin()
        .args(["check-aci", path, "--min-provider", "oracle"])
        .env("ACI3_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["check-aci", path, "--min-provider", "oracle", "--allow-env-seed"])
        .env("ACI3_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn roundtrip_is_exact_for_two_linear_syzygies() {
    let f = write_temp(GOLDEN_B);
    let out = run(&["roundtrip", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn roundtrip_rejects_unrealizable_and_unsupported_tables() {
    let f = write_temp(GOLDEN_C);
    let out = run(&["roundtrip", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    // t = 11 is outside the monomial realization range
    let big = r#"{"codim":3,"F":[[8,9,10,14],
        [17,18,19,19,19,19,19,20,20,20,20,21,21,21],
        [20,20,20,21,21,21,21,22,22,22,22]]}"#;
    let f = write_temp(big);
    let out = run(&["roundtrip", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_bounds_the_exponent_range() {
    let out = run(&["sweep", "--family", "mont2", "--max-exponent", "7"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["sweep", "--family", "mont3", "--max-exponent", "3"]);
    // boundary counterexamples are reported, so the sweep itself passes
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("family,params,oracle_match,verdict,realization,repro"));
}

#[test]
fn check_gorenstein_degrees_validates_sequences() {
    let out = run(&["check-gorenstein-degrees", "3,4,6,6,7"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["check-gorenstein-degrees", "2,2,2,2"]); // even length
    assert_eq!(out.status.code(), Some(1));
}
