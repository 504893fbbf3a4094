//! Integration tests for the batch binary: exit codes, output determinism,
//! and the report schema.

use std::io::Write;
use std::process::{Command, Output};

use modal_duality::report::Report;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modal-duality"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn enumerate_passes_and_exits_zero() {
    let out = run(&["enumerate", "--max-m", "2", "--no-time"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("necessity 16 / tense 16 / compatible relations 16"));
}

#[test]
fn certify_reports_round_trip_as_json() {
    for target in ["alpha", "beta"] {
        let out = run(&[
            "certify",
            target,
            "--json",
            "--no-time",
            "--truncation",
            "120",
        ]);
        assert_eq!(out.status.code(), Some(0), "{target}");
        let report: Report = serde_json::from_slice(&out.stdout).unwrap();
        assert!(report.all_pass());
        assert_eq!(report.time_ms, None);
        // print → parse → print is the identity on bytes
        let reprinted = serde_json::to_string_pretty(&report).unwrap();
        assert_eq!(reprinted.trim().as_bytes(), out.stdout.trim_ascii());
    }
}

#[test]
fn identical_seed_and_flags_give_identical_bytes() {
    let args = [
        "property-suite",
        "--seed",
        "42",
        "--cases",
        "150",
        "--json",
        "--no-time",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn analyze_prints_a_verdict_and_exits_zero() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    // the four-element boolean algebra as a square
    writeln!(file, "0 <= 1\n0 <= 2\n1 <= 3\n2 <= 3").unwrap();
    let out = run(&["analyze", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let verdict: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(verdict["boolean"]["holds"], serde_json::Value::Bool(true));
    assert_eq!(verdict["size"], serde_json::json!(4));
}

#[test]
fn analyze_reports_nondistributivity_with_witness() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "0 <= 1\n0 <= 2\n0 <= 3\n1 <= 4\n2 <= 4\n3 <= 4").unwrap();
    let out = run(&["analyze", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let verdict: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        verdict["distributive_lattice"]["holds"],
        serde_json::Value::Bool(false)
    );
    assert!(verdict["distributive_lattice"]["witness"].is_object());
}

#[test]
fn parse_failures_exit_two_with_line_numbers() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "0 <= 1\n1 < 2").unwrap();
    let out = run(&["analyze", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "stderr was: {err}");

    // Empty files are rejected: a poset must be nonempty.
    let empty = tempfile::NamedTempFile::new().unwrap();
    let out = run(&["analyze", empty.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // Missing files too.
    let out = run(&["analyze", "/definitely/not/here.poset"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["enumerate", "--max-m", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn vacuous_property_suite_passes() {
    let out = run(&["property-suite", "--cases", "0", "--json", "--no-time"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.all_pass());
}
