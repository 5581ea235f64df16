use std::process::{Command, Output};

use serde::de::DeserializeOwned;
use serde::Serialize;

use simplex_grassmann::cli::{
    BijectionOutput, EnumerateOutput, GradeOutput, PolynomialOutput, SeriesOutput, EXIT_OK,
    EXIT_USAGE, EXIT_VERIFY_FAILED,
};
use simplex_grassmann::verify::VerifyReport;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simplex-grassmann"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bin(args);
    assert_eq!(
        out.status.code(),
        Some(EXIT_OK),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn round_trip<T: Serialize + DeserializeOwned>(args: &[&str]) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let text = stdout(&full);
    let text = text.trim_end_matches('\n');
    let parsed: T = serde_json::from_str(text).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    assert_eq!(serde_json::to_string(&parsed).unwrap(), text, "{args:?}");
}

#[test]
fn json_output_round_trips_for_every_subcommand() {
    round_trip::<EnumerateOutput>(&["enumerate", "--d", "3", "--r", "3"]);
    round_trip::<GradeOutput>(&["grade", "--d", "3", "--r", "4", "--weight", "1,2,5"]);
    round_trip::<PolynomialOutput>(&["dilation-poly", "--d", "3", "--r", "4"]);
    round_trip::<PolynomialOutput>(&["weighted-poly", "--d", "4", "--r", "3"]);
    round_trip::<PolynomialOutput>(&["poincare", "--d", "2", "--r", "2"]);
    round_trip::<BijectionOutput>(&["bijection", "--d", "3", "--r", "2"]);
    round_trip::<SeriesOutput>(&["series", "--d", "2", "--max-t", "3", "--max-z", "4"]);
    round_trip::<VerifyReport>(&["verify", "--d-max", "2", "--r-max", "2"]);
}

#[test]
fn documented_examples() {
    assert_eq!(
        stdout(&["dilation-poly", "--d", "3", "--r", "4", "--format", "plain"]).trim_end(),
        "1 + 3*t + 6*t^2 + 10*t^3 + 15*t^4"
    );
    assert_eq!(
        stdout(&["poincare", "--d", "1", "--r", "0"]).trim_end(),
        "1"
    );
    assert_eq!(
        stdout(&["poincare", "--d", "2", "--r", "2", "--format", "csv"])
            .lines()
            .collect::<Vec<_>>(),
        ["0,1", "1,1", "2,2", "3,1", "4,1"]
    );
}

#[test]
fn large_coefficients_are_decimal_strings() {
    let text = stdout(&["enumerate", "--d", "2", "--r", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["count"], "3");
    let text = stdout(&[
        "dilation-poly",
        "--d",
        "40",
        "--r",
        "40",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["polynomial"][40], "53753604366668088230810");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["enumerate", "--d", "4", "--r", "3", "--format", "csv"][..],
        &["bijection", "--d", "3", "--r", "3"],
        &["verify", "--d-max", "3", "--r-max", "3", "--format", "json"],
    ] {
        assert_eq!(bin(args).stdout, bin(args).stdout, "{args:?}");
    }
}

#[test]
fn out_flag_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("poly.txt");
    let out = bin(&[
        "dilation-poly",
        "--d",
        "3",
        "--r",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap().trim_end(),
        "1 + 3*t + 6*t^2 + 10*t^3"
    );
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["enumerate", "--d", "0", "--r", "2"][..],
        &["enumerate", "--r", "2"],
        &["grade", "--d", "3", "--r", "2", "--weight", "1,2"],
        &["grade", "--d", "2", "--r", "2", "--weight", "1,0"],
        &["grade", "--d", "2", "--r", "2", "--weight", "heavy"],
        &["poincare", "--d", "2", "--r", "2", "--format", "xml"],
        &["frobnicate"],
    ] {
        let out = bin(args);
        assert_eq!(out.status.code(), Some(EXIT_USAGE), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_exit_status_tracks_failures() {
    assert_eq!(
        bin(&["verify", "--d-max", "3", "--r-max", "3"])
            .status
            .code(),
        Some(EXIT_OK)
    );
    let out = bin(&[
        "verify",
        "--d-max",
        "3",
        "--r-max",
        "3",
        "--inject-fault",
        "conjugacy",
    ]);
    assert_eq!(out.status.code(), Some(EXIT_VERIFY_FAILED));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL conjugacy"));
    assert!(text.contains("first counterexample"));
}
