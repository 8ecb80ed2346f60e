use std::process::{Command, Output};

use serde_json::Value;

fn pastro(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pastro"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

const REFERENCE: [&str; 6] = ["--q", "1/2", "--a", "3", "--b", "1/5"];

fn with_reference<'a>(cmd: &'a str, extra: &[&'a str]) -> Vec<&'a str> {
    let mut args = vec![cmd];
    args.extend(REFERENCE);
    args.extend(extra);
    args
}

#[test]
fn verify_reference_all_pass() {
    let out = pastro(&with_reference("verify", &["--nmax", "8"]));
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
}

#[test]
fn text_lines_carry_anchor() {
    let out = pastro(&with_reference("verify", &["--nmax", "2"]));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS gevp n<=2 [GEVP XY]"), "{text}");
}

#[test]
fn q_one_is_error_exit_two() {
    let out = pastro(&[
        "verify", "--q", "1", "--a", "3", "--b", "1/5", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let report = json(&out);
    assert_eq!(report["checks"][0]["status"], "ERROR");
    assert!(report["checks"][0]["witness"]
        .as_str()
        .unwrap()
        .contains("generic"));
}

#[test]
fn resonant_parameters_exit_two() {
    // b q^2 = 1
    let out = pastro(&[
        "verify", "--q", "1/2", "--a", "3", "--b", "4", "--nmax", "4",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("ERROR parameters"), "{text}");
    assert!(text.contains("1 - b q^2"), "{text}");
}

#[test]
fn malformed_rational_is_rejected() {
    for bad in ["0.5", "1/0", "1/x", ""] {
        let out = pastro(&["verify", "--q", bad, "--a", "3", "--b", "1/5"]);
        assert_eq!(out.status.code(), Some(2), "{bad}");
    }
}

#[test]
fn negative_rationals_parse() {
    let out = pastro(&[
        "algebra", "--q", "-3/4", "--a", "2/5", "--b", "-7/3", "--mu", "-5/2",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn biorth_single_point() {
    let out = pastro(&[
        "biorth", "--q", "1/2", "--b", "1/5", "--N", "1", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["data"]["gram"], serde_json::json!([["1"]]));
    assert_eq!(report["data"]["weights"], serde_json::json!(["1"]));
}

#[test]
fn biorth_zero_points_is_error() {
    let out = pastro(&["biorth", "--q", "1/2", "--b", "1/5", "--N", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_json_schema() {
    let out = pastro(&with_reference(
        "table",
        &["--nmax", "2", "--format", "json"],
    ));
    assert_eq!(out.status.code(), Some(0));
    let data = &json(&out)["data"];
    assert_eq!(data["polynomials"][1]["degree"], 1);
    assert_eq!(data["polynomials"][1]["coefficients"]["0"], "-7/12");
    assert_eq!(data["h"][1], "5/26");
    assert_eq!(data["partners"][0]["coefficients"]["0"], "1");
}

#[test]
fn json_keys_are_sorted() {
    let out = pastro(&with_reference("algebra", &["--format", "json"]));
    let raw = String::from_utf8(out.stdout).unwrap();
    let check = raw.find(r#"{"name":"#).unwrap();
    let keys = [
        "\"name\"",
        "\"paper_anchor\"",
        "\"params\"",
        "\"status\"",
        "\"witness\"",
    ];
    let pos: Vec<usize> = keys
        .iter()
        .map(|k| check + raw[check..].find(k).unwrap())
        .collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{raw}");
}

#[test]
fn sweep_reports_points_and_skips() {
    let out = pastro(&["sweep", "--seed", "1", "--nmax", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let data = &json(&out)["data"];
    assert_eq!(data["points"].as_array().unwrap().len(), 5);
    for skip in data["skipped"].as_array().unwrap() {
        assert!(!skip["reason"].as_str().unwrap().is_empty());
    }
}

#[test]
fn sweep_seeds_differ() {
    let a = pastro(&["sweep", "--seed", "1", "--nmax", "3", "--format", "json"]);
    let b = pastro(&["sweep", "--seed", "2", "--nmax", "3", "--format", "json"]);
    assert_ne!(json(&a)["data"]["points"], json(&b)["data"]["points"]);
}
