//! Round trips for serialized polynomial input: file path and stdin.

use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

const POLY: &str = r#"{"vars":2,"terms":[{"exp":[2,0],"coef":"1/1"},{"exp":[0,1],"coef":"-3/2"}]}"#;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stringval"))
}

#[test]
fn poly_value_reads_a_file() {
    let path = std::env::temp_dir().join(format!("stringval-poly-{}.json", std::process::id()));
    std::fs::write(&path, POLY).unwrap();
    let out = bin()
        .args(["--format", "json", "poly", "value", "--input", path.to_str().unwrap()])
        .output()
        .unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    // negated top exponent of x^2 under the lex-highest term order
    assert_eq!(v["data"]["value"], serde_json::json!([-2, 0]));
    assert_eq!(v["data"]["leading_coeff"], "1");
}

#[test]
fn poly_value_reads_stdin() {
    let mut child = bin()
        .args(["--format", "json", "poly", "value", "--input", "-", "--valuation", "lowest"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(POLY.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    // the lowest-term valuation reports the lex-smallest exponent directly
    assert_eq!(v["data"]["value"], serde_json::json!([0, 1]));
    assert_eq!(v["data"]["leading_coeff"], "-3/2");
}

#[test]
fn malformed_polynomial_is_a_usage_error() {
    let path = std::env::temp_dir().join(format!("stringval-bad-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"vars":2,"terms":[{"exp":[2],"coef":"1/1"}]}"#).unwrap();
    let out = bin()
        .args(["poly", "value", "--input", path.to_str().unwrap()])
        .output()
        .unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(out.status.code(), Some(2));
}
