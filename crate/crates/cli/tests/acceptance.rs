//! Acceptance gate for the command-line surface: seeded determinism plus
//! the frozen interface examples (exit codes, counts, artifact files).

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stringval"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn conclude(criterion: &str, ok: bool) {
    println!("criterion {criterion}: {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {criterion} failed");
}

// ---------------------------------------------------------------------------
// 9. Seeded determinism
// ---------------------------------------------------------------------------

#[test]
fn criterion_9_same_seed_reports_are_byte_identical() {
    let seeded: [&[&str]; 3] = [
        &["--format", "json", "poly", "axioms", "--random", "200", "--seed", "42"],
        &[
            "--format", "json", "verify-main-theorem", "--family", "A", "--rank", "2",
            "--lambda", "1,1", "--random", "10", "--seed", "7",
        ],
        &[
            "--format", "json", "nok", "string-polytope", "--family", "A", "--rank", "2",
            "--word", "1,2,1", "--lambda", "1,1",
        ],
    ];
    let mut ok = true;
    for args in seeded {
        let first = run(args);
        let second = run(args);
        ok &= exit_code(&first) == 0;
        ok &= first.stdout == second.stdout;
    }
    conclude("9 (same seed gives byte-identical reports)", ok);
}

// ---------------------------------------------------------------------------
// Frozen interface examples
// ---------------------------------------------------------------------------

#[test]
fn verify_example_lists_four_matched_pairs() {
    let out = run(&[
        "--format", "json", "verify-main-theorem", "--family", "A", "--rank", "1",
        "--lambda", "3",
    ]);
    assert_eq!(exit_code(&out), 0);
    let v = json(&out);
    assert_eq!(v["ok"], Value::Bool(true));
    assert_eq!(v["summary"]["matched"], "4");
    let pairs = v["data"]["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 4);
    assert!(pairs.iter().all(|p| p["agree"] == Value::Bool(true)));
}

#[test]
fn string_polytope_example_counts_eight_points() {
    let out = run(&[
        "--format", "json", "nok", "string-polytope", "--family", "A", "--rank", "2",
        "--word", "1,2,1", "--lambda", "1,1",
    ]);
    assert_eq!(exit_code(&out), 0);
    let v = json(&out);
    assert_eq!(v["data"]["lattice_count"], 8);
    assert_eq!(v["data"]["weyl_dimension"], 8);
    // machine output carries rationals as "p/q" strings, never floats
    let facets = v["data"]["polytope"]["facets"].as_array().unwrap();
    assert!(!facets.is_empty());
    assert!(facets.iter().all(|f| f["rhs"].is_string()));
}

#[test]
fn malformed_word_is_a_usage_error() {
    let out = run(&[
        "strings", "value-set", "--family", "A", "--rank", "2", "--word", "1,9",
        "--lambda", "1,1",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid word"));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = run(&["roots", "--family", "A", "--rank", "2", "--no-such-flag"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn dropped_generator_fails_the_assertion_gate() {
    let out = run(&[
        "--format", "json", "sagbi", "check", "--family", "A", "--rank", "1",
        "--lambda", "1", "--drop-generator", "1",
    ]);
    assert_eq!(exit_code(&out), 1);
    let v = json(&out);
    assert_eq!(v["ok"], Value::Bool(false));
}

#[test]
fn unstabilized_hull_fails_the_assertion_gate() {
    // the symplectic body of omega1 has a half-integral vertex, so the
    // default cap cannot certify it; raising the cap succeeds
    let shallow = run(&[
        "nok", "string-polytope", "--family", "C", "--rank", "2", "--word", "1,2,1,2",
        "--lambda", "1,0",
    ]);
    assert_eq!(exit_code(&shallow), 1);
    assert!(String::from_utf8_lossy(&shallow.stderr).contains("raise the cap"));
    let deep = run(&[
        "--format", "json", "nok", "string-polytope", "--family", "C", "--rank", "2",
        "--word", "1,2,1,2", "--lambda", "1,0", "--level-cap", "3",
    ]);
    assert_eq!(exit_code(&deep), 0);
    assert_eq!(json(&deep)["data"]["lattice_count"], 4);
}

#[test]
fn output_directory_receives_the_json_artifact() {
    let dir = std::env::temp_dir().join(format!("stringval-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_stringval"))
        .args(["module", "--family", "A", "--rank", "2", "--lambda", "1,1"])
        .env("STRINGVAL_OUTDIR", &dir)
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0);
    let artifact = dir.join("module.json");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&artifact).unwrap()).unwrap();
    assert_eq!(v["artifact_version"], "1");
    assert_eq!(v["command"], "module");
    assert_eq!(v["ok"], Value::Bool(true));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn csv_format_renders_the_table() {
    let out = run(&["--format", "csv", "roots", "--family", "A", "--rank", "2"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "simple_root,fundamental_coordinates");
    assert!(text.lines().count() >= 3);
}
