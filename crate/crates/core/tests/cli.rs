use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lattice-cubes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("one JSON object")
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

#[test]
fn construct_output_file_verifies() {
    let dir = tempfile::tempdir().unwrap();
    for (m, d, n) in [("13", "2", "2"), ("7", "4", "4"), ("2", "5", "6"), ("3", "1", "3"), ("0", "3", "5")] {
        let file = dir.path().join(format!("w-{m}-{d}-{n}.txt"));
        let out = run(&["construct", m, d, n, "-o", path_str(&file)]);
        assert_eq!(out.status.code(), Some(0), "construct {m} {d} {n}");
        let out = run(&["verify", path_str(&file)]);
        assert_eq!(out.status.code(), Some(0), "verify {m} {d} {n}");
        let v = json(&out);
        assert_eq!(v["valid"], true);
        assert_eq!(v["m"], m);
    }
}

#[test]
fn failed_construct_writes_no_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("none.txt");
    let out = run(&["construct", "3", "2", "3", "-o", path_str(&file)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!file.exists());
}

#[test]
fn verify_reports_parse_position() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    std::fs::write(&file, "2 2 13\n3 x\n-2 3\n").unwrap();
    let out = run(&["verify", path_str(&file)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");

    let out = run(&["verify", path_str(&dir.path().join("missing.txt"))]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn extend_completes_partial_frame() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("partial.txt");
    std::fs::write(&file, "2 3 9\n1 2 2\n2 1 -2\n").unwrap();
    let v = json(&run(&["extend", path_str(&file)]));
    assert_eq!(v["basis"][2], serde_json::json!(["-2", "2", "-1"]));
    assert_eq!(v["target_form"], serde_json::json!(["9", "9", "9"]));
    assert_eq!(v["equivalence_verified"], true);

    std::fs::write(&file, "2 3 9\n1 2 2\n1 2 2\n").unwrap();
    assert_eq!(run(&["extend", path_str(&file)]).status.code(), Some(2));
}

#[test]
fn decompose_and_oracle_exit_codes() {
    let out = run(&["decompose", "7", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["representable"], false);
    assert_eq!(run(&["decompose", "7", "0"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "-7", "3"]).status.code(), Some(2));

    let v = json(&run(&["oracle", "2", "2", "3"]));
    assert_eq!(v["witness"]["rows"], serde_json::json!([["0", "1", "1"], ["0", "1", "-1"]]));
    // Beyond the default norm budget.
    assert_eq!(run(&["oracle", "61", "1", "1"]).status.code(), Some(2));
    assert_eq!(run(&["--max-norm", "61", "oracle", "61", "1", "2"]).status.code(), Some(0));
}

#[test]
fn census_is_json_lines() {
    let out = run(&["census", "1", "2", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 11);
    let frames: Vec<&str> = rows.iter().map(|r| r["frames"].as_str().unwrap()).collect();
    assert_eq!(frames, ["1", "2", "2", "0", "2", "4", "0", "0", "2", "2", "4"]);
    for (m, r) in rows.iter().enumerate() {
        assert_eq!(r["m"], m.to_string());
        assert_eq!(r["member"], r["frames"] != "0");
    }
}

#[test]
fn witt_flip_branch_and_preconditions() {
    let v = json(&run(&["witt", "1", "1", "0", "1", "-1", "0"]));
    assert_eq!(v["sign_flipped"], true);
    assert_eq!(v["check"], "1^2+(-1)^2=2");
    assert_eq!(run(&["witt", "1", "1", "1", "1", "-1", "0"]).status.code(), Some(2));
    assert_eq!(run(&["witt", "1", "2", "3"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_across_threads() {
    for args in [&["oracle", "25", "3", "4"][..], &["census", "2", "3", "12"], &["construct", "77", "7", "9"]] {
        let first = run(args).stdout;
        for threads in ["1", "4"] {
            let mut with = vec!["--threads", threads];
            with.extend_from_slice(args);
            assert_eq!(run(&with).stdout, first, "{args:?} --threads {threads}");
        }
    }
}

#[test]
fn pretty_output_parses_to_same_value() {
    let compact = json(&run(&["construct", "13", "2", "2"]));
    let pretty = json(&run(&["--pretty", "construct", "13", "2", "2"]));
    assert_eq!(compact, pretty);
}

#[test]
fn numbers_are_strings() {
    let v = json(&run(&["construct", "100000000000000000000000000001", "1", "4"]));
    assert_eq!(v["verified"], true);
    assert!(v["witness"]["rows"][0].as_array().unwrap().iter().all(Value::is_string));
}
