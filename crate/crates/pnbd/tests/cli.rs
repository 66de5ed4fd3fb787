//! End-to-end checks of the `pnbd` binary: outputs and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

const SIERPINSKI: &str = r#"{
    "context": "finset",
    "objects": {"X": {"points": ["a", "b"]}, "P": {"points": ["p"]}},
    "systems": {
        "up": {"object": "X", "kind": "discrete"},
        "s": {"object": "X", "generators": {"": "", "a": "a", "b": "ab", "ab": "ab"}},
        "pt": {"object": "P", "kind": "discrete"}
    },
    "morphisms": {"i": {"dom": "P", "cod": "X", "map": {"p": "b"}}}
}"#;

const Z4: &str = r#"{
    "context": "fingrp",
    "objects": {"G": {"group": "Z4"}},
    "systems": {"up": {"object": "G", "kind": "discrete"}}
}"#;

fn write(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn pnbd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pnbd")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn validate_accepts_a_well_formed_file() {
    let f = write("sierpinski.json", SIERPINSKI);
    let o = pnbd(&["validate", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn malformed_files_exit_with_two() {
    let f = write("broken.json", &SIERPINSKI.replace(r#""b": "ab""#, r#""b": """#));
    let o = pnbd(&["validate", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("systems.s"));
}

#[test]
fn closure_of_the_top_in_z4() {
    let f = write("z4.json", Z4);
    let o = pnbd(&["--json", "closure", f.to_str().unwrap(), "--system", "up", "--subset", "{0,1,2,3}", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j["closure"], "{0,2}");
    assert_eq!(j["agrees"], true);
}

#[test]
fn enumerate_counts_two_point_systems() {
    let all = pnbd(&["--json", "enumerate", "--points", "2", "--count-only"]);
    let nbd = pnbd(&["--json", "enumerate", "--points", "2", "--kind", "nbd", "--count-only"]);
    let count = |o: &Output| serde_json::from_str::<serde_json::Value>(&stdout(o)).unwrap()["count"].clone();
    assert_eq!(count(&all), 9);
    assert_eq!(count(&nbd), 4);
}

#[test]
fn unknown_law_is_a_usage_error() {
    let o = pnbd(&["laws", "--law", "XX99"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("XX99"));
}

#[test]
fn passing_law_exits_zero_under_expect_pass() {
    let f = write("sierpinski-laws.json", SIERPINSKI);
    let o = pnbd(&["--expect-pass", "laws", f.to_str().unwrap(), "--law", "CL1", "PN1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn search_reports_exhaustion() {
    let o = pnbd(&["--expect-pass", "search", "--target", "hausdorff-nontrivial", "--max-points", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no counterexample"));
}

#[test]
fn classify_mor_reports_a_verdict() {
    let f = write("sierpinski-mor.json", SIERPINSKI);
    let o = pnbd(&["--json", "classify-mor", f.to_str().unwrap(), "--mor", "i", "--src", "pt", "--dst", "s"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let j: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(j.is_object());
}
