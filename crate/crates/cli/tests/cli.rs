//! End-to-end checks of the `mordell` binary against the bundled dossier.

use std::path::PathBuf;
use std::process::{Command, Output};

fn dossier_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../dossiers/example_sextic.json")
}

fn mordell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mordell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn tau_subcommand() {
    let out = mordell(&["tau", "--g", "2", "--r", "2", "--n", "8"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("0.2071067"), "{text}");
    assert!(text.contains("exact-polygon"), "{text}");
}

#[test]
fn validate_subcommand() {
    let path = dossier_path();
    let out = mordell(&["validate", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("9 components"), "{text}");
    assert!(text.contains("mu_p = 26"), "{text}");
    assert!(text.contains("all invariant checks passed"), "{text}");
}

#[test]
fn phi_subcommand() {
    let path = dossier_path();
    let out = mordell(&["phi", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("phi_p(2) = 4"), "{text}");
    assert!(text.contains("k = 1: self-intersection -2"), "{text}");
    assert!(text.contains("k = 5: self-intersection -4"), "{text}");
}

#[test]
fn bound_subcommand() {
    let path = dossier_path();
    let out = mordell(&["bound", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("M(X) <= 102.68"), "{text}");
    assert!(text.contains("NT bound <= 123.9"), "{text}");
    // bound must not run the search stage
    assert!(!text.contains("search ["), "{text}");
}

#[test]
fn search_subcommand_small_bound() {
    let path = dossier_path();
    let out = mordell(&[
        "search",
        path.to_str().unwrap(),
        "--bound",
        "25",
        "--jobs",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("8 points"), "{text}");
    assert!(text.contains("nontrivial stabilizer (8):"), "{text}");
    assert!(text.contains("[0:1:1]"), "{text}");
}

#[test]
fn report_json_round_trips() {
    let path = dossier_path();
    let out = mordell(&[
        "report",
        path.to_str().unwrap(),
        "--format",
        "json",
        "--jobs",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let value: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    assert_eq!(value["fibres"][0]["phi_p"]["value"], "4");
    assert_eq!(value["verdict"]["kind"], "bounded");
    assert_eq!(
        value["search"]["nontrivial_stabilizer"]
            .as_array()
            .unwrap()
            .len(),
        8
    );
}

#[test]
fn inapplicable_dossier_exits_two() {
    let original = std::fs::read_to_string(dossier_path()).unwrap();
    let hexagonal = original.replace("\"aut_order\": 8", "\"aut_order\": 6");
    let dir = std::env::temp_dir().join("mordell-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hexagonal.json");
    std::fs::write(&path, hexagonal).unwrap();

    let out = mordell(&["bound", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "stdout: {}", stdout_of(&out));
    assert!(stdout_of(&out).contains("height bound does not apply"));
}

#[test]
fn missing_file_exits_one() {
    let out = mordell(&["bound", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(1));
}
