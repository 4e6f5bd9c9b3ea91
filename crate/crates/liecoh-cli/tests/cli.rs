//! End-to-end tests of the `liecoh` binary: exit codes, determinism and
//! the JSON report surface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_liecoh"))
}

fn run(args: &[&str]) -> Output {
    bin()
        .args(args)
        .env_remove("LIECOH_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn heis2_file(dir: &tempfile::TempDir) -> PathBuf {
    let path = dir.path().join("heis2.lie");
    let out = run(&["heisenberg", "--m", "2", "--emit", path.to_str().unwrap()]);
    assert!(out.status.success());
    path
}

#[test]
fn heisenberg_emits_canonical_file() {
    let out = run(&["heisenberg", "--m", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("field q"));
    assert!(text.contains("basis x x1 x2 y1 y2"));
    assert!(text.contains("bracket x1 y1 = 1 x"));
    assert!(text.contains("span x"));
    assert!(text.contains("module trivial dim 1"));

    // deterministic output
    let again = run(&["heisenberg", "--m", "2"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn validate_and_cohomology() {
    let dir = tempfile::tempdir().unwrap();
    let path = heis2_file(&dir);
    let path = path.to_str().unwrap();

    let out = run(&["validate", path]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("algebra: dim 5 ok"));

    let out = run(&["cohomology", path, "--degree", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("dim H^1 = 4"));

    let out = run(&["cohomology", path, "--degree", "2"]);
    assert!(stdout(&out).contains("dim H^2 = 5"));

    // unsupported degree is a usage error
    let out = run(&["cohomology", path, "--degree", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sequence_json_is_exact_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = heis2_file(&dir);
    let path = path.to_str().unwrap();

    let out = run(&["sequence", path, "--format", "json"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dims"], serde_json::json!([4, 4, 1, 6, 5, 4, 4]));
    assert_eq!(v["exact_at"], serde_json::json!([true, true, true, true, true]));
    assert_eq!(v["infl1_injective"], serde_json::json!(true));
    assert_eq!(v["all_exact"], serde_json::json!(true));
    assert!(v["maps"]["tr"].is_array());
    assert!(v["witnesses"]["f_alpha"]["blocks"].is_array());

    let again = run(&["sequence", path, "--format", "json"]);
    assert_eq!(out.stdout, again.stdout);

    // text mode mentions each node verdict
    let out = run(&["sequence", path]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches(": yes").count(), 7, "{text}");
}

#[test]
fn heisenberg_over_a_prime_field() {
    let out = run(&["heisenberg", "--m", "1", "--field", "fp:5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("field fp 5"));
    assert!(text.contains("bracket x1 y1 = 1 x"));
}

#[test]
fn heisenberg_m3_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("heis3.lie");
    let out = run(&["heisenberg", "--m", "3", "--emit", path.to_str().unwrap()]);
    assert!(out.status.success());
    let out = run(&["sequence", path.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dims"], serde_json::json!([6, 6, 1, 15, 14, 6, 20]));
    assert_eq!(v["all_exact"], serde_json::json!(true));
}

#[test]
fn format_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = heis2_file(&dir);
    let out = bin()
        .args(["validate", path.to_str().unwrap()])
        .env("LIECOH_FORMAT", "json")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["command"], serde_json::json!("validate"));
}

#[test]
fn field_override_runs_mod_p() {
    let dir = tempfile::tempdir().unwrap();
    let path = heis2_file(&dir);
    let out = run(&[
        "sequence",
        path.to_str().unwrap(),
        "--field",
        "fp:5",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["all_exact"], serde_json::json!(true));
    assert_eq!(v["problem"]["field"], serde_json::json!("fp:5"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();

    // parse error: exit 2
    let bad = dir.path().join("bad.lie");
    std::fs::write(&bad, "field q\nalgebra g\n  basis a b\n  bracket a b = 1 z\nmodule m dim 1\n").unwrap();
    let out = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown label"));

    // validation failure: exit 1
    let invalid = dir.path().join("invalid.lie");
    std::fs::write(
        &invalid,
        "field q\nalgebra g\n  basis a b c\n  bracket a b = 1 c\n  bracket a c = 1 a\nmodule m dim 1\n",
    )
    .unwrap();
    let out = run(&["validate", invalid.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Jacobi"));

    // sequence without an ideal section: exit 1
    let no_ideal = dir.path().join("no_ideal.lie");
    std::fs::write(&no_ideal, "field q\nalgebra g\n  basis a b\nmodule m dim 1\n").unwrap();
    let out = run(&["sequence", no_ideal.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // missing file: exit 2
    let out = run(&["validate", "/nonexistent/path.lie"]);
    assert_eq!(out.status.code(), Some(2));

    // bad field flag: exit 2
    let f = heis2_file(&dir);
    let out = run(&["validate", f.to_str().unwrap(), "--field", "fp:6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn emitted_file_reparses_to_the_same_canonical_form() {
    let dir = tempfile::tempdir().unwrap();
    let path = heis2_file(&dir);
    let text = std::fs::read_to_string(&path).unwrap();

    // hand-written variant with comments and reordered whitespace
    let hand = "\
# same data, different layout
field q
algebra heisenberg2
  basis x x1 x2 y1 y2
  bracket x1 y1 = 1 x   # central bracket
  bracket x2 y2 = 1 x
ideal center
  span 1 x
module trivial dim 1
";
    let hand_path = dir.path().join("hand.lie");
    std::fs::write(&hand_path, hand).unwrap();
    let out = run(&["sequence", hand_path.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let canonical = run(&["sequence", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.stdout, canonical.stdout);
    assert!(text.contains("span x"));
}
