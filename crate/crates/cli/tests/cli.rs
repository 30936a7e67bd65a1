use std::io::Write;
use std::process::{Command, Output};

const MANIFEST: &str = r#"{
  "groups": {
    "C2": {"cyclic": 2},
    "C4": {"cyclic": 4},
    "C4xC2": {"product": ["C4", "C2"]},
    "A5": {"alternating": 5}
  },
  "shifts": {
    "full": {"alphabet": "C2", "width": 1, "generators": [["1", "0"], ["0", "1"]]},
    "diag": {"alphabet": "C2", "width": 1, "generators": [["1", "1"]]},
    "c4": {"alphabet": "C4", "width": 0, "generators": [["1"]]},
    "a5": {"alphabet": "A5", "width": 0, "generators": [["(0 1 2)"], ["(0 1 2 3 4)"]]}
  },
  "tasks": [
    {"op": "analyze", "shift": "full"},
    {"op": "decompose", "shift": "c4"},
    {"op": "invariants", "shift": "diag", "period_bound": 3}
  ]
}"#;

fn manifest(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn gshift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gshift"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_text_and_json() {
    let m = manifest(MANIFEST);
    let path = m.path().to_str().unwrap();
    let o = gshift(&["analyze", path, "full", "--period-bound", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("limit_degree: 2"));
    assert!(text.contains("periodic_counts: [2, 4, 8]"));

    let o = gshift(&["analyze", path, "diag", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["command"], "analyze");
    assert_eq!(v["shift"], "diag");
    assert_eq!(v["report"]["sigma_components"], 2);
    assert_eq!(v["report"]["periodic_counts"].as_array().unwrap().len(), 8);
}

#[test]
fn decompose_with_certificates() {
    let m = manifest(MANIFEST);
    let path = m.path().to_str().unwrap();
    let o = gshift(&["decompose", path, "c4", "--certificates", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let r = &v["report"];
    assert_eq!(r["chain_length"], 3);
    assert_eq!(r["verified"], true);
    assert_eq!(r["certificates"].as_array().unwrap().len(), 2);

    let o = gshift(&["decompose", path, "a5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("factors: [A5]"));
}

#[test]
fn star_and_invariants() {
    let m = manifest(MANIFEST);
    let path = m.path().to_str().unwrap();
    let o = gshift(&["star", path, "diag"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("is_trivial: false"));
    let o = gshift(&["invariants", path, "c4", "--period-bound", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("f: [1, 1]"));
}

#[test]
fn dot_to_file() {
    let m = manifest(MANIFEST);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("full.dot");
    let o = gshift(&[
        "dot",
        m.path().to_str().unwrap(),
        "full",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let dot = std::fs::read_to_string(out).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 4);
    assert_eq!(dot.matches("lightblue").count(), 1);
}

#[test]
fn run_executes_tasks_in_order() {
    let m = manifest(MANIFEST);
    let o = gshift(&["run", m.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let headers: Vec<&str> = text.lines().filter(|l| l.starts_with("== ")).collect();
    assert_eq!(
        headers,
        ["== analyze full", "== decompose c4", "== invariants diag"]
    );
    assert!(text.contains("f: [2, 2, 2]"));
}

#[test]
fn exit_codes_per_error_class() {
    let bad = manifest("{\n  \"groups\": {\"C2\": {\"cyclic\": 2}},,\n}");
    let o = gshift(&["analyze", bad.path().to_str().unwrap(), "x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let m = manifest(MANIFEST);
    let path = m.path().to_str().unwrap();
    assert_eq!(gshift(&["analyze", path, "missing"]).status.code(), Some(3));
    assert_eq!(
        gshift(&["decompose", path, "a5", "--budget", "100"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        gshift(&["analyze", "/nonexistent/manifest.json", "full"])
            .status
            .code(),
        Some(1)
    );
}
