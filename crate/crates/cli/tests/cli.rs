use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn graph(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../graphs").join(name).to_string_lossy().into_owned()
}

fn scratch(name: &str, contents: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

fn bspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bspec")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn verdicts(report: &Value) -> Vec<String> {
    report["results"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["kind"] == "certificate")
        .map(|r| r["verdict"]["status"].as_str().unwrap().to_string())
        .collect()
}

fn unit_graph(n: usize, edges: &[(usize, usize)], boundary: &[usize]) -> String {
    let vertices: Vec<String> = (0..n).map(|i| format!(r#"{{"id": {i}, "measure": 1}}"#)).collect();
    let edges: Vec<String> = edges.iter().map(|(u, v)| format!(r#"{{"u": {u}, "v": {v}, "weight": 1}}"#)).collect();
    format!(r#"{{"vertices": [{}], "edges": [{}], "boundary": {boundary:?}}}"#, vertices.join(","), edges.join(","))
}

#[test]
fn validate_accepts_p3() {
    let out = bspec(&["validate", "--graph", &graph("p3.json")]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["results"][0]["kind"], "valid");
    assert_eq!(report["invocation"]["subcommand"], "validate");
    let digest = report["graph_digest"].as_str().unwrap();
    assert_eq!(digest.len(), 64);
    assert!(digest.bytes().all(|b| b.is_ascii_hexdigit()));
}

#[test]
fn validate_reports_the_violated_axiom() {
    let out = bspec(&["validate", "--graph", &graph("disconnected.json")]);
    assert_eq!(code(&out), 4);
    let report = json(&out);
    assert_eq!(report["results"][0]["kind"], "invalid");
    assert_eq!(report["results"][0]["axiom"], "Disconnected");
}

#[test]
fn malformed_and_missing_files_exit_4() {
    let bad = scratch("truncated.json", r#"{"vertices": ["#);
    assert_eq!(code(&bspec(&["validate", "--graph", &bad])), 4);
    assert_eq!(code(&bspec(&["spectrum", "--graph", &bad])), 4);
    assert_eq!(code(&bspec(&["spectrum", "--graph", "/nonexistent/graph.json"])), 4);
    assert_eq!(code(&bspec(&["compare", "--graph", &graph("disconnected.json")])), 4);
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(code(&bspec(&[])), 1);
    assert_eq!(code(&bspec(&["frobnicate"])), 1);
    assert_eq!(code(&bspec(&["compare", "--graph", &graph("k22.json"), "--tol", "-1"])), 1);
    assert_eq!(code(&bspec(&["compare", "--graph", &graph("k22.json"), "--theorems", "nope"])), 1);
    assert_eq!(code(&bspec(&["curvature", "--graph", &graph("k22.json"), "--kind", "be", "--n", "1"])), 1);
}

#[test]
fn help_lists_subcommands_and_theorems() {
    let out = bspec(&["--help"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    for sub in ["validate", "spectrum", "compare", "certify", "curvature", "bounds", "random-audit", "dump-operator"] {
        assert!(text.contains(sub), "{sub} missing from help");
    }
    for sub in ["compare", "certify", "bounds"] {
        let text = String::from_utf8(bspec(&[sub, "--help"]).stdout).unwrap();
        for theorem in ["neu-lap", "diri-interior", "neu-interior", "diri-neu", "lap-diri", "fiedler", "friedman"] {
            assert!(text.contains(theorem), "{theorem} missing from {sub} help");
        }
    }
}

#[test]
fn compare_k22_all_five_hold() {
    let out = bspec(&["compare", "--graph", &graph("k22.json"), "--theorems", "all", "--tol", "1e-9"]);
    assert_eq!(code(&out), 0);
    assert_eq!(verdicts(&json(&out)), vec!["Holds"; 5]);
}

#[test]
fn compare_selected_theorems() {
    let out = bspec(&["compare", "--graph", &graph("path6.json"), "--theorems", "neu-lap,fiedler,friedman"]);
    assert_eq!(code(&out), 0);
    assert_eq!(verdicts(&json(&out)), vec!["Holds"; 4]);

    let out = bspec(&["compare", "--graph", &graph("weighted.json"), "--theorems", "fiedler"]);
    assert_eq!(code(&out), 3);
    assert_eq!(verdicts(&json(&out)), vec!["NotApplicable"]);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["compare", "--graph", &graph("weighted.json")],
        vec!["spectrum", "--graph", &graph("weighted.json")],
        vec!["random-audit", "--n", "12", "--max-v", "8", "--seed", "7"],
    ] {
        let (a, b) = (bspec(&args), bspec(&args));
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn table_output() {
    let out = bspec(&["compare", "--graph", &graph("k22.json"), "--table"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("lap-diri: holds"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}

#[test]
fn certify_exit_codes() {
    let k22 = graph("k22.json");
    assert_eq!(code(&bspec(&["certify", "--graph", &k22, "--theorem", "corollary-unit"])), 0);
    assert_eq!(code(&bspec(&["certify", "--graph", &k22, "--theorem", "neu-lap"])), 0);
    // K(3,2) with the pair on the boundary: the interior is too large for equality except one index
    let edges: Vec<_> = (0..3).flat_map(|y| (3..5).map(move |x| (y, x))).collect();
    let k32 = scratch("k32.json", &unit_graph(5, &edges, &[3, 4]));
    let out = bspec(&["certify", "--graph", &k32, "--theorem", "corollary-unit"]);
    assert_eq!(code(&out), 2);
    let rigidity = json(&out)["results"].as_array().unwrap().iter().find(|r| r["kind"] == "rigidity").cloned().unwrap();
    assert_eq!(rigidity["conclusion"], false);
    assert_eq!(code(&bspec(&["certify", "--graph", &graph("weighted.json"), "--theorem", "corollary-unit"])), 3);
}

#[test]
fn bounds_on_unit_and_weighted_graphs() {
    let out = bspec(&["bounds", "--graph", &graph("path6.json"), "--family", "fiedler"]);
    assert_eq!(code(&out), 0);
    assert_eq!(verdicts(&json(&out)), vec!["Holds"]);
    assert_eq!(code(&bspec(&["bounds", "--graph", &graph("weighted.json")])), 3);
}

#[test]
fn curvature_reports_every_location() {
    let out = bspec(&["curvature", "--graph", &graph("path6.json"), "--kind", "ollivier", "--json"]);
    let report = json(&out);
    let curvature = &report["results"][0];
    assert_eq!(curvature["kind"], "curvature");
    assert_eq!(curvature["result"]["per_location"].as_array().unwrap().len(), 5);

    let out = bspec(&["curvature", "--graph", &graph("path6.json"), "--kind", "be", "--n", "inf", "--on", "interior"]);
    let report = json(&out);
    assert_eq!(report["results"][0]["on"], "interior");
    assert_eq!(report["results"][0]["result"]["per_location"].as_array().unwrap().len(), 5);

    // the interior of K22 is two isolated vertices, where Γ vanishes
    let out = bspec(&["curvature", "--graph", &graph("k22.json"), "--kind", "be", "--on", "interior"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn dump_operator_is_row_major() {
    let out = bspec(&["dump-operator", "--graph", &graph("p3.json"), "--operator", "full"]);
    assert_eq!(code(&out), 0);
    let op = &json(&out)["results"][0];
    let rows: Vec<Vec<f64>> = serde_json::from_value(op["rows"].clone()).unwrap();
    assert_eq!(rows, vec![vec![1.0, -1.0, 0.0], vec![-1.0, 2.0, -1.0], vec![0.0, -1.0, 1.0]]);

    let out = bspec(&["dump-operator", "--graph", &graph("p3.json"), "--operator", "dirichlet"]);
    let op = &json(&out)["results"][0];
    assert_eq!(op["order"], serde_json::json!([1]));
    assert_eq!(op["rows"], serde_json::json!([[2.0]]));
}

#[test]
fn random_audit_default_corpus_has_no_failures() {
    let out = bspec(&["random-audit", "--n", "200", "--max-v", "12", "--seed", "42"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["seed"], 42);
    let audit = &report["results"][0];
    assert_eq!(audit["kind"], "audit");
    assert_eq!(audit["failure_count"], 0);
    assert_eq!(audit["instances"], 200);
}
