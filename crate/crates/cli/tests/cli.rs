use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name)
}

fn mcflow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcflow")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn error_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stderr).expect("stderr is one JSON object")
}

#[test]
fn validate_fixtures() {
    for name in ["exnet.json", "example1.json", "gluing.json", "cyclenet.json", "chain.json"] {
        let o = mcflow(&["validate", fixture(name).to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name}");
    }
    let o = mcflow(&["validate", fixture("exnet.json").to_str().unwrap()]);
    assert_eq!(stdout(&o), "valid: k=2, 6 nodes, 8 arcs, capacities: polygons\n");
}

#[test]
fn total_capacity_of_exnet_is_the_box() {
    let o = mcflow(&["total-capacity", fixture("exnet.json").to_str().unwrap()]);
    assert_eq!(stdout(&o), "piece,vertex,x1,x2\n0,0,0,0\n0,1,2,0\n0,2,2,2\n0,3,0,2\n");
}

#[test]
fn decide_exit_codes_and_witness() {
    let exnet = fixture("exnet.json");
    let o = mcflow(&["decide", exnet.to_str().unwrap(), "--value", "1,2"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "infeasible\n");
    let o = mcflow(&["decide", exnet.to_str().unwrap(), "--value", "2,1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["feasible"], true);
    assert_eq!(v["witness"]["e"], serde_json::json!([2, 1]));
}

#[test]
fn input_errors_exit_2_with_json() {
    let o = mcflow(&["decide", fixture("exnet.json").to_str().unwrap(), "--value", "1,2,3"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error_json(&o)["error"], "Dimension");

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"k\": 2,\n  \"nodes\": [\"s\", \"t\"],\n  oops}").unwrap();
    let o = mcflow(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let e = error_json(&o);
    assert_eq!(e["error"], "Syntax");
    assert!(e["message"].as_str().unwrap().contains("line 3"));

    let o = mcflow(&["mutual-capacity", fixture("exnet.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error_json(&o)["error"], "NotEnumerable");
}

#[test]
fn budget_exceeded_exits_3() {
    let o = mcflow(&["mutual-capacity", fixture("gluing.json").to_str().unwrap(), "--budget", "3"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(error_json(&o)["error"], "BudgetExceeded");
}

#[test]
fn discretized_mutual_capacity_matches_brute_force() {
    let exnet = fixture("exnet.json");
    let glued = mcflow(&["mutual-capacity", "--discretize", exnet.to_str().unwrap(), "--format", "json"]);
    let brute = mcflow(&["brute-force", "--discretize", exnet.to_str().unwrap(), "--format", "json"]);
    let g: Value = serde_json::from_slice(&glued.stdout).unwrap();
    let b: Value = serde_json::from_slice(&brute.stdout).unwrap();
    assert_eq!(g["values"], b["values"]);
    assert_eq!(g["values"].as_array().unwrap().len(), 7);
    assert!(String::from_utf8_lossy(&glued.stderr).contains("warning"));
}

#[test]
fn cycle_basis_matrix() {
    let o = mcflow(&["cycle-basis", fixture("cyclenet.json").to_str().unwrap(), "--tree", "a2,a3,a4,a5,a6"]);
    let text = stdout(&o);
    assert!(text.starts_with("arc,c1[a1],c2[a7],c3[a8]\n"));
    assert!(text.contains("\na3,1,-1,-1\n"));
}

#[test]
fn ratio_max_writes_witness() {
    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("w.json");
    let o = mcflow(&[
        "ratio-max",
        fixture("gluing.json").to_str().unwrap(),
        "--ratio",
        "1,1",
        "--upper",
        "8",
        "--eps",
        "1/4",
        "--integer",
        "--format",
        "json",
        "--witness",
        witness.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["best"], "2");
    let w: Value = serde_json::from_str(&std::fs::read_to_string(witness).unwrap()).unwrap();
    assert_eq!(w["e"], serde_json::json!([2, 2]));
}

#[test]
fn bench_reports_closed_forms() {
    let o = mcflow(&["bench", "--chain", "--U", "2,4"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("U,first_cut_flows,gluing_semantic,gluing_actual,brute_semantic,brute_actual,feasible_values"));
    assert!(lines.next().unwrap().starts_with("2,6,144,"));
    assert!(lines.next().unwrap().starts_with("4,6,240,"));
}

#[test]
fn outputs_are_deterministic() {
    let exnet = fixture("exnet.json");
    for args in [
        vec!["pairwise-capacity", exnet.to_str().unwrap(), "--format", "json"],
        vec!["cuts", exnet.to_str().unwrap()],
        vec!["plot", exnet.to_str().unwrap(), "--region", "all", "--discretize"],
    ] {
        let a = mcflow(&args);
        let b = mcflow(&args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn plot_writes_svg_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("plot.svg");
    let o = mcflow(&["plot", fixture("exnet.json").to_str().unwrap(), "--region", "pairwise", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(out).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("<polygon"));
}
