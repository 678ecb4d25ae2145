use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbitflag")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn classify_su11_lines() {
    let v = json(&["classify", "--form", "su:1,1", "--flag", "1", "--dim", "2"]);
    assert_eq!(v["count"], 3);
    assert_eq!(v["open_count"], 2);
    let recs = v["records"].as_array().unwrap();
    assert_eq!(recs.iter().filter(|r| r["is_closed"] == true).count(), 1);
    assert_eq!(v["closed_index"], 0);
    assert_eq!(recs[0]["real_dim"], 1);
}

#[test]
fn classify_slr3_lines() {
    let v = json(&["classify", "--form", "slr:3", "--flag", "1"]);
    assert_eq!(v["count"], 2);
    assert_eq!(v["open_count"], 1);
}

#[test]
fn even_slr_is_rejected() {
    let out = run(&["classify", "--form", "slr:4", "--flag", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn dim_must_match_form() {
    assert_eq!(run(&["classify", "--form", "su:1,1", "--flag", "1", "--dim", "3"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--form", "su:1,1", "--flag", "2"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--form", "sl:3", "--flag", "1"]).status.code(), Some(2));
}

#[test]
fn resource_limit_exit_code() {
    let out = Command::new(env!("CARGO_BIN_EXE_orbitflag"))
        .args(["classify", "--form", "su:2,2", "--flag", "1,2,3"])
        .env("ORBITFLAG_MAX_CANDIDATES", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn poset_dot_graphs() {
    let out = run(&["poset", "--form", "su:1,1", "--flag", "1"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 2);
    assert_eq!(dot.matches("label=\"(").count(), 3);

    let v = json(&["poset", "--form", "su:2,2", "--flag", "2", "--format", "json"]);
    assert_eq!(v["count"], 6);
    assert_eq!(v["poset"]["minimal"].as_array().unwrap().len(), 1);
    assert_eq!(v["poset"]["maximal"].as_array().unwrap().len(), v["open_count"].as_u64().unwrap() as usize);
}

#[test]
fn count_matches_classify() {
    let v = json(&["count", "--form", "su:2,2", "--flag", "2"]);
    assert_eq!(v["count"], 6);
    let out = run(&["count", "--form", "slh:6", "--flag", "2,4", "--format", "text"]);
    let c: usize = String::from_utf8(out.stdout).unwrap().trim().parse().unwrap();
    let v = json(&["classify", "--form", "slh:6", "--flag", "2,4", "--no-dims"]);
    assert_eq!(v["count"], c);
}

#[test]
fn stabilize_su_inf_lines() {
    let v = json(&["stabilize", "--family", "su_inf", "--descriptor", "dims=1", "--levels", "2..8"]);
    assert_eq!(v["counts"], serde_json::json!([3, 3, 3, 3]));
    assert_eq!(v["injectivity"]["injective"], true);
    assert_eq!(v["verdict"]["finiteness"], "finite");
    assert_eq!(v["verdict"]["stabilization_level"], 2);
}

#[test]
fn stabilize_slr_middle_grows() {
    let v = json(&["stabilize", "--family", "slr", "--descriptor", "middle=1/2", "--levels", "3..11"]);
    assert_eq!(v["counts"], serde_json::json!([2, 3, 4, 5, 6]));
    assert_eq!(v["verdict"]["finiteness"], "infinite");
    assert_eq!(v["verdict"]["growth_consistent"], true);
    assert_eq!(v["verdict"]["has_open"], false);
    assert_eq!(v["verdict"]["has_closed"], true);
}

#[test]
fn stabilize_slh_planes() {
    let v = json(&["stabilize", "--family", "slh", "--descriptor", "dims=2", "--levels", "4..10"]);
    assert_eq!(v["counts"], serde_json::json!([2, 2, 2, 2]));
    assert_eq!(v["injectivity"]["injective"], true);
}

#[test]
fn stabilize_rejects_bad_input() {
    assert_eq!(run(&["stabilize", "--family", "su_inf", "--descriptor", "dims=1", "--levels", "2-8"]).status.code(), Some(2));
    assert_eq!(run(&["stabilize", "--family", "so", "--descriptor", "dims=1", "--levels", "2..8"]).status.code(), Some(2));
    assert_eq!(run(&["stabilize", "--family", "slr", "--descriptor", "dims=4", "--levels", "3..3"]).status.code(), Some(2));
}

#[test]
fn verify_counts_passes() {
    let v = json(&["verify", "counts", "--max-n", "6"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"][0]["suite"], "counts");
    assert!(run(&["verify", "nonsense"]).status.code() == Some(2));
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["verify", "invariance", "--seed", "7", "--trials", "3", "--max-n", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["classify", "--form", "su:2,1", "--flag", "1,2"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trace.json");
    let args = ["stabilize", "--family", "su_p:1", "--descriptor", "dims=1", "--levels", "2..6"];
    let out = run(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), run(&args).stdout);
}
