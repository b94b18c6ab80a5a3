//! End-to-end tests of the command-line interface: payload shapes, exit
//! codes (0 ok, 1 verification failure, 2 usage, 3 domain error), output
//! determinism, and file emission.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tangency"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn generates_the_small_realizable_census() {
    let v = stdout_json(&["gen", "--poset", "bullet", "--n", "3", "--format", "json"]);
    assert_eq!(v["count"], 11);
    assert_eq!(v["elements"].as_array().unwrap().len(), 11);
}

#[test]
fn generates_the_degree_universe() {
    let v = stdout_json(&[
        "gen", "--poset", "omega", "--d", "4", "--mode", "upto", "--format", "json",
    ]);
    assert_eq!(v["count"], 11);
    let v = stdout_json(&[
        "gen", "--poset", "omega", "--d", "4", "--mode", "exact", "--format", "json",
    ]);
    assert_eq!(v["count"], 8);
}

#[test]
fn reports_cell_counts() {
    let v = stdout_json(&["cells", "--d", "4", "--ambient", "balanced", "--format", "json"]);
    assert_eq!(v["counts"], serde_json::json!([1, 3, 4, 3]));
    assert_eq!(v["d"], 4);
}

#[test]
fn answers_order_queries() {
    let v = stdout_json(&["order", "--kind", "omega", "2", "4", "--format", "json"]);
    assert_eq!(v["related"], true);
    let v = stdout_json(&["order", "--kind", "omega", "1,2,1", "1,1", "--format", "json"]);
    assert_eq!(v["related"], false);
    let v = stdout_json(&["order", "--kind", "bullet", "3,1", "1,4,1", "--format", "json"]);
    assert_eq!(v["related"], true);
}

#[test]
fn enumerates_morphisms() {
    let v = stdout_json(&["mor", "--kind", "omega", "1,1", "1,2,1", "--format", "json"]);
    assert_eq!(v["count"], 1);
}

#[test]
fn classifies_rational_polynomials() {
    let v = stdout_json(&["classify", "--poly", "-2,5,-4,1", "--format", "json"]);
    assert_eq!(v["type"], serde_json::json!([2, 1]));
    // odd degree: the negativity set is unbounded, so no component list
    assert!(v["components"].is_null());

    let v = stdout_json(&["classify", "--poly", "4,0,-5,0,1", "--format", "json"]);
    assert_eq!(v["type"], serde_json::json!([1, 1, 1, 1]));
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
}

#[test]
fn verifies_and_reports_exit_codes() {
    let out = run(&["verify", "--suite", "census"]);
    assert_eq!(out.status.code(), Some(0));

    // unknown suite name is a usage error
    let out = run(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));

    // malformed composition text is a usage error
    let out = run(&["order", "--kind", "omega", "1,x", "2"]);
    assert_eq!(out.status.code(), Some(2));

    // a structurally valid but non-comparable ramification query is a
    // domain error
    let out = run(&["ram", "--omega", "2,2", "--target", "2"]);
    assert_eq!(out.status.code(), Some(3));

    // ambiguous marker transport is a domain error
    let out = run(&["markers", "--omega", "1,1", "--marker", "1", "--target", "2,2"]);
    assert_eq!(out.status.code(), Some(3));

    // local models exist only over realizable patterns
    let out = run(&["tmodel", "--omega", "3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn family_inconsistency_is_a_verification_failure() {
    // consistent family: ±t merging at the origin
    let out = run(&["family", "--family", "0,0,-1;0;1", "--samples", "1,1/2,0"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn json_output_is_byte_deterministic() {
    let args = ["hasse", "--poset", "omega", "--d", "4", "--format", "json"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert!(first.stdout.ends_with(b"\n"));
}

#[test]
fn dot_output_has_graph_shape() {
    let out = run(&["hasse", "--poset", "bullet", "--n", "3", "--format", "dot"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("rank=same"));
    assert!(text.contains("->"));

    // graph output only exists for graph-shaped results
    let out = run(&["cells", "--d", "4", "--ambient", "balanced", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn writes_output_to_a_file() {
    let dir = std::env::temp_dir().join(format!("tangency-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("counts.json");
    let out = run(&[
        "cells", "--d", "6", "--ambient", "sphere", "--format", "json",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["counts"].as_array().unwrap().len(), 6);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn transports_markers_and_reports_strata() {
    let v = stdout_json(&[
        "markers", "--omega", "1,1,1,1", "--marker", "3", "--target", "2,2",
        "--format", "json",
    ]);
    assert_eq!(v["transported"], 2);

    let v = stdout_json(&["markers", "--omega", "1,2,1", "--format", "json"]);
    assert_eq!(v["markers"], serde_json::json!([1]));
}

#[test]
fn trajectory_models_render_with_links_and_fibers() {
    let v = stdout_json(&["tmodel", "--omega", "4", "--format", "json"]);
    assert_eq!(v["cells"].as_array().unwrap().len(), 14);

    let v = stdout_json(&["tmodel", "--omega", "4", "--link", "--format", "json"]);
    assert_eq!(v["cells"].as_array().unwrap().len(), 13);

    let v = stdout_json(&["tmodel", "--omega", "4", "--fiber", "--format", "json"]);
    assert!(!v["rows"].as_array().unwrap().is_empty());
}
