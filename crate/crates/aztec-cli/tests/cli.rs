use std::process::{Command, Output};

use serde_json::Value;

fn aztec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aztec"))
        .args(args)
        .env_remove("AZTEC_PRECISION")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = aztec(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn partition_of_uniform_order_four() {
    let v = json(&["partition", "--scheme", "uniform", "--n", "4"]);
    assert_eq!(v["Z"], 1024);
    assert_eq!(v["method"], "closed-form");
}

#[test]
fn exact_partition_is_a_string_fraction() {
    let v = json(&["--precision", "exact", "partition", "--scheme", "one-periodic", "--a", "0.5", "--n", "2"]);
    // (1 + a^2)^3 with a = 1/2
    assert_eq!(v["exact"], "125/64");
}

#[test]
fn order_one_inverse_entry() {
    let args = ["inverse-entry", "--scheme", "one-periodic", "--a", "1", "--n", "1", "--white", "1,0", "--black", "0,1"];
    let v = json(&args);
    assert_eq!(v["re"].as_f64(), Some(0.0));
    assert!((v["im"].as_f64().unwrap() + 0.5).abs() < 1e-15);
    let oracle = json(&[&args[..], &["--method", "oracle"]].concat());
    assert_eq!(oracle["method"], "oracle");
    assert!((oracle["im"].as_f64().unwrap() + 0.5).abs() < 1e-12);
}

#[test]
fn frozen_corner_edge() {
    let v = json(&["joint-prob", "--scheme", "uniform", "--n", "8", "--edge", "0,1:1,0"]);
    assert!((v["p"].as_f64().unwrap() - (1.0 - 2f64.powi(-8))).abs() < 1e-12);
}

#[test]
fn density_rows_sum_to_one_per_vertex() {
    let v = json(&["density", "--scheme", "qdiag", "--a", "1.2", "--q", "0.8", "--n", "3"]);
    assert!(v["max_vertex_sum_error"].as_f64().unwrap() < 1e-10);
    assert_eq!(v["edges"].as_array().unwrap().len(), 4 * 3 * 3);
}

#[test]
fn sample_save_and_render_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let saved = dir.path().join("t.json");
    let svg = dir.path().join("t.svg");
    let v = json(&[
        "sample", "--scheme", "uniform", "--n", "10", "--seed", "7",
        "--save", saved.to_str().unwrap(), "--render", svg.to_str().unwrap(),
    ]);
    let again = dir.path().join("again.svg");
    let r = json(&["render", "--input", saved.to_str().unwrap(), "--out", again.to_str().unwrap()]);
    assert_eq!(v["dominoes"], r["dominoes"]);
    assert_eq!(std::fs::read(&svg).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn same_seed_same_sample() {
    let args = ["sample", "--scheme", "two-periodic", "--a", "0.5", "--n", "12", "--seed", "99"];
    assert_eq!(json(&args), json(&args));
}

#[test]
fn exit_codes() {
    assert_eq!(aztec(&["partition", "--scheme", "nope", "--n", "2"]).status.code(), Some(2));
    assert_eq!(aztec(&["partition", "--scheme", "one-periodic", "--a", "-1", "--n", "2"]).status.code(), Some(1));
    let bad = aztec(&["joint-prob", "--scheme", "uniform", "--n", "2", "--edge", "0,1:3,0"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
}

#[test]
fn verify_single_criterion() {
    let v = json(&["verify", "--only", "1"]);
    assert_eq!(v["passed"], true);
}
