//! End-to-end tests of the command surface: document shapes, exit codes,
//! determinism, and the binary itself.

use std::process::Command as Process;

use wpl_cli::{parse_args, run};

fn argv(parts: &[&str]) -> Vec<String> {
    parts.iter().map(|s| s.to_string()).collect()
}

fn run_cli(parts: &[&str]) -> (i32, String) {
    let cmd = parse_args(&argv(parts)).expect("arguments parse");
    run(&cmd)
}

#[test]
fn verify_passes_on_finite_type_weights() {
    let (code, doc) = run_cli(&["verify", "2", "3", "5"]);
    assert_eq!(code, 0);
    assert!(doc.contains("\"all_pass\": true"));
    assert!(doc.contains("\"type_by_vertex_count\": \"E8\""));
    assert!(doc.contains("order 30, roots 240"));
}

#[test]
fn verify_reports_non_finite_weights_as_success() {
    let (code, doc) = run_cli(&["verify", "2", "3", "6"]);
    assert_eq!(code, 0);
    assert!(doc.contains("\"dynkin\": false"));
    assert!(doc.contains("\"all_pass\": true"));
    // Table checks are marked not applicable (pass: null).
    assert!(doc.contains("\"pass\": null"));
}

#[test]
fn verify_exits_one_on_tamper() {
    for tamper in ["wrong-degree", "wrong-sign", "wrong-exponent"] {
        let (code, doc) = run_cli(&["verify", "2", "3", "5", "--tamper", tamper]);
        assert_eq!(code, 1, "tamper {tamper}");
        assert!(doc.contains("\"all_pass\": false"));
        assert!(doc.contains("\"pass\": false"));
    }
}

#[test]
fn group_document() {
    let (code, doc) = run_cli(&["group", "2", "2", "2"]);
    assert_eq!(code, 0);
    assert!(doc.contains("\"rank\": 1"));
    assert!(doc.contains("\"dualizing_element\": \"1 1 1 -2\""));
    let factors_start = doc.find("invariant_factors").unwrap();
    let tail = &doc[factors_start..];
    assert!(tail.starts_with("invariant_factors\": [\n    2,\n    2\n  ]"));
}

#[test]
fn dim_document() {
    let (code, doc) = run_cli(&["dim", "2", "3", "4", "--degree", "0 0 0 1"]);
    assert_eq!(code, 0);
    assert!(doc.contains("\"monomial_count\": 3"));
    assert!(doc.contains("\"graded_dim\": 2"));

    // Arbitrary precision survives the wire.
    let (code, doc) =
        run_cli(&["dim", "2", "3", "4", "--degree", "123456789012345678901234567890 0 0 0"]);
    assert_eq!(code, 0);
    assert!(doc.contains("\"graded_dim\": 61728394506172839450617283946"));
}

#[test]
fn reduce_document() {
    let (code, doc) = run_cli(&["reduce", "2", "3", "4", "--poly", "x0^3"]);
    assert_eq!(code, 0);
    assert!(doc.contains("\"remainder\": \"-x0^1*x1^3 - x0^1*x2^4\""));
    assert!(doc.contains("\"cofactor\": \"x0^1\""));
    assert!(doc.contains("\"in_ideal\": false"));

    let (_, doc) = run_cli(&["reduce", "2", "3", "4", "--poly", "x0^2 + x1^3 + x2^4"]);
    assert!(doc.contains("\"in_ideal\": true"));
    assert!(doc.contains("\"cofactor\": \"1\""));
}

#[test]
fn hilbert_document() {
    let (code, doc) = run_cli(&["hilbert", "2", "3", "5", "--max", "6"]);
    assert_eq!(code, 0);
    assert!(doc.contains("\"generator_degrees\": [\n    6,\n    10,\n    15\n  ]"));
    assert!(doc.contains("\"relation_degree\": 30"));
    assert!(doc.contains("\"coefficients\": [\n    1,\n    0,\n    0,\n    0,\n    0,\n    0,\n    1\n  ]"));

    let (_, doc) = run_cli(&["hilbert", "2", "3", "6", "--max", "4"]);
    assert!(doc.contains("\"generator_degrees\": null"));
}

#[test]
fn collection_and_euler_documents() {
    let (code, doc) = run_cli(&["collection", "2", "2", "2"]);
    assert_eq!(code, 0);
    assert!(doc.contains("\"length\": 5"));
    assert!(doc.contains("\"0 0 0 0\""));
    assert!(doc.contains("\"0 0 0 1\""));

    let (_, doc) = run_cli(&["collection", "1", "2", "2", "--drop-e0"]);
    assert!(doc.contains("\"length\": 3"));
    assert!(doc.contains("\"include_e0\": false"));

    let (code, doc) = run_cli(&["euler", "2", "2", "2", "--drop-e0"]);
    assert_eq!(code, 0);
    assert!(doc.contains("\"size\": 4"));
}

#[test]
fn quiver_documents() {
    let (code, doc) = run_cli(&["quiver", "1", "2", "2"]);
    assert_eq!(code, 0);
    assert!(doc.contains("\"vertices\""));
    assert!(doc.contains("\"label\": \"x1\""));

    let (code, dot) = run_cli(&["quiver", "1", "2", "2", "--format", "dot"]);
    assert_eq!(code, 0);
    assert!(dot.starts_with("digraph star_quiver {"));
    assert!(dot.contains("\"0 1 0 0\" -> \"0 0 0 1\" [label=\"x1\"];"));
}

#[test]
fn cartan_and_coxeter_documents() {
    let (code, doc) = run_cli(&["cartan", "2", "2", "2"]);
    assert_eq!(code, 0);
    assert!(doc.contains("\"agree\": true"));

    let (code, doc) = run_cli(&["coxeter", "2", "2", "2"]);
    assert_eq!(code, 0);
    assert!(doc.contains("\"order\": 6"));
}

#[test]
fn roots_documents() {
    let (code, doc) = run_cli(&["roots", "2", "3", "5"]);
    assert_eq!(code, 0);
    assert!(doc.contains("\"count\": 240"));

    let (code, doc) = run_cli(&["roots", "3", "3", "3"]);
    assert_eq!(code, 1);
    assert!(doc.contains("\"error\": \"indefinite-form\""));

    // A box too small to certify completeness is refused.
    let (code, doc) = run_cli(&["roots", "2", "3", "5", "--box", "3"]);
    assert_eq!(code, 1);
    assert!(doc.contains("\"error\": \"box-too-small\""));
}

#[test]
fn output_is_deterministic() {
    for parts in [
        vec!["verify", "2", "3", "4"],
        vec!["roots", "2", "2", "4"],
        vec!["hilbert", "2", "3", "3", "--max", "40"],
        vec!["quiver", "2", "3", "4", "--format", "dot"],
    ] {
        let (_, first) = run_cli(&parts);
        let (_, second) = run_cli(&parts);
        assert_eq!(first, second, "two runs of {parts:?} must agree byte for byte");
    }
}

#[test]
fn binary_exit_codes_and_streams() {
    let exe = env!("CARGO_BIN_EXE_wpl");

    let out = Process::new(exe).args(["verify", "2", "3", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("\"all_pass\": true"));

    let out = Process::new(exe)
        .args(["verify", "2", "3", "5", "--tamper", "wrong-exponent"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = Process::new(exe).args(["classify", "2", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("usage"));
    assert!(out.stdout.is_empty());

    let out = Process::new(exe).args(["classify", "2", "3", "4", "--bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Identical invocations produce identical bytes.
    let a = Process::new(exe).args(["verify", "2", "2", "5"]).output().unwrap();
    let b = Process::new(exe).args(["verify", "2", "2", "5"]).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
}
