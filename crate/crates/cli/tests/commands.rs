use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shabat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn doc(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let v: Value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

fn num(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

#[test]
fn theta_example() {
    let out = run(&["theta", "--j", "3", "--v", "0", "--tau-im", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"re\":1.0864348112133080e0"), "{text}");
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["status"], "ok");
    assert_eq!(num(&v["payload"]["im"]), 0.0);
}

#[test]
fn coeffs_example() {
    let (v, code) = doc(&["cb", "coeffs", "--n", "2", "--tau-im", "0.5"]);
    assert_eq!(code, 0);
    assert!((num(&v["payload"]["s"][0]) - 0.414_213_562_4).abs() < 1e-10);
    assert!(num(&v["payload"]["cross_check_residual"]) <= 1e-8);
}

#[test]
fn landen_example() {
    let (v, code) = doc(&["landen", "--id", "n4_sum", "--tau-im", "1.0"]);
    assert_eq!((v["status"].as_str(), code), (Some("ok"), 0));
    assert_eq!(v["payload"]["pass"], true);
    let (v, code) = doc(&["landen", "verify", "--n", "7", "--tau-im", "0.75"]);
    assert_eq!((v["status"].as_str(), code), (Some("ok"), 0));
    let (v, code) = doc(&["landen", "limit", "--id", "n6_e3"]);
    assert_eq!(code, 0);
    assert!((num(&v["payload"]["lhs"]["re"]) - 1.0 / 32.0).abs() < 1e-6);
}

#[test]
fn exit_codes_by_status() {
    let cases: [(&[&str], &str, i32); 7] = [
        (&["theta", "--j", "3"], "parse_error", 2),
        (&["theta", "--j", "3", "--tau-im", "-1"], "domain_error", 2),
        (
            &["theta", "--j", "3", "--tau", "0,0.01", "--max-terms", "8"],
            "precision_error",
            2,
        ),
        (
            &["cb", "build", "--n", "3", "--tau", "0.2,1"],
            "domain_error",
            2,
        ),
        (
            &["cb", "critical", "--n", "1", "--tau-im", "1"],
            "domain_error",
            2,
        ),
        (
            &["monodromy", "analyze", "--n", "3", "--sigma1", "(1 4)"],
            "parse_error",
            2,
        ),
        (&["modulus", "annulus", "--r", "1.5"], "domain_error", 2),
    ];
    for (args, status, code) in cases {
        let (v, c) = doc(args);
        assert_eq!(
            (v["status"].as_str(), c),
            (Some(status), code),
            "{args:?}: {v}"
        );
    }
}

#[test]
fn parse_errors_report_position() {
    let (v, _) = doc(&["monodromy", "analyze", "--n", "4", "--sigma1", "2 1 1 3"]);
    assert_eq!(v["payload"]["kind"], "parse");
    assert_eq!(v["payload"]["position"], 4);
    let out = run(&["monodromy", "frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn error_kinds_are_distinct() {
    let (v, _) = doc(&["cb", "critical", "--n", "1", "--tau-im", "1"]);
    assert_eq!(v["payload"]["kind"], "no_critical_values");
    let (v, _) = doc(&["monodromy", "analyze", "--n", "2"]);
    assert_eq!(v["payload"]["transitive"], false);
    let (v, _) = doc(&["modulus", "dessin-size", "--n", "1", "--tau-im", "1"]);
    assert_eq!(v["payload"]["kind"], "domain");
}

#[test]
fn negative_complex_arguments() {
    let (v, code) = doc(&["cb", "eval", "--n", "3", "--tau-im", "1", "--z", "-0.5,0.2"]);
    assert_eq!(code, 0);
    let (p, e) = (&v["payload"]["product"], &v["payload"]["expanded"]);
    assert!((num(&p["re"]) - num(&e["re"])).abs() < 1e-12);
    let (v, code) = doc(&[
        "modulus",
        "geodesic",
        "--a",
        "-0.4142135624",
        "--b",
        "0.4142135624",
    ]);
    assert_eq!(code, 0);
    assert!((num(&v["payload"]["modulus"]) - 0.25).abs() < 1e-9);
}

#[test]
fn monodromy_commands() {
    let (v, _) = doc(&["monodromy", "chebyshev", "--n", "5"]);
    assert_eq!(v["payload"]["dessin"]["vertices"], 6);
    assert_eq!(v["payload"]["sigma1"], "(1 2)(3 4)");
    let (v, _) = doc(&[
        "monodromy",
        "equiv",
        "--n",
        "3",
        "--sigma1",
        "(1 2)",
        "--sigma2",
        "(2 3)",
        "--other1",
        "(2 3)",
        "--other2",
        "(1 2)",
    ]);
    assert_eq!(v["payload"]["equivalent"], true);
}

#[test]
fn csv_output() {
    let out = run(&["landen", "all", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut rows = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(rows.headers().unwrap().iter().next(), Some("status"));
    assert_eq!(rows.records().count(), 9 * 6);
}

#[test]
fn output_is_byte_identical() {
    for args in [
        &["cb", "critical", "--n", "5", "--tau-im", "0.5"][..],
        &["elliptic", "--u", "0.3,0.1", "--tau", "0.25,0.75"],
        &["cb", "derivs", "--n", "4", "--tau-im", "1", "--j", "8"],
    ] {
        let (a, b) = (run(args), run(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn no_non_finite_numbers() {
    let out = run(&["verify-all"]);
    // bare NaN or inf would not parse
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["payload"]["criteria"].as_array().unwrap().len(), 12);
}
