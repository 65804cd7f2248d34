//! The twelve acceptance criteria. Prints one PASS/FAIL line per criterion.
//!
//! Criterion 1 includes `ϑ₂(v, τ+1) = ϑ₂(v, τ)`, which does not hold for the
//! series as defined: shifting τ by 1 multiplies every term of `ϑ₂` by
//! `e^{2πi(n+½)²} = i`. That check is reported as failing. Because
//! `verify-all` then exits 1, the exit-code clause of criterion 12 fails as
//! well. The assertions below pin down exactly that outcome, so any other
//! regression still fails the test.
//!
//! Runs without the libtest harness so the lines are never captured.

use std::process::{Command, Output};

use shabat::theta::SeriesConfig;
use shabat::verify::{run_numeric_suite, CriterionOutcome, DEFAULT_SEED};

const KNOWN_FALSE: &str = "theta2_period_one";

fn shabat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shabat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn assert_only_known_failure(o: &CriterionOutcome) {
    let failing: Vec<&str> = o.failures().map(|c| c.label.as_str()).collect();
    if o.id == 1 {
        assert_eq!(failing, [KNOWN_FALSE], "criterion 1: {o:#?}");
        let c = o.checks.iter().find(|c| c.label == KNOWN_FALSE).unwrap();
        assert!(
            (c.worst - 2f64.sqrt()).abs() < 1e-12,
            "residual should be |i - 1|: {c:?}"
        );
        let corrected = o
            .checks
            .iter()
            .find(|c| c.label == "theta2_period_one_factor_i")
            .unwrap();
        assert!(corrected.pass, "{corrected:?}");
    } else {
        assert!(o.pass, "criterion {} failed: {o:#?}", o.id);
    }
}

fn main() {
    let outcomes = run_numeric_suite(SeriesConfig::default(), DEFAULT_SEED);
    assert_eq!(outcomes.len(), 11);
    for o in &outcomes {
        println!("{}", o.summary_line());
    }

    // 12: verify-all is deterministic, reports through its exit code, and
    // malformed input is a parse error.
    let first = shabat(&["verify-all"]);
    let second = shabat(&["verify-all"]);
    let deterministic = first.stdout == second.stdout && !first.stdout.is_empty();
    let all_numeric = outcomes.iter().all(|o| o.pass);
    let exit_zero = first.status.code() == Some(0);
    let bad = shabat(&["theta", "--j", "nine", "--tau-im", "1"]);
    let parse_diagnostic = bad.status.code() == Some(2)
        && String::from_utf8_lossy(&bad.stdout).contains("\"status\":\"parse_error\"")
        && !bad.stderr.is_empty();
    let cli_pass = exit_zero && deterministic && parse_diagnostic;
    println!(
        "[{}] 12 CLI: verify-all exit {:?}, deterministic {deterministic}, parse diagnostic {parse_diagnostic}",
        if cli_pass { "PASS" } else { "FAIL" },
        first.status.code()
    );

    for o in &outcomes {
        assert_only_known_failure(o);
    }
    assert!(deterministic, "verify-all output differs between runs");
    assert!(parse_diagnostic, "malformed input: {bad:?}");
    assert_eq!(
        exit_zero, all_numeric,
        "exit code must mirror the numeric verdicts"
    );
    assert_eq!(first.status.code(), Some(1));
}
