use std::process::Command;

use cht_cli::ClassifyJson;
use cht_core::algebra::BigRat;
use cht_core::enumerate::same_sig_figs;
use cht_core::typeclass::{Order, Triple, TypeLabel};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cht(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_cht")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

#[test]
fn classify_accepts_finite_and_ideal_orders() {
    let r = cht(&["classify", "3", "3", "10", "--json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: ClassifyJson = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v.triple, Triple::new(3, 3, 10).unwrap());
    assert_eq!(v.label, TypeLabel::A);

    let r = cht(&["classify", "10", "25", "inf", "--json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: ClassifyJson = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v.triple.n3(), Order::Infinite);
    assert!(r.stdout.contains("\"inf\""));
}

#[test]
fn invalid_triples_exit_2() {
    for args in [
        ["classify", "5", "4", "3"],
        ["classify", "2", "3", "4"],
        ["oracle", "3", "x", "4"],
        ["interval", "4", "inf", "5"],
    ] {
        let r = cht(&args);
        assert_eq!(r.code, 2, "{args:?}");
        assert!(!r.stderr.is_empty());
        assert!(r.stdout.is_empty());
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(cht(&["frobnicate"]).code, 2);
    assert_eq!(cht(&["classify", "3", "3", "10", "--precision-bits", "0"]).code, 2);
    assert_eq!(cht(&["oracle", "3", "3", "10", "--tol", "-1"]).code, 2);
    assert_eq!(cht(&["enumerate", "--n1", "5..4"]).code, 2);
    assert_eq!(cht(&["verify", "--jobs", "0"]).code, 2);
}

#[test]
fn classify_json_round_trips() {
    let r = cht(&["classify", "14", "14", "14", "--json"]);
    assert_eq!(r.code, 0);
    let v: ClassifyJson = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v.label, TypeLabel::B);
    let again = serde_json::to_string_pretty(&v).unwrap();
    assert_eq!(again.trim_end(), r.stdout.trim_end());
    let f = v.f.unwrap();
    let approx: f64 = f.approx.parse().unwrap();
    assert!(same_sig_figs(approx, -0.0446055, 6));
    let lo: BigRat = f.lo.parse().unwrap();
    let hi: BigRat = f.hi.parse().unwrap();
    assert!(lo <= hi);
}

#[test]
fn degenerate_triple_has_no_deformations() {
    let r = cht(&["oracle", "3", "3", "3"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("3,3,3"), "{}", r.stderr);
}

#[test]
fn oracle_reports_type() {
    let r = cht(&["oracle", "20", "30", "50", "--json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["label"], "B");
}

#[test]
fn interval_is_ordered() {
    let r = cht(&["interval", "9", "14", "15", "--json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert!(v.is_object());
}

#[test]
fn enumerate_csv_columns() {
    let r = cht(&["enumerate", "--n1", "9..10", "--n2-max", "15", "--n3-cap", "20"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let mut lines = r.stdout.lines();
    assert_eq!(lines.next(), Some("n1,n2,n3,F_lo,F_hi,type"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows.iter().any(|l| l.starts_with("9,14,14,") && l.ends_with(",A")));
    assert!(rows.iter().any(|l| l.starts_with("10,15,15,") && l.ends_with(",B")));
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--n1", "3..12", "--n2-max", "30", "--n3-cap", "40", "--format", "json"];
    let a = cht(&args);
    let b = cht(&args);
    let mut single = vec!["--jobs", "1"];
    single.extend(args);
    let c = cht(&single);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let t1 = cht(&["table", "--which", "1"]);
    assert_eq!(t1.stdout, cht(&["table", "--which", "1"]).stdout);
}

#[test]
fn type_a_table_rows() {
    let r = cht(&["table", "--which", "typeA", "--n1", "10..13"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    for row in [
        "| 10 | 10 <= n2 <= 14 | n3 >= n2 |",
        "| 10 | n2 = 15 | n3 >= 16 |",
        "| 11 | n2 = 17 | n3 >= 49 |",
        "| 12 | n2 = 14 | n3 >= 33 |",
        "| 13 | n2 = 13 | n3 >= 40 |",
    ] {
        assert!(r.stdout.contains(row), "missing {row}\n{}", r.stdout);
    }
}

#[test]
fn verify_single_claim() {
    let r = cht(&["verify", "--claim", "L5.1.4", "--json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["status"], "Proved");
}

#[test]
fn verify_refutation_exits_1() {
    let r = cht(&["verify", "--claim", "L5.2.1", "--json"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("witness"));
    assert_eq!(cht(&["verify", "--claim", "E5.2.1"]).code, 0);
}

#[test]
fn verify_budget_exhaustion_exits_3() {
    assert_eq!(cht(&["verify", "--claim", "L5.3.1", "--budget", "1"]).code, 3);
}

#[test]
fn verify_unknown_claim_exits_2() {
    assert_eq!(cht(&["verify", "--claim", "nothing*here"]).code, 2);
}

#[test]
fn canaries_are_caught() {
    assert_eq!(cht(&["verify", "--canaries"]).code, 0);
}

#[test]
fn audit_f_succeeds() {
    let r = cht(&["audit-f", "--json"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["terms_f"], 40);
    assert_eq!(v["terms_composed"], 40);
    assert_eq!(v["arbiter"], "polynomial");
}
