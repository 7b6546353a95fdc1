use std::fs;
use std::path::PathBuf;

use gamma_extremes_cli::{main_with_args, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gamma-extremes").chain(args.iter().copied());
    let code = main_with_args(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("gamma-extremes-{}-{name}", std::process::id()))
}

fn field(line: &str, key: &str) -> f64 {
    line.split_whitespace()
        .find_map(|t| t.strip_prefix(&format!("{key}=")))
        .unwrap()
        .parse()
        .unwrap()
}

#[test]
fn minimize_reproduces_table_entry() {
    let (code, out, _) = run(&["minimize", "--kappa", "1.01"]);
    assert_eq!(code, EXIT_OK);
    assert!((field(&out, "argmin") - 33.4871).abs() / 33.4871 < 1e-3);
    assert!((field(&out, "min") - 0.545885).abs() < 1e-4);
}

#[test]
fn minimize_at_kappa_one_reports_the_boundary() {
    let (code, out, _) = run(&["minimize", "--kappa", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("no interior minimum") && out.contains("infimum 1/2"));
    assert!(!out.contains("argmin="));
}

#[test]
fn eval_functions() {
    let (code, out, _) = run(&["eval", "h", "--kappa", "1", "--alpha", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "h(kappa=1, alpha=1) = 0.632120558829\n");
    let (_, t, _) = run(&["eval", "t", "--alpha", "3"]);
    let (_, band, _) = run(&["eval", "band", "--kappa", "1", "--alpha", "3", "--beta", "7"]);
    assert_eq!(t.rsplit('=').next(), band.rsplit('=').next());
}

#[test]
fn scan_csv_format_and_stability() {
    let args = ["scan", "--kappa", "1.5", "--range", "0.01:100", "--n", "50"];
    let (code, a, _) = run(&args);
    let (_, b, _) = run(&args);
    assert_eq!(code, EXIT_OK);
    assert_eq!(a, b);
    let lines: Vec<&str> = a.lines().collect();
    assert_eq!(lines[0], "alpha,value");
    assert_eq!(lines.len(), 51);
    assert!(a.ends_with('\n'));
    for row in &lines[1..] {
        let (alpha, value) = row.split_once(',').unwrap();
        for v in [alpha, value] {
            let digits: String = v.chars().filter(char::is_ascii_digit).collect();
            assert_eq!(digits.trim_start_matches('0').len(), 12, "{v}");
            assert!(!v.contains('e'));
        }
    }
    // mpmath: P(0.01, 0.015) = 0.96420176084066706
    assert_eq!(lines[1], "0.0100000000000,0.964201760841");

    let path = temp_path("scan.csv");
    let mut with_out = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    with_out.extend(["--out", &p]);
    let (code, stdout, _) = run(&with_out);
    assert_eq!(code, EXIT_OK);
    assert!(stdout.is_empty());
    assert_eq!(fs::read_to_string(&path).unwrap(), a);
    fs::remove_file(path).unwrap();
}

#[test]
fn verify_all_passes() {
    let (code, out, _) = run(&["verify", "--all"]);
    assert_eq!(code, EXIT_OK);
    for name in ["small-alpha", "chain-plus", "chain-minus", "case2-j", "case1", "scale-factors"] {
        assert!(out.contains(&format!("{name}: pass")), "{name}");
    }
    assert!(out.contains("6 of 6 verifications passed"));
    let records: Vec<&str> = out.lines().filter(|l| l.starts_with("name=")).collect();
    assert!(!records.is_empty());
    assert!(records.iter().all(|r| r.contains(";verdict=pass;detail=")));
    let (_, again, _) = run(&["verify", "--all"]);
    assert_eq!(out, again);
}

#[test]
fn verify_subset_with_record_file() {
    let path = temp_path("records.txt");
    let p = path.to_str().unwrap().to_string();
    let (code, out, _) = run(&["verify", "chain-minus", "--full-compare", "--out", &p]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("chain-minus: pass") && !out.contains("chain-plus"));
    let records = fs::read_to_string(&path).unwrap();
    assert!(records.contains("name=chain-minus/V−;verdict=pass;detail=sign=all_positive,degree=68,spot=35/35"));
    fs::remove_file(path).unwrap();
}

#[test]
fn counterexamples_table() {
    let (code, out, _) = run(&["counterexamples"]);
    assert_eq!(code, EXIT_OK);
    for v in ["0.383400499564", "0.382924922548", "0.381969328848", "0.950212931632", "0.954499736104", "0.958511181941"] {
        assert!(out.contains(v), "{v}");
    }
    assert_eq!(out.matches("straddle the normal band").count(), 2);
}

#[test]
fn conjecture_exit_codes() {
    let (code, out, _) = run(&["conjecture", "--family", "gamma"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("name=gamma;verdict=no_violation;detail="));
    let (code, out, _) = run(&["conjecture", "--family", "poisson"]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert!(out.starts_with("name=poisson;verdict=violation;"));
}

#[test]
fn conjecture_csv_output() {
    let path = temp_path("poisson.csv");
    let p = path.to_str().unwrap().to_string();
    let (_, out, _) = run(&["conjecture", "--family", "poisson", "--range", "2:3", "--n", "3", "--out", &p]);
    assert_eq!(out.lines().count(), 1);
    let csv = fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().next(), Some("lambda,value"));
    assert_eq!(csv.lines().count(), 4);
    fs::remove_file(path).unwrap();
}

#[test]
fn usage_errors() {
    for args in [
        &["scan", "--kappa", "1", "--range", "5:1"][..],
        &["eval", "band", "--alpha", "1"],
        &["eval", "t", "--alpha", "-2"],
        &["minimize", "--kappa", "2", "--tol", "0"],
        &["verify", "no-such-certificate"],
        &["conjecture", "--out", "x.csv"],
        &["conjecture", "--family", "normal", "--n", "5"],
        &["frobnicate"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}
