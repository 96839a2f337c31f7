use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dnacodex"))
        .args(args)
        .env_remove("DNACODEX_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn factor_63() {
    let v = json(&["factor", "--n", "63"]);
    assert_eq!(v["report"]["count"], 13);
    assert_eq!(v["report"]["product_is_x_n_minus_one"], true);
    assert_eq!(v["config"]["command"], "factor");
    assert_eq!(v["config"]["n"], 63);
    assert_eq!(v["tool"]["name"], "dnacodex");
}

#[test]
fn bch_65_dna() {
    let v = json(&["bch", "--n", "65", "--d0", "11", "--d1", "9", "--dna"]);
    let r = &v["report"];
    assert_eq!(r["code"]["log2_size"], 34);
    assert_eq!(r["code"]["dH"]["value"], 13);
    assert_eq!(r["code"]["reverse_complement"], true);
    assert_eq!(r["claimed_vs_formula_mismatch"], false);
}

#[test]
fn bch_43_reports_mismatch() {
    let v = json(&["bch", "--n", "43", "--d0", "7", "--d1", "3", "--dna"]);
    let r = &v["report"];
    assert_eq!(r["code"]["log2_size"], 44);
    assert_eq!(r["claimed_vs_formula_mismatch"], true);
    assert_eq!(r["claims"][0]["claimed"], "72");
    assert_eq!(r["claims"][0]["status"], "mismatch");
}

#[test]
fn simplex_fasta() {
    let out = run(&["family", "simplex", "--m", "4", "--export", "fasta"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let headers: Vec<&str> = text.lines().filter(|l| l.starts_with('>')).collect();
    assert_eq!(headers.len(), 256);
    // words u*b with b in the torsion code have no G or C at all
    let gc8 = headers.iter().filter(|h| h.contains(" gc=8 ")).count();
    let gc0 = headers.iter().filter(|h| h.contains(" gc=0 ")).count();
    assert_eq!((gc8, gc0), (240, 16));
    for strand in text.lines().filter(|l| !l.starts_with('>')) {
        assert_eq!(strand.len(), 15);
        assert!(strand.chars().all(|c| "ACGT".contains(c)));
    }
}

#[test]
fn refusals_exit_2() {
    for args in [
        &["bch", "--n", "15", "--d0", "5", "--d1", "3", "--dna"][..],
        &["family", "rm", "--m", "5"],
        &["family", "rm", "--m", "4"],
        &["code", "--n", "8", "--f0", "1", "--f1", "1"],
        &["code", "--n", "7", "--f0", "x^3+x+1", "--f1", "x^3+x^2+1"],
        &["code", "--n", "7", "--f0", "qq", "--f1", "1"],
        &["--budget", "31", "factor", "--n", "7"],
        &["factor", "--n", "7", "--format", "json", "--export", "fasta"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn over_budget_export_refused() {
    let out = run(&["--budget", "10", "family", "zetterberg", "--m", "3", "--export", "fasta"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deterministic_across_threads() {
    let args = ["bch", "--n", "17", "--d0", "5", "--d1", "3", "--dna", "--brute-force"];
    let a = run(&args);
    let b = run(&[&args[..], &["--threads", "1"]].concat());
    let c = run(&[&args[..], &["--threads", "3"]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn hex_and_symbolic_agree() {
    let a = json(&["code", "--n", "7", "--f0", "x^3+x+1", "--f1", "1"]);
    let b = json(&["code", "--n", "7", "--f0", "0b", "--f1", "01"]);
    assert_eq!(a["report"], b["report"]);
    assert_eq!(a["report"]["log2_size"], 11);
}

#[test]
fn verify_and_table() {
    let v = json(&["verify", "--n", "9", "--f0", "x^2+x+1", "--f1", "x^2+x+1"]);
    assert_eq!(v["report"]["words"], 16384);
    assert_eq!(v["report"]["closure"]["reverse_complement_closed"], true);
    let out = run(&["cosets", "--n", "15", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("report.first_reversible = 3"));
    assert!(text.contains("report.power_minus_one = null"));
}

#[test]
fn env_budget_and_output_file() {
    let dir = std::env::temp_dir().join(format!("dnacodex-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z.fa");
    let out = Command::new(env!("CARGO_BIN_EXE_dnacodex"))
        .args(["export", "--n", "9", "--f0", "x^2+x+1", "--f1", "x^2+x+1", "-o"])
        .arg(&path)
        .env("DNACODEX_BUDGET", "14")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with('>')).count(), 1 << 14);
    let out = Command::new(env!("CARGO_BIN_EXE_dnacodex"))
        .args(["export", "--n", "9", "--f0", "x^2+x+1", "--f1", "x^2+x+1"])
        .env("DNACODEX_BUDGET", "13")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}
