use std::path::Path;
use std::process::{Command, Output};

use spinquandle::verify::ReportDocument;

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).output().expect("spawn verify")
}

fn read_report(path: &Path) -> ReportDocument {
    ReportDocument::from_json(&std::fs::read_to_string(path).expect("report written")).expect("valid report")
}

#[test]
fn axioms_pass_and_write_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("axioms.json");
    let out = verify(&[
        "axioms", "--quandle", "projective", "--n", "3", "--samples", "300", "--seed", "4", "--report",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let doc = read_report(&path);
    assert!(doc.pass);
    assert_eq!(doc.reports.len(), 1);
    assert_eq!(doc.reports[0].seed, 4);
}

#[test]
fn every_quandle_kind_passes() {
    for q in ["sphere", "projective", "core-zk", "conj-o2", "twisted-so2"] {
        for exact in [false, true] {
            let mut args = vec!["axioms", "--quandle", q, "--n", "2", "--samples", "40", "--seed", "1"];
            if exact {
                args.push("--exact");
            }
            let out = verify(&args);
            assert!(out.status.success(), "{q} exact={exact}: {}", String::from_utf8_lossy(&out.stdout));
        }
    }
}

#[test]
fn every_map_runs_and_only_inn_fails() {
    for m in ["iota1", "inn", "i-n", "iota-n", "fB", "fA", "I1", "I2", "iota3"] {
        let out = verify(&["embedding", "--map", m, "--n", "3", "--samples", "60", "--seed", "9", "--exact"]);
        let stdout = String::from_utf8_lossy(&out.stdout);
        assert_eq!(out.status.code(), Some(if m == "inn" { 1 } else { 0 }), "{m}: {stdout}");
    }
}

#[test]
fn inn_failure_reports_antipodal_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("inn.json");
    let out = verify(&["embedding", "--map", "inn", "--n", "1", "--samples", "5", "--seed", "0", "--exact", "--report", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let doc = read_report(&path);
    assert!(!doc.pass);
    let injective = doc.reports.iter().find(|r| r.name.starts_with("injective")).unwrap();
    assert!(!injective.witnesses.is_empty());
    assert!(doc.reports.iter().find(|r| r.name.starts_with("hom")).unwrap().pass);
}

#[test]
fn diagrams_and_kernel() {
    for d in ["6.3", "7.2", "covering-square", "lifted-action"] {
        let out = verify(&["diagram", "--which", d, "--n", "4", "--samples", "100", "--seed", "2"]);
        assert!(out.status.success(), "{d}: {}", String::from_utf8_lossy(&out.stdout));
    }
    assert!(verify(&["kernel-p4"]).status.success());
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let texts: Vec<String> = (0..2)
        .map(|i| {
            let path = dir.path().join(format!("r{i}.json"));
            verify(&["diagram", "--which", "7.2", "--n", "3", "--samples", "500", "--seed", "11", "--report", path.to_str().unwrap()]);
            std::fs::read_to_string(path).unwrap()
        })
        .collect();
    assert_eq!(texts[0], texts[1]);
}

#[test]
fn tolerance_override_is_recorded() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let out = verify(&["--tolerance", "1e-6", "axioms", "--quandle", "sphere", "--n", "2", "--samples", "50", "--seed", "0", "--report", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(read_report(&path).reports[0].tolerance, 1e-6);
}

#[test]
fn table_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("z3.txt");
    std::fs::write(&good, "3\n0 2 1\n2 1 0\n1 0 2\n").unwrap();
    assert!(verify(&["axioms", "--table", good.to_str().unwrap()]).status.success());
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "2\n0 0\n0 1\n").unwrap();
    let out = verify(&["axioms", "--table", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("fails at"));
    let malformed = dir.path().join("m.txt");
    std::fs::write(&malformed, "2\n0 1\n").unwrap();
    assert_eq!(verify(&["axioms", "--table", malformed.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn bad_arguments_are_rejected() {
    assert!(!verify(&["axioms", "--quandle", "torus"]).status.success());
    assert_eq!(verify(&["diagram", "--which", "covering-square", "--n", "1", "--samples", "5", "--seed", "0"]).status.code(), Some(2));
}

#[test]
fn search_reports_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let reports: Vec<serde_json::Value> = ["pruned", "plain"]
        .iter()
        .map(|tag| {
            let path = dir.path().join(format!("{tag}.json"));
            let mut args = vec!["core-vs-twisted", "--max-order", "6", "--report", path.to_str().unwrap()];
            if *tag == "plain" {
                args.push("--no-pruning");
            }
            let out = Command::new(env!("CARGO_BIN_EXE_search")).args(&args).output().unwrap();
            assert!(out.status.success());
            serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
        })
        .collect();
    assert_eq!(reports[0]["verdicts"], reports[1]["verdicts"]);
    let s3 = reports[0]["verdicts"].as_array().unwrap().iter().find(|v| v["group"] == "S3").unwrap();
    assert_eq!(s3["matches"], 0);
    assert_eq!(s3["exhausted"], true);
    let out = Command::new(env!("CARGO_BIN_EXE_search")).args(["core-vs-twisted", "--max-order", "17"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
