use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use golay_ks::bases::{BasisSystem, GOLAY24_SEED};
use golay_ks::kscheck::{KsCertificate, OracleVerdict};
use tempfile::TempDir;

fn golay_ks(out: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_golay-ks"))
        .arg("--out")
        .arg(out)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn read(dir: &TempDir, name: &str) -> String {
    fs::read_to_string(dir.path().join(name)).unwrap()
}

#[test]
fn code_reports_parameters() {
    let dir = TempDir::new().unwrap();
    let o = golay_ks(dir.path(), &["code", "golay24"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[24,12,8]"));
    let report: serde_json::Value = serde_json::from_str(&read(&dir, "code.json")).unwrap();
    assert_eq!(report["weight_distribution"]["12"], 2576);
    assert_eq!(report["codewords"], "4096");

    let o = golay_ks(dir.path(), &["code", "golay24", "--puncture", "23"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[23,12,7]"));
}

#[test]
fn emitted_matrix_loads_as_the_builtin() {
    let dir = TempDir::new().unwrap();
    let o = golay_ks(dir.path(), &["code", "golay12", "--emit-matrix"]);
    assert_eq!(o.status.code(), Some(0));
    let path = dir.path().join("ternary.txt");
    fs::write(&path, &o.stdout).unwrap();
    let o = golay_ks(dir.path(), &["code", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("golay12 [12,6,6]"), "{}", stdout(&o));
}

#[test]
fn weight_nine_rays() {
    let dir = TempDir::new().unwrap();
    let o = golay_ks(dir.path(), &["rays", "golay12", "--weight", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let csv = read(&dir, "rays.csv");
    assert_eq!(csv.lines().count(), 221);
}

#[test]
fn translated_bases_start_with_the_seed() {
    let dir = TempDir::new().unwrap();
    let o = golay_ks(dir.path(), &["bases", "golay24", "--mode", "translate"]);
    assert_eq!(o.status.code(), Some(0));
    let bs = BasisSystem::from_json(&read(&dir, "bases.json")).unwrap();
    assert_eq!(bs.len(), 2048);
    assert_eq!(bs.bases[0].labels(), &GOLAY24_SEED);
}

#[test]
fn ks_on_weight_nine_is_proved() {
    let dir = TempDir::new().unwrap();
    let o = golay_ks(dir.path(), &["ks", "golay12", "--weight", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("27x = 495"));
    let cert: KsCertificate = serde_json::from_str(&read(&dir, "certificate.json")).unwrap();
    assert!(cert.ks_proved);
    assert_eq!(cert.oracle, OracleVerdict::Infeasible);
    let classes: serde_json::Value = serde_json::from_str(&read(&dir, "classes.json")).unwrap();
    assert_eq!(classes, serde_json::json!({"27": {"9": 220}}));
}

#[test]
fn ks_on_restricted_system_is_not_proved() {
    let dir = TempDir::new().unwrap();
    let o = golay_ks(
        dir.path(),
        &["ks", "golay24", "--restrict", "1,127,128,136"],
    );
    assert_eq!(o.status.code(), Some(1));
    let cert: KsCertificate = serde_json::from_str(&read(&dir, "certificate.json")).unwrap();
    assert!(!cert.ks_proved);
    assert!(cert.assignment.is_some());
}

#[test]
fn ks_reads_a_bases_file() {
    let dir = TempDir::new().unwrap();
    let o = golay_ks(dir.path(), &["bases", "golay12", "--weight", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let bases = dir.path().join("bases.json");
    let o = golay_ks(dir.path(), &["ks", "--bases", bases.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("495_12"));
}

#[test]
fn pipeline_reports() {
    let dir = TempDir::new().unwrap();
    let o = golay_ks(dir.path(), &["pipeline", "hamming8"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&read(&dir, "pipeline.json")).unwrap();
    assert_eq!(report["divisibility"]["divisible"], true);
    assert_eq!(report["seed"]["status"], "skipped");

    let o = golay_ks(dir.path(), &["pipeline", "qr48"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&read(&dir, "pipeline.json")).unwrap();
    assert_eq!(report["min_distance"], 12);
    assert_eq!(report["divisibility"]["bases"], 1u64 << 23);
    assert_eq!(report["divisibility"]["divisible"], false);
    let status = report["seed"]["status"].as_str().unwrap();
    assert!(["found", "exhausted", "proven-absent"].contains(&status));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    assert_eq!(
        golay_ks(dir.path(), &["code", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        golay_ks(dir.path(), &["bases", "golay24", "--mode", "enumerate"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(golay_ks(dir.path(), &["ks"]).status.code(), Some(2));
    assert_eq!(
        golay_ks(dir.path(), &["ks", "golay24", "--restrict", "1,3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        golay_ks(dir.path(), &["pipeline", "qr48", "--budget", "10000000"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn budget_exhaustion_exits_with_three() {
    let dir = TempDir::new().unwrap();
    let o = golay_ks(dir.path(), &["bases", "golay12", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn outputs_do_not_depend_on_thread_count() {
    let runs: Vec<TempDir> = ["1", "4"]
        .iter()
        .map(|t| {
            let dir = TempDir::new().unwrap();
            let o = golay_ks(
                dir.path(),
                &["--threads", t, "ks", "golay12", "--weight", "9"],
            );
            assert_eq!(o.status.code(), Some(0));
            let o = golay_ks(
                dir.path(),
                &["--threads", t, "bases", "golay12", "--weight", "9"],
            );
            assert_eq!(o.status.code(), Some(0));
            let o = golay_ks(dir.path(), &["--threads", t, "rays", "golay24"]);
            assert_eq!(o.status.code(), Some(0));
            dir
        })
        .collect();
    for name in [
        "certificate.json",
        "bases.json",
        "rays.csv",
        "rays_summary.json",
    ] {
        assert_eq!(read(&runs[0], name), read(&runs[1], name), "{name}");
    }
}
