use std::path::Path;
use std::process::{Command, Output};

use fplwb_core::fpl::PatternCensus;

fn fplwb(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fplwb"))
        .args(args)
        .env("FPLWB_CACHE", cache)
        .env_remove("RUST_LOG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_fpl_three() {
    let dir = tempfile::tempdir().unwrap();
    let o = fplwb(dir.path(), &["count-fpl", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "7");
    let even = fplwb(
        dir.path(),
        &[
            "count-fpl",
            "--n",
            "4",
            "--parity",
            "even",
            "--threads",
            "1",
        ],
    );
    assert_eq!(stdout(&even).trim(), "42");
}

#[test]
fn tfpl_count() {
    let dir = tempfile::tempdir().unwrap();
    let o = fplwb(
        dir.path(),
        &["tfpl", "--sigma", "0011", "--pi", "0101", "--tau", "0011"],
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn verify_commute_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = fplwb(dir.path(), &["verify", "--suite", "COMMUTE", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("COMMUTE n=2: pass"));
    let json = fplwb(
        dir.path(),
        &["verify", "--suite", "commute", "--n", "2", "--json"],
    );
    let reports: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(reports[0]["status"], "pass");
    assert_eq!(reports[0]["check"], "COMMUTE");
}

#[test]
fn full_suite_at_three() {
    let dir = tempfile::tempdir().unwrap();
    let o = fplwb(dir.path(), &["verify", "--suite", "all", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(
        stdout(&o).lines().filter(|l| l.contains(": pass")).count(),
        17
    );
    let c = fplwb(dir.path(), &["conjectures", "--n", "3"]);
    assert_eq!(c.status.code(), Some(0));
}

#[test]
fn usage_and_limit_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["frobnicate"][..],
        &["count-fpl"],
        &["verify", "--suite", "NOPE", "--n", "2"],
        &["tfpl", "--sigma", "0x11", "--pi", "0101", "--tau", "0011"],
        &["tfpl", "--sigma", "0011", "--pi", "010101", "--tau", "0011"],
        &["t-table", "--n", "9"],
        &["apoly", "--n", "2", "--pi", "1100"],
        &["count-fpl", "--n", "0"],
    ] {
        let o = fplwb(dir.path(), args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn cache_hits_match_recomputation() {
    let dir = tempfile::tempdir().unwrap();
    let fresh = fplwb(dir.path(), &["t-table", "--n", "3", "--no-cache"]);
    assert!(std::fs::read_dir(dir.path()).map_or(true, |mut d| d.next().is_none()));
    let first = fplwb(dir.path(), &["t-table", "--n", "3"]);
    let second = fplwb(dir.path(), &["t-table", "--n", "3"]);
    assert_eq!(fresh.stdout, first.stdout);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn corrupted_cache_is_recomputed_with_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let good = fplwb(dir.path(), &["census", "--n", "3"]);
    let entry = std::fs::read_dir(dir.path())
        .unwrap()
        .next()
        .unwrap()
        .unwrap()
        .path();
    std::fs::write(&entry, b"not json at all").unwrap();
    let again = fplwb(dir.path(), &["census", "--n", "3"]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(again.stdout, good.stdout);
    assert!(String::from_utf8_lossy(&again.stderr).contains("ignoring cache entry"));
    // The bad entry was replaced.
    let third = fplwb(dir.path(), &["census", "--n", "3"]);
    assert!(third.stderr.is_empty());
}

#[test]
fn artifacts_go_to_out_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("census.json");
    let o = fplwb(
        dir.path(),
        &[
            "census",
            "--n",
            "4",
            "--parity",
            "even",
            "--out",
            file.to_str().unwrap(),
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("42 FPLs"));
    let census = PatternCensus::from_json(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(census.total(), 42);

    let csv = stdout(&fplwb(dir.path(), &["c-matrix", "--n", "2"]));
    assert_eq!(csv.trim(), "word,0011,0101\n0011,1,1\n0101,0,1");
    let poly = stdout(&fplwb(dir.path(), &["apoly", "--n", "2", "--pi", "0101"]));
    assert_eq!(poly.trim(), r#"{"pi":"0101","polynomial":["1/1","1/1"]}"#);
    let w = fplwb(dir.path(), &["wieland-check", "--n", "3"]);
    assert_eq!(w.status.code(), Some(0));
}
