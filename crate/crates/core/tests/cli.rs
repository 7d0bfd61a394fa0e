mod common;

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use asmref::cli::{TableDocument, TableKind};

fn asmref(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_asmref"));
    cmd.args(args).env_remove("ASMREF_CACHE");
    if let Some(dir) = cache {
        cmd.env("ASMREF_CACHE", dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_rows() {
    let o = asmref(&["count", "--n", "5", "--d", "1"], None);
    assert_eq!(o.status.code(), Some(0));
    let values: Vec<String> = stdout(&o).split_whitespace().map(String::from).collect();
    assert_eq!(values, ["42", "105", "135", "105", "42"]);

    let o = asmref(&["--format", "json", "count", "--n", "3", "--d", "2"], None);
    let doc = TableDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!((doc.n, doc.d, doc.kind), (3, 2, TableKind::Refined));
    assert!(doc.entries.iter().all(|e| e.value == "1"));
    assert_eq!(doc.entries.len(), 3);

    let o = asmref(&["count", "--n", "1", "--d", "1"], None);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn extend_matches_reference_matrices() {
    for n in 5..=7 {
        let o = asmref(&["--format", "json", "extend", "--n", &n.to_string()], None);
        assert_eq!(o.status.code(), Some(0));
        let doc = TableDocument::from_json(&stdout(&o)).unwrap();
        assert_eq!(doc.kind, TableKind::Extended);
        let values: Vec<i64> = doc.values().unwrap().iter().map(|v| i64::try_from(v).unwrap()).collect();
        let reference: Vec<i64> = common::extended(n).concat();
        assert_eq!(values, reference, "n={n}");
    }
}

#[test]
fn json_output_round_trips() {
    let o = asmref(&["--format", "json", "count", "--n", "7", "--d", "3"], None);
    let text = stdout(&o);
    let doc = TableDocument::from_json(&text).unwrap();
    assert_eq!(doc.entries.len(), 35);
    assert_eq!(doc.to_json() + "\n", text);
    assert_eq!(doc.to_refined().unwrap().n(), 7);
}

#[test]
fn warm_cache_output_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let commands: [&[&str]; 5] = [
        &["appendix-a"],
        &["--format", "json", "appendix-a"],
        &["--format", "csv", "count", "--n", "8", "--d", "2"],
        &["--format", "json", "extend", "--n", "9"],
        &["--format", "json", "verify", "theorem2", "--n", "3..9"],
    ];
    for args in commands {
        let plain = asmref(args, None);
        let cold = asmref(args, Some(dir.path()));
        let warm = asmref(args, Some(dir.path()));
        assert_eq!(plain.status.code(), Some(0), "{args:?}");
        assert_eq!(plain.stdout, cold.stdout, "{args:?}");
        assert_eq!(plain.stdout, warm.stdout, "{args:?}");
    }
    let version_dir = fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    assert!(version_dir.join("refined-n8-d2.json").exists());

    let flag = asmref(&["--cache-dir", dir.path().to_str().unwrap(), "count", "--n", "8", "--d", "2"], None);
    assert_eq!(flag.stdout, asmref(&["count", "--n", "8", "--d", "2"], None).stdout);
}

#[test]
fn verify_exit_codes() {
    for args in [
        &["verify", "theorem1", "--n", "3..6"][..],
        &["verify", "bijection", "--n", "1..4"],
        &["verify", "product-formulas"],
        &["verify", "conj4", "--n", "4", "--d", "3"],
    ] {
        let o = asmref(args, None);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).lines().last().unwrap().starts_with("PASS"));
    }
    for args in [
        &["verify", "theorem1", "--n", "1..3"][..],
        &["verify", "theorem1", "--n", "x"],
        &["verify", "alpha-identities", "--n", "6"],
        &["count"],
        &["frobnicate"],
    ] {
        let o = asmref(args, None);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

fn bfile(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn oeis_totals_pass() {
    let dir = tempfile::tempdir().unwrap();
    let path = bfile(dir.path(), "b005130.txt", "# A005130\n0 1\n1 1\n2 2\n3 7\n4 42\n5 429\n6 7436\n");
    let o = asmref(&["oeis-check", &path, "--which", "totals"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS oeis A005130 totals (index = 0..6): 7 checks"));

    let o = asmref(&["oeis-check", &path, "--which", "refined-row-1"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn oeis_empty_overlap_warns() {
    let dir = tempfile::tempdir().unwrap();
    let path = bfile(dir.path(), "far.txt", "100 5\n101 6\n");
    let o = asmref(&["oeis-check", &path, "--which", "totals"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    assert!(stdout(&o).contains("0 checks"));
}

#[test]
fn oeis_corrupted_term_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = bfile(dir.path(), "bad.txt", "1 1\n2 2\n3 7\n4 43\n");
    let o = asmref(&["--format", "json", "oeis-check", &path, "--which", "totals"], None);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "fail");
    assert_eq!(v["witnesses"][0]["location"], "term 4");
    assert_eq!(v["witnesses"][0]["expected"], "43");
    assert_eq!(v["witnesses"][0]["actual"], "42");
}

#[test]
fn oeis_malformed_file_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = bfile(dir.path(), "junk.txt", "0 1\nzero 2\n");
    let o = asmref(&["oeis-check", &path, "--which", "totals"], None);
    assert_eq!(o.status.code(), Some(2));
}
