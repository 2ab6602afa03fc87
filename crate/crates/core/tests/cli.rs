use qplane::cli::{load_datum, read_report};
use qplane::pipeline::{self, Level};
use qplane::report::RepType;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn qplane(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qplane")).args(args).output().unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn dot_counts(text: &str) -> (usize, usize) {
    let nodes = text.lines().filter(|l| l.contains("dim=") && !l.contains("->")).count();
    let edges = text.lines().filter(|l| l.contains("->")).count();
    (nodes, edges)
}

#[test]
fn classify_datum_a() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.json");
    let qdir = dir.path().join("quivers");
    let o = qplane(&["classify", path(&data("datum_a.toml")), "--out", path(&out), "--quiver-dir", path(&qdir)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r = read_report(&out).unwrap();
    assert_eq!(r.dim, 27);
    assert!(r.checks.iter().all(|c| c.passed));
    let c = &r.classes[0];
    assert_eq!(sorted(c.blocks.iter().map(|b| b.dim).collect()), vec![9, 18]);
    assert_eq!(sorted(c.simples.iter().map(|s| s.dim).collect()), vec![1, 2, 3]);
    assert_eq!(sorted(c.projectives.iter().map(|p| p.dim).collect()), vec![3, 6, 6]);
    // only the nonsemisimple block gets a quiver file
    let files: Vec<_> = fs::read_dir(&qdir).unwrap().collect();
    assert_eq!(files.len(), 1);

    // the report re-serializes to the same bytes
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", text);
    assert!(text.contains("zeta_pow"));
    assert!(!text.contains('.'), "no floats or decimal points in the report");
}

#[test]
fn classify_datum_b() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b.json");
    let o = qplane(&["classify", path(&data("datum_b.toml")), "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let r = read_report(&out).unwrap();
    assert_eq!(r.classes.len(), 2);
    let unipotent: Vec<_> = r.classes.iter().filter(|c| c.blocks.iter().all(|b| b.rep_type == RepType::Semisimple)).collect();
    assert_eq!(unipotent.len(), 1);
    assert_eq!(unipotent[0].blocks.len(), 2);
    assert!(unipotent[0].simples.iter().all(|s| s.dim == 2));
}

#[test]
fn validation_failures_exit_2() {
    let o = qplane(&["classify", path(&data("invalid/datum_a_ab_one.toml")), "--out", "/dev/null"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("condition (13)"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    fs::write(&bad, "group = [3]\na = [1]\nb = [1]\nchi1 = [1]\nchi2 = [2]\neps1 = 0\neps2 = 0\nbeta = 1\n").unwrap();
    let o = qplane(&["verify", path(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("beta"));

    fs::write(&bad, "group = [3]\na = [3]\nb = [1]\nchi1 = [1]\nchi2 = [2]\neps1 = 0\neps2 = 0\n").unwrap();
    assert_eq!(qplane(&["verify", path(&bad)]).status.code(), Some(2));
}

#[test]
fn io_failures_exit_1() {
    let o = qplane(&["verify", "/nonexistent/datum.toml"]);
    assert_eq!(o.status.code(), Some(1));
    let o = qplane(&["classify", path(&data("datum_a.toml")), "--out", "/nonexistent/dir/out.json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_levels() {
    let o = qplane(&["verify", path(&data("datum_a.toml")), "--level", "full"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert!(stdout.contains("socle census = top census"));

    let o = qplane(&["verify", path(&data("datum_b.toml")), "--level", "regular"]);
    assert_eq!(o.status.code(), Some(0));
    let v = pipeline::verify(&load_datum(&data("datum_b.toml")).unwrap(), Level::Regular).unwrap();
    assert!(v.passed());
    let zero_radical = v.checks.iter().filter(|c| c.name.ends_with("radical dimension") && c.detail == "theory 0, oracle 0");
    assert_eq!(zero_radical.count(), 1);

    let o = qplane(&["verify", path(&data("datum_a.toml")), "--level", "identities"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!String::from_utf8_lossy(&o.stdout).contains("theory matches oracle"));
}

#[test]
fn corrupted_structure_constants_exit_3() {
    let o = qplane(&["verify", path(&data("datum_a.toml")), "--corrupt", "1,2"]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("associativity fails on basis triple ("), "{err}");
}

#[test]
fn quivers() {
    let dir = tempfile::tempdir().unwrap();
    let o = qplane(&["quiver", path(&data("datum_a.toml")), "--out-dir", path(dir.path())]);
    assert_eq!(o.status.code(), Some(0));
    let mut counts: Vec<(usize, usize)> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| dot_counts(&fs::read_to_string(e.unwrap().path()).unwrap()))
        .collect();
    counts.sort_unstable();
    // the exceptional block is simple: one isolated node
    assert_eq!(counts, vec![(1, 0), (2, 4)]);

    let dir = tempfile::tempdir().unwrap();
    let o = qplane(&["quiver", path(&data("klein_nilpotent.toml")), "--out-dir", path(dir.path())]);
    assert_eq!(o.status.code(), Some(0));
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1);
    let text = fs::read_to_string(&files[0]).unwrap();
    assert_eq!(dot_counts(&text), (4, 8));
    assert!(text.contains("gen=\"chi1\"") && text.contains("gen=\"chi2\""));
    assert!(text.contains("relations:"));
}
