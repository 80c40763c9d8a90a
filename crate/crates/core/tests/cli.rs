use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn irred(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_irred")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = irred(&full);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}"));
    (code, v)
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn rank_and_mu() {
    let (code, v) = json(&["rank", "cyclic:5^3"]);
    assert_eq!(code, 0);
    assert_eq!(v["computed"], 3);
    assert_eq!(v["exhaustive"], true);
    let (code, v) = json(&["rank", "psl2:5"]);
    assert_eq!(code, 0);
    assert_eq!(v["witness"].as_array().unwrap().len(), v["computed"].as_u64().unwrap() as usize);
    for g in ["psl2:5", "cyclic:2^2"] {
        let (code, v) = json(&["mu", g]);
        assert_eq!(code, 0);
        assert_eq!(v["computed"], 2);
    }
    assert_eq!(irred(&["rank", "psl2:4"]).0, 65);
    assert_eq!(irred(&["rank", "psl2:"]).0, 64);
    assert_eq!(irred(&["rank"]).0, 64);
    assert_eq!(irred(&["rank", "z"]).0, 65);
}

#[test]
fn budget_limited_runs_exit_2() {
    let (code, v) = json(&["--node-budget", "1000", "rank", "psl2:7"]);
    assert_eq!(code, 2);
    assert_eq!(v["exhaustive"], false);
    let (code, v) = json(&["rank", "sl3:5", "--samples", "2"]);
    assert_eq!(code, 2);
    assert!(v["computed"].as_u64().unwrap() <= 6);
}

#[test]
fn certify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let st = write(dir.path(), "st.txt", "sl 2\n0 -1 1 0\n1 1 0 1\n");
    let borel = write(dir.path(), "borel.txt", "sl 2\n1 1 0 1\n3 1/2 0 1/3\n");
    let det = write(dir.path(), "det.txt", "sl 2\n2 0 0 1\n");
    let junk = write(dir.path(), "junk.txt", "sl 2\n1 0 0 one\n");
    let cert = dir.path().join("cert.json");

    let (code, v) = json(&["certify", &st, "--output", cert.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["certificate"]["witness_prime"], 5);
    let (code, v) = json(&["replay", cert.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["replay"], "ok");

    let (code, v) = json(&["certify", &borel]);
    assert_eq!(code, 3);
    let per = v["report"]["per_prime"].as_array().unwrap();
    assert_eq!(per.len(), 10);
    assert!(per.iter().all(|d| d["diagnosis"] == "common eigenvector"));

    assert_eq!(irred(&["certify", &det]).0, 65);
    assert_eq!(irred(&["certify", &junk]).0, 65);
    assert_eq!(irred(&["certify", "/nonexistent/file"]).0, 65);

    let (code, v) = json(&["--exceptional-floor", "0", "certify", &st, "--evidence", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["plan"]["floor_clamped_from"], 0);
    assert_eq!(v["evidence"]["summary"], "all-irredundant");
}

#[test]
fn evidence_summaries_and_mixed_exit() {
    let dir = tempfile::tempdir().unwrap();
    // S, T and T⁵: redundant at every prime.
    let u = write(dir.path(), "u.txt", "sl 2\n0 -1 1 0\n1 1 0 1\n1 5 0 1\n");
    let (code, v) = json(&["certify", &u, "--evidence", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["evidence"]["summary"], "eventually-redundant");

    // T and [[1,0],[5,1]]: the pair degenerates mod 5, which carries no
    // verdict, and is an irredundant generating pair mod 7 and 11.
    let z = write(dir.path(), "z.txt", "sl 2\n1 1 0 1\n1 0 5 1\n");
    let (code, v) = json(&["--primes", "5,7,11", "certify", &z, "--evidence", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["evidence"]["per_prime"][0]["verdict"], "NotGenerating");
    assert_eq!(v["evidence"]["summary"], "all-irredundant");

    // Irredundant mod 5, redundant mod 7 and 11.
    let mixed = write(dir.path(), "m.txt", "sl 2\n1 -1 2 -1\n-11 2 -6 1\n3 4 2 3\n");
    let (code, v) = json(&["--primes", "5,7,11", "certify", &mixed, "--evidence", "3"]);
    assert_eq!(code, 4);
    assert_eq!(v["evidence"]["summary"], "mixed");
    let verdicts: Vec<&str> = v["evidence"]["per_prime"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["verdict"].as_str().unwrap())
        .collect();
    assert_eq!(verdicts, ["IrredundantGenerating", "RedundantGenerating", "RedundantGenerating"]);
}

#[test]
fn small_commands() {
    let (code, v) = json(&["zdemo", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["tuple"], serde_json::json!(["15", "10", "6"]));
    assert_eq!(v["verdict"], "IrredundantGenerating");

    let (code, v) = json(&["witness", "psl2:7", "--size", "3", "--involutions"]);
    assert_eq!(code, 0);
    assert_eq!(v["witness"].as_array().unwrap().len(), 3);
    let (code, v) = json(&["witness", "psl2:5", "--size", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["found"], false);

    let (code, v) = json(&["orbit", "cyclic:2^2", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["generating_tuples"], "6");
    assert_eq!(v["orbits"], 1);

    let dir = tempfile::tempdir().unwrap();
    let diag = write(dir.path(), "d.txt", "prod(psl2:5,psl2:5)\n0 -1 1 0 | 0 -1 1 0\n1 1 0 1 | 1 1 0 1\n");
    let (code, v) = json(&["product-check", &diag]);
    assert_eq!(code, 0);
    assert_eq!(v["generates"], false);
    assert_eq!(v["diagnosis"], "graph of isomorphism");
    assert_eq!(v["isomorphism"], "identity");
    let bad = write(dir.path(), "b.txt", "prod(psl2:5,psl2:5)\n0 -1 1 0\n");
    assert_eq!(irred(&["product-check", &bad]).0, 65);
}

#[test]
fn output_is_deterministic_and_table_matches_json() {
    let a = irred(&["--format", "json", "--threads", "1", "--seed", "9", "rank", "sl3:5", "--samples", "2"]);
    let b = irred(&["--format", "json", "--threads", "2", "--seed", "9", "rank", "sl3:5", "--samples", "2"]);
    assert_eq!(a.1, b.1);
    let (_, table, _) = irred(&["rank", "psl2:5"]);
    let (_, v) = json(&["rank", "psl2:5"]);
    assert!(table.contains(&format!("computed: {}", v["computed"])));
    assert!(!table.contains("wall_time"));
    let (_, t, _) = irred(&["--timings", "rank", "psl2:5"]);
    assert!(t.contains("wall_time_ms"));
}
