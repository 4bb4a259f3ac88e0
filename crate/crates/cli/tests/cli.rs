use std::path::Path;
use std::process::{Command, Output};

fn eqsym(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqsym"))
        .env("EQSYM_CACHE_DIR", cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn stats_one_permutation() {
    let dir = tempfile::tempdir().unwrap();
    let o = eqsym(dir.path(), &["stats", "32541"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("Des = {1,3,4}") && text.contains("maj = 8") && text.contains("inv = 6"), "{text}");

    let o = eqsym(dir.path(), &["--format", "json", "stats", "531462"]);
    assert_eq!(json(&o)["exd_set"], serde_json::json!([1, 4]));
}

#[test]
fn stats_table_totals() {
    let dir = tempfile::tempdir().unwrap();
    let o = eqsym(dir.path(), &["--format", "json", "stats", "--n", "5", "--table", "maj,exc"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["rows"].as_array().unwrap().len(), 120);
    assert_eq!(v["totals"]["maj"], "600");
    assert_eq!(v["totals_match"], true);
}

#[test]
fn qfun_bases() {
    let dir = tempfile::tempdir().unwrap();
    let o = eqsym(dir.path(), &["qfun", "--lambda", "6", "--j", "3", "--basis", "s"]);
    assert_eq!(stdout(&o).trim(), "QL[6;3] = 3*s[6] + 3*s[5,1] + 3*s[4,2] + s[3,3] + s[3,2,1]");

    let o = eqsym(dir.path(), &["qfun", "--n", "3", "--j", "1", "--basis", "f"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("Q[3,1] = "));

    let o = eqsym(dir.path(), &["--format", "json", "qfun", "--n", "2", "--j", "1", "--vars", "2"]);
    assert_eq!(json(&o)["expansion"], "x1^2 + x1*x2 + x2^2");
}

#[test]
fn expand_expressions() {
    let dir = tempfile::tempdir().unwrap();
    let o = eqsym(dir.path(), &["expand", "Q[3,1] - h[2,1] - h[3]", "h"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0");
    let o = eqsym(dir.path(), &["expand", "omega(h[2])", "e"]);
    assert_eq!(stdout(&o).trim(), "e[2]");
}

#[test]
fn chartable_entries() {
    let dir = tempfile::tempdir().unwrap();
    let o = eqsym(dir.path(), &["chartable", "6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("66"), "{text}");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(eqsym(dir.path(), &["stats", "3254"]).status.code(), Some(2));
    assert_eq!(eqsym(dir.path(), &["stats", "11"]).status.code(), Some(2));
    assert_eq!(eqsym(dir.path(), &["qfun", "--n", "12", "--j", "1"]).status.code(), Some(2));
    assert_eq!(eqsym(dir.path(), &["verify", "nope"]).status.code(), Some(2));
    assert_eq!(eqsym(dir.path(), &["verify", "exd-lemma", "--n-max", "99"]).status.code(), Some(2));
    assert_eq!(eqsym(dir.path(), &["expand", "h[2"]).status.code(), Some(2));
    assert_eq!(eqsym(dir.path(), &["no-such-command"]).status.code(), Some(2));
    let err = eqsym(dir.path(), &["stats", "3254"]);
    assert!(String::from_utf8_lossy(&err.stderr).starts_with("error: "));
}

#[test]
fn verify_single_suite() {
    let dir = tempfile::tempdir().unwrap();
    let o = eqsym(dir.path(), &["--format", "json", "verify", "exd-lemma", "--n-max", "5"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"][0]["n"], 5);
    let o = eqsym(dir.path(), &["verify", "bijections"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("PASS [theorem] bijection-fixtures")));
}

#[test]
fn suites_listing() {
    let dir = tempfile::tempdir().unwrap();
    let o = eqsym(dir.path(), &["--format", "json", "suites"]);
    let names: Vec<String> =
        json(&o).as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap().to_string()).collect();
    assert!(names.contains(&"related".to_string()) && names.contains(&"conjectures".to_string()));
}

#[test]
fn cache_lifecycle() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c");
    let o = eqsym(&cache, &["cache", "list"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "");

    let o = eqsym(&cache, &["--format", "json", "cache", "warm", "--n-max", "3"]);
    let written = json(&o)["written"].as_u64().unwrap();
    assert!(written > 0);
    assert_eq!(stdout(&eqsym(&cache, &["cache", "list"])).lines().count() as u64, written);
    assert!(eqsym(&cache, &["cache", "check"]).status.success());

    // A tampered entry is reported by check and then recomputed on use.
    let entry = std::fs::read_dir(&cache).unwrap().map(|e| e.unwrap().path()).find(|p| {
        std::fs::read_to_string(p).unwrap().contains("key q|Q[3,1]|h|")
    });
    let entry = entry.expect("Q[3,1] cached");
    let text = std::fs::read_to_string(&entry).unwrap();
    std::fs::write(&entry, text.replace("h[3]", "h[2,1]")).unwrap();
    assert_eq!(eqsym(&cache, &["cache", "check"]).status.code(), Some(1));
    let o = eqsym(&cache, &["qfun", "--n", "3", "--j", "1"]);
    assert_eq!(stdout(&o).trim(), "Q[3,1] = h[3] + h[2,1]");
    assert!(eqsym(&cache, &["cache", "check"]).status.success());

    let o = eqsym(&cache, &["--format", "json", "cache", "clear"]);
    assert_eq!(json(&o)["removed"].as_u64(), Some(written));
    assert_eq!(stdout(&eqsym(&cache, &["cache", "list"])), "");
}

#[test]
fn no_cache_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c");
    let o = eqsym(&cache, &["--no-cache", "qfun", "--n", "4", "--j", "2"]);
    assert!(o.status.success());
    assert!(!cache.exists());
}
