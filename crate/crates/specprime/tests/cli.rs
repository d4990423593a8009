use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn specprime(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specprime"))
        .args(args)
        .current_dir(cwd)
        .env_remove("SPECPRIME_SEED")
        .output()
        .unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn run_writes_one_report_per_check() {
    let dir = tempfile::tempdir().unwrap();
    let job = write(
        dir.path(),
        "job.json",
        r#"{"inputs":[{"kind":"zmod","n":12}], "checks":["sprimes","surjectivity"], "output":"out"}"#,
    );
    let out = specprime(&["run", &job], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let lines = fs::read_to_string(dir.path().join("out/reports.jsonl")).unwrap();
    let reports: Vec<Value> = lines.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["check"], "sprimes");
    assert_eq!(reports[0]["status"], "pass");
    assert_eq!(reports[0]["data"]["count"], 3);
    assert_eq!(
        reports[0]["data"]["primes"],
        serde_json::json!([[0, 3, 6, 9], [0, 2, 4, 6, 8, 10], [0, 2, 3, 4, 6, 8, 9, 10]])
    );
    assert_eq!(reports[1]["check"], "surjectivity");
    for key in ["j_surjective", "radical_principal", "union_avoidance", "basis_condition"] {
        assert_eq!(reports[1]["data"][key], true, "{key}");
    }
    assert!(dir.path().join("out/0000-z-12-sprimes.json").exists());
    assert!(dir.path().join("out/0000-z-12-surjectivity.json").exists());
}

#[test]
fn empty_job_exits_zero_without_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let job = write(dir.path(), "job.json", r#"{"inputs":[], "output":"out"}"#);
    let out = specprime(&["run", &job], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(!dir.path().join("out").exists());
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad_ring = write(dir.path(), "a.json", r#"{"inputs":[{"kind":"zmod","n":1}], "output":"out"}"#);
    let out = specprime(&["run", &bad_ring], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("input 0"), "{}", stderr(&out));
    assert!(!dir.path().join("out").exists());

    let malformed = write(dir.path(), "b.json", "{\"inputs\": [\n  {\"kind\": \"zmod\", \"n\": }\n]}");
    let out = specprime(&["run", &malformed], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    let unknown = write(dir.path(), "c.json", r#"{"inputs":[{"kind":"zmod","n":4}], "checks":["bogus"]}"#);
    let out = specprime(&["run", &unknown], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("bogus"));

    let out = specprime(&["run", "missing.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn dot_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let ring = write(dir.path(), "z6.json", r#"{"kind":"zmod","n":6}"#);
    let first = specprime(&["dot", "--space", "sprimes", &ring], dir.path());
    let second = specprime(&["dot", "--space", "sprimes", &ring], dir.path());
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = String::from_utf8(first.stdout).unwrap();
    assert_eq!(text.matches("[label=").count(), 3);
    assert_eq!(text.matches(" -> ").count(), 2);

    let bad = specprime(&["dot", "--space", "nowhere", &ring], dir.path());
    assert_eq!(bad.status.code(), Some(1));
    assert!(stderr(&bad).contains("nowhere"));
}

#[test]
fn check_all_prints_every_ring_check() {
    let dir = tempfile::tempdir().unwrap();
    let ring =
        write(dir.path(), "r.json", r#"{"kind":"product","factors":[{"kind":"zmod","n":4},{"kind":"zmod","n":3}]}"#);
    let out = specprime(&["check", "--all", &ring], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), specprime::checks::RING_CHECKS.len());

    let one = specprime(&["--bruteforce-cap", "4", "check", "--check", "sprimes", &ring], dir.path());
    let report: Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(report["data"]["bruteforce"], "skipped");

    let wrong = specprime(&["check", "--check", "dedekind", &ring], dir.path());
    assert_eq!(wrong.status.code(), Some(1));
}

#[test]
fn seed_is_read_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let ring = write(dir.path(), "r.json", r#"{"kind":"zmod","n":30}"#);
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_specprime"))
            .args(["check", "--check", "monotone_p", &ring])
            .env("SPECPRIME_SEED", seed)
            .output()
            .unwrap()
    };
    let report: Value = serde_json::from_slice(&run("42").stdout).unwrap();
    assert_eq!(report["data"]["seed"], 42);
    assert_eq!(run("not a number").status.code(), Some(1));
}

#[test]
fn corpus_command_matches_shipped_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = specprime(&["corpus"], dir.path());
    let shipped = fs::read(concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/default.json")).unwrap();
    assert_eq!(out.stdout, shipped);
}

#[test]
fn default_corpus_passes_every_check() {
    let dir = tempfile::tempdir().unwrap();
    let job = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/default.json");
    let out = specprime(&["run", job], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let lines = fs::read_to_string(dir.path().join("specprime-out/reports.jsonl")).unwrap();
    assert!(lines.lines().all(|l| l.contains(r#""status":"pass""#)));
}
