use std::path::PathBuf;
use std::process::{Command, Output};

fn qz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qz")).args(args).env("QZ_THREADS", "1").output().expect("qz runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn passing_suite_exits_zero_with_identical_reports() {
    let (a, b) = (scratch("a.json"), scratch("b.json"));
    for p in [&a, &b] {
        let out = qz(&["check", "--suite", "classical", "--Q", "12", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let v: serde_json::Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(v["failed"], 0);
    assert_eq!(v["settings"]["Q"], "12");
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let cfg = scratch("run.conf");
    std::fs::write(&cfg, "# sieve run\nm = 2\nn = 4\nformat = csv\n").unwrap();
    let out = qz(&["--config", cfg.to_str().unwrap(), "sieve", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("identity_id,"), "{}", text);
    // r runs over the divisors of n = 2, not of the file's n = 4
    assert_eq!(text.lines().count(), 3, "{}", text);
    assert!(text.contains("m=2"));
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(qz(&["sieve", "--n", "4", "--r", "3"]).status.code(), Some(2));
    assert_eq!(qz(&["check", "--Q", "3"]).status.code(), Some(2));
    let cfg = scratch("bad.conf");
    std::fs::write(&cfg, "colour = red\n").unwrap();
    assert_eq!(qz(&["--config", cfg.to_str().unwrap(), "hall"]).status.code(), Some(2));
}

#[test]
fn tables_render() {
    let out = qz(&["hall", "--m", "1", "--n", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!out.stdout.is_empty());
    let out = qz(&["zeta", "--order", "split", "--m", "1", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    serde_json::from_slice::<serde_json::Value>(&out.stdout).expect("zeta emits json");
    let out = qz(&["oracle", "--p", "2", "--m", "1", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}
