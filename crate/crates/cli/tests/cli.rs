use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_normcover"))
        .args(args)
        .env_remove("NORMCOVER_CACHE")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    line.split(' ')
        .find_map(|t| t.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
}

#[test]
fn compute_named_and_generated() {
    let o = run(&[
        "compute",
        "--name",
        "sym(4)",
        "--gens",
        "(1,2),(1,2,3)",
        "--deg",
        "3",
        "--name",
        "cyclic(6)",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(field(lines[0], "group"), Some("sym(4)"));
    assert_eq!(field(lines[0], "gamma"), Some("2"));
    // names come first, then generator lists
    assert_eq!(field(lines[1], "group"), Some("cyclic(6)"));
    assert_eq!(field(lines[1], "sigma"), Some("inf"));
    assert_eq!(field(lines[1], "gamma"), Some("inf"));
    assert_eq!(field(lines[2], "sigma"), Some("4"));
    for l in &lines {
        assert_eq!(field(l, "bounds_ok"), Some("true"));
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["compute", "--name", "alt(5)", "--name", "dihedral(6)"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn caps_skip_without_failing() {
    let o = run(&[
        "compute",
        "--name",
        "sym(5)",
        "--lattice-cap",
        "100",
        "--format",
        "table",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("skipped: cap"));
    let o = run(&["compute", "--name", "sym(5)", "--lattice-cap", "100"]);
    assert_eq!(field(stdout(&o).trim(), "skipped"), Some("cap"));
}

#[test]
fn usage_errors_exit_2() {
    let o = run(&["compute", "--name", "sym("]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column"));
    assert_eq!(run(&["compute", "--gens", "(1,2)"]).status.code(), Some(2));
    assert_eq!(run(&["compute"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify-paper", "--only", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["compute", "--name", "sym(4)", "--lattice-cap", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn cache_hits_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.txt");
    let c = cache.to_str().unwrap();
    let first = run(&["compute", "--name", "m10", "--cache", c]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&cache).unwrap().lines().count(), 1);

    let again = run(&["compute", "--name", "m10", "--cache", c]);
    assert_eq!(again.stdout, first.stdout);
    assert_eq!(fs::read_to_string(&cache).unwrap().lines().count(), 1);

    // a stored answer stays valid under a smaller cap
    let small = run(&[
        "compute",
        "--name",
        "m10",
        "--cache",
        c,
        "--lattice-cap",
        "10",
    ]);
    assert_eq!(small.stdout, first.stdout);

    let text = fs::read_to_string(&cache)
        .unwrap()
        .replace("sigma=46", "sigma=45");
    fs::write(&cache, text).unwrap();
    let tampered = run(&["compute", "--name", "m10", "--cache", c]);
    assert_eq!(tampered.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&tampered.stderr).contains("warning"));
    assert_eq!(tampered.stdout, first.stdout);
}

#[test]
fn cache_path_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("env-cache.txt");
    let o = Command::new(env!("CARGO_BIN_EXE_normcover"))
        .args(["compute", "--name", "sym(3)"])
        .env("NORMCOVER_CACHE", &cache)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(cache.exists());
}

#[test]
fn verify_paper_filters_and_reports() {
    let o = run(&["verify-paper", "--only", "permut-sweep"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    assert_eq!(field(out.trim(), "check"), Some("permut-sweep"));
    assert_eq!(field(out.trim(), "pass"), Some("true"));
    assert_eq!(field(out.trim(), "subgroups_6"), Some("1455"));
}

#[test]
fn verify_paper_failure_exits_1() {
    let o = run(&["verify-paper", "--only", "coset-conditions"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(field(stdout(&o).trim(), "pass"), Some("false"));
}

#[test]
fn verify_paper_with_tampered_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.txt");
    let c = cache.to_str().unwrap();
    let args = ["verify-paper", "--only", "tightness,oracle", "--cache", c];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let text = fs::read_to_string(&cache)
        .unwrap()
        .replacen("pass=true", "pass=false", 1);
    fs::write(&cache, text).unwrap();
    let second = run(&args);
    assert_eq!(second.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&second.stderr).contains("integrity"));
    assert_eq!(second.stdout, first.stdout);
}

#[test]
fn certificates_replay() {
    let o = run(&[
        "cover-certificate",
        "--name",
        "sym(4)",
        "--name",
        "cyclic(4)",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 4);
    for l in out.lines() {
        assert_eq!(field(l, "replayed"), Some("true"));
        assert_eq!(field(l, "verified"), Some("true"));
    }
    assert!(out
        .lines()
        .any(|l| field(l, "kind") == Some("gamma") && field(l, "value") == Some("2")));
}

#[test]
fn lattice_lists_classes() {
    let o = run(&["lattice", "--name", "sym(4)"]);
    let out = stdout(&o);
    let first = out.lines().next().unwrap();
    assert_eq!(field(first, "subgroups"), Some("30"));
    assert_eq!(field(first, "classes"), Some("11"));
    assert_eq!(out.lines().count(), 12);
}
