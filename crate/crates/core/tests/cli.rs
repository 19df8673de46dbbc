use std::process::{Command, Output};

fn bhl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bhl")).args(args).output().expect("run bhl")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn scratch_dir(tag: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("bhl-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn verify_hopf_passes_and_reports_json() {
    let o = bhl(&["verify-hopf", "builtin:sweedler"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let checks = v.as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn failing_functor_claim_exits_2() {
    let o = bhl(&["check-functor", "--functor", "L", "--property", "braided", "--module", "builtin:adjoint_ll"]);
    assert_eq!(code(&o), 2, "{}", String::from_utf8_lossy(&o.stderr));
    let o = bhl(&[
        "check-functor",
        "--functor",
        "E",
        "--property",
        "braided",
        "--algebra",
        "builtin:kZ3",
        "--module",
        "builtin:LR_Hcop",
        "--module2",
        "builtin:LR_Hcop:1",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn usage_and_parse_errors_exit_1() {
    assert_eq!(code(&bhl(&["verify-hopf", "/nonexistent/x.alg"])), 1);
    let dir = scratch_dir("bad");
    let bad = dir.join("bad.alg");
    std::fs::write(&bad, "conductor=1\ndim=x\n").unwrap();
    let o = bhl(&["verify-hopf", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
    assert_ne!(code(&bhl(&["no-such-command"])), 0);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn violated_hypotheses_exit_3() {
    // Ch1 makes no braided claim
    let o = bhl(&["check-functor", "--functor", "Ch1", "--property", "braided", "--module", "builtin:adjoint"]);
    assert_eq!(code(&o), 3, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(code(&bhl(&["check-yd", "--module", "builtin:adjoint", "--algebra", "builtin:kZ0"])), 1);
}

#[test]
fn files_written_by_one_command_feed_the_next() {
    let dir = scratch_dir("files");
    let d = dir.join("double.alg");
    assert_eq!(code(&bhl(&["double", "builtin:kZ2", "-o", d.to_str().unwrap()])), 0);
    let text = std::fs::read_to_string(&d).unwrap();
    assert!(text.contains("dim=4"));
    assert_eq!(code(&bhl(&["verify-hopf", d.to_str().unwrap()])), 0);
    let demo = dir.join("demo");
    let o = bhl(&["demo", "--m", "2", "--n", "1", "--d", "1", "-o", demo.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    for e in std::fs::read_dir(&demo).unwrap() {
        assert_eq!(code(&bhl(&["verify-hopf", e.unwrap().path().to_str().unwrap()])), 0);
    }
    let cp = dir.join("cp.alg");
    let o = bhl(&["--format", "text", "bosonize", "--m", "1", "--d", "1", "-o", cp.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    assert_eq!(code(&bhl(&["verify-hopf", cp.to_str().unwrap()])), 0);
    std::fs::remove_dir_all(dir).unwrap();
}
