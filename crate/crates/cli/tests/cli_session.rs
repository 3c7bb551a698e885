mod common;

use std::path::Path;
use std::process::Command;

fn trop() -> &'static Path {
    Path::new(env!("CARGO_BIN_EXE_trop"))
}

#[test]
fn session_matches_golden() {
    let transcript = common::run_session(trop());
    if let Err(e) = common::check_golden(&transcript) {
        panic!("{e}\n--- transcript ---\n{transcript}");
    }
}

fn run(args: &[&str]) -> (String, String, i32) {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let out = Command::new(trop())
        .args(args)
        .current_dir(data)
        .output()
        .unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["bracket", "x.mat", "y.mat"]),
        ("1\n".into(), String::new(), 0)
    );
    let (out, _, code) = run(&["green", "A.mat", "At.mat", "--relation", "d"]);
    assert_eq!((out.as_str(), code), ("yes\n", 0));
    let (out, _, code) = run(&["green", "I2.mat", "Z.mat", "--relation", "leq-r"]);
    assert_eq!((out.as_str(), code), ("no\n", 1));
    let (_, err, code) = run(&[
        "green",
        "Inf.mat",
        "Inf.mat",
        "--relation",
        "d",
        "--domain",
        "tbar",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("relation D requires entries in T"), "{err}");
    let (_, err, code) = run(&["mul", "bad.mat", "A.mat"]);
    assert_eq!(code, 2);
    assert!(err.contains("bad.mat:3:3:"), "{err}");
    assert_eq!(run(&["check", "--property", "P0"]).2, 2);
    assert_eq!(run(&["frobnicate"]).2, 2);
}

#[test]
fn size_guard_follows_environment() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let code = |max: &str| {
        Command::new(trop())
            .args(["green", "J3.mat", "J3.mat", "--relation", "d"])
            .current_dir(&data)
            .env("TROP_MAX_N", max)
            .output()
            .unwrap()
            .status
            .code()
            .unwrap()
    };
    assert_eq!(code("2"), 2);
    assert_eq!(code("3"), 0);
    assert_eq!(code("many"), 2);
}

#[test]
fn reports_are_byte_identical() {
    let args = ["check", "--property", "P1", "--trials", "1", "--seed", "1"];
    let first = run(&args);
    assert_eq!(first.2, 0);
    assert_eq!(first.0, run(&args).0);
}
