//! The scripted CLI session shared by the golden test and the acceptance run.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

/// Run in a scratch copy of `tests/data`, one command per entry.
pub const SCRIPT: &[&str] = &[
    "bracket x.mat y.mat",
    "bracket y.mat x.mat",
    "metric x.mat y.mat",
    "mul I2.mat A.mat",
    "mul A.mat x.mat",
    "dual A.mat r.mat",
    "dual A.mat c.mat --inverse",
    "dual A.mat off.mat",
    "dual A.mat off.mat --strict",
    "member v.mat S.mat --orientation col",
    "member w.mat S.mat --orientation col",
    "member w.mat S.mat --orientation col --domain ft",
    "basis S3.mat --orientation col",
    "basis S3.mat --orientation row",
    "green A.mat At.mat --relation d",
    "green I2.mat Z.mat --relation leq-r",
    "green I2.mat Z.mat --relation leq-r --format json",
    "green A.mat A.mat --relation h --witness h.txt",
    "green Inf.mat Inf.mat --relation d --domain tbar",
    "green Inf.mat I2.mat --relation r --domain t",
    "green J3.mat J3.mat --relation d --no-size-guard",
    "green bad.mat A.mat --relation r",
    "green missing.mat A.mat --relation r",
    "check --property P1 --trials 1 --seed 1",
    "check --property P1 --trials 1 --seed 1",
    "check --property P5 --trials 20 --dims 2:3 --seed 42 --format json",
    "check --property P99",
    "check --property P13 --trials 4 --dims 3:3 --seed 5 --out cx",
    "check --replay transpose.txt",
    "check --replay sign.txt",
];

/// Files whose contents are appended to the transcript after the script.
pub const PRODUCED: &[&str] = &["h.txt"];

pub fn golden_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/session.txt")
}

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

/// Runs the script and returns the transcript: each command, its stdout,
/// its stderr prefixed with `! ` (timings dropped), and its exit code.
pub fn run_session(bin: &Path) -> String {
    let dir = tempfile::tempdir().expect("tempdir");
    for entry in fs::read_dir(data_dir()).expect("data dir") {
        let entry = entry.expect("entry");
        fs::copy(entry.path(), dir.path().join(entry.file_name())).expect("copy");
    }
    let mut out = String::new();
    for line in SCRIPT {
        let output = Command::new(bin)
            .args(line.split_whitespace())
            .current_dir(dir.path())
            .env_remove("TROP_MAX_N")
            .output()
            .expect("run trop");
        out.push_str(&format!("$ trop {line}\n"));
        out.push_str(&String::from_utf8_lossy(&output.stdout));
        for err in String::from_utf8_lossy(&output.stderr).lines() {
            if !err.starts_with("elapsed ") {
                out.push_str(&format!("! {err}\n"));
            }
        }
        out.push_str(&format!("exit {}\n", output.status.code().unwrap_or(-1)));
    }
    let mut replays = Vec::new();
    if let Ok(entries) = fs::read_dir(dir.path().join("cx")) {
        let mut names: Vec<_> = entries.map(|e| e.expect("entry").file_name()).collect();
        names.sort();
        for name in names {
            let rel = format!("cx/{}", name.to_string_lossy());
            replays.push(rel);
        }
    }
    for rel in &replays {
        let output = Command::new(bin)
            .args(["check", "--replay", rel])
            .current_dir(dir.path())
            .output()
            .expect("run trop");
        out.push_str(&format!("$ trop check --replay {rel}\n"));
        out.push_str(&String::from_utf8_lossy(&output.stdout));
        out.push_str(&format!("exit {}\n", output.status.code().unwrap_or(-1)));
    }
    for name in PRODUCED {
        out.push_str(&format!("== {name}\n"));
        out.push_str(
            &fs::read_to_string(dir.path().join(name)).unwrap_or_else(|_| "(missing)\n".into()),
        );
    }
    out
}

/// Compares against the committed transcript; `TROP_BLESS=1` rewrites it.
pub fn check_golden(transcript: &str) -> Result<(), String> {
    let path = golden_path();
    if std::env::var_os("TROP_BLESS").is_some() {
        fs::write(&path, transcript).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let want = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if want == transcript {
        return Ok(());
    }
    let line = want
        .lines()
        .zip(transcript.lines())
        .position(|(a, b)| a != b)
        .unwrap_or_else(|| want.lines().count().min(transcript.lines().count()));
    Err(format!(
        "transcript differs from {} at line {}",
        path.display(),
        line + 1
    ))
}
