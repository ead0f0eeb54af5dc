//! Golden-file corpus: each directory under `tests/golden/` holds `args`,
//! `input.json` and the expected `stdout`, `stderr` and `status` of the
//! binary fed `input.json` on stdin. `GOLDEN_BLESS=1` rewrites the expected
//! files from the current binary.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

pub struct Case {
    pub name: String,
    pub dir: PathBuf,
    pub args: Vec<String>,
    pub input: String,
}

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn cases() -> Vec<Case> {
    let mut dirs: Vec<PathBuf> =
        fs::read_dir(corpus_dir()).expect("golden corpus").map(|e| e.unwrap().path()).filter(|p| p.is_dir()).collect();
    dirs.sort();
    dirs.into_iter()
        .map(|dir| Case {
            name: dir.file_name().unwrap().to_string_lossy().into_owned(),
            args: fs::read_to_string(dir.join("args")).unwrap().split_whitespace().map(String::from).collect(),
            input: fs::read_to_string(dir.join("input.json")).unwrap(),
            dir,
        })
        .collect()
}

pub fn run(case: &Case) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ncinterp"))
        .args(&case.args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn ncinterp");
    child.stdin.take().unwrap().write_all(case.input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        status: out.status.code().unwrap_or(-1),
    }
}

/// Compare one case against its expected files; `Err` describes the first mismatch.
pub fn check(case: &Case) -> Result<(), String> {
    let got = run(case);
    if std::env::var_os("GOLDEN_BLESS").is_some() {
        fs::write(case.dir.join("stdout"), &got.stdout).unwrap();
        fs::write(case.dir.join("stderr"), &got.stderr).unwrap();
        fs::write(case.dir.join("status"), format!("{}\n", got.status)).unwrap();
    }
    let read = |f: &str| fs::read_to_string(case.dir.join(f)).map_err(|e| format!("{}: {f}: {e}", case.name));
    let status: i32 = read("status")?.trim().parse().map_err(|_| format!("{}: bad status file", case.name))?;
    if got.status != status {
        return Err(format!("{}: status {} ≠ expected {status}", case.name, got.status));
    }
    if got.stdout != read("stdout")? {
        return Err(format!("{}: stdout differs", case.name));
    }
    if got.stderr != read("stderr")? {
        return Err(format!("{}: stderr differs", case.name));
    }
    // a second run must reproduce the same bytes
    let again = run(case);
    if again.stdout != got.stdout || again.stderr != got.stderr {
        return Err(format!("{}: output not byte-stable", case.name));
    }
    Ok(())
}
