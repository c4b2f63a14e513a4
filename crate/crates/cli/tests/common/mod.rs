#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn swchan(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_swchan"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn swchan");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    let out = child.wait_with_output().unwrap();
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Runs and insists on exit code 0.
pub fn ok(args: &[&str], stdin: Option<&str>) -> String {
    let out = swchan(args, stdin);
    assert_eq!(out.code, 0, "swchan {args:?} failed: {}", out.stderr);
    out.stdout
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Compares with a checked-in file; `SWCHAN_BLESS=1` rewrites it instead.
pub fn matches_golden(name: &str, actual: &str) -> bool {
    let path = golden_path(name);
    if std::env::var_os("SWCHAN_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return true;
    }
    match std::fs::read_to_string(&path) {
        Ok(expected) => expected == actual,
        Err(_) => false,
    }
}

/// Rows of a CSV body as floats, header dropped.
pub fn csv_rows(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect()
}
