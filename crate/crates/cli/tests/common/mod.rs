#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use prealt_cli::format::AlgebraFile;
use serde_json::Value;

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Run {
    pub fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", self.stdout))
    }
}

pub fn prealt_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_prealt"));
    cmd.args(args).env_remove("PREALT_MAX_WITNESSES");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).expect("utf8"),
        stderr: String::from_utf8(out.stderr).expect("utf8"),
        code: out.status.code().expect("exit code"),
    }
}

pub fn prealt(args: &[&str]) -> Run {
    prealt_env(args, &[])
}

pub struct Dir(pub tempfile::TempDir);

impl Dir {
    pub fn new() -> Self {
        Dir(tempfile::tempdir().expect("tempdir"))
    }

    pub fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }

    pub fn write(&self, name: &str, text: &str) -> String {
        let p = self.path(name);
        std::fs::write(&p, text).expect("write");
        p.display().to_string()
    }

    pub fn file(&self, name: &str, f: &AlgebraFile) -> String {
        self.write(name, &f.to_json())
    }

    /// Writes a catalog entry and returns its path.
    pub fn catalog(&self, name: &str, field: &str) -> String {
        let run = prealt(&["catalog", name, "--field", field]);
        assert_eq!(run.code, 0, "{}", run.stderr);
        self.write(&format!("{name}-{field}.json"), &run.stdout)
    }
}

pub fn read(path: &Path) -> AlgebraFile {
    AlgebraFile::parse(&std::fs::read_to_string(path).expect("read")).expect("parses")
}

pub fn parse(text: &str) -> AlgebraFile {
    AlgebraFile::parse(text).expect("parses")
}

pub const CATALOG: [&str; 8] =
    ["zero-1", "zero-3", "n2", "p2", "p3-graded", "octonion", "halved-idempotent", "halved-field-negative"];
