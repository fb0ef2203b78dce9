use std::path::PathBuf;
use std::process::Command;

pub struct Run {
    pub stdout: String,
    pub code: i32,
}

/// Runs the built `floorq` binary with the soft-cap override cleared.
pub fn floorq(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_floorq"))
        .args(args)
        .env_remove("FLOORQ_MAX_X")
        .output()
        .expect("failed to start floorq");
    Run {
        stdout: String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        code: out.status.code().expect("floorq was killed by a signal"),
    }
}

pub fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).expect("golden file is readable")
}

/// Runs every `args | expected first line` entry of a golden table and
/// returns a description of each mismatch.
pub fn check_table(name: &str) -> Vec<String> {
    let mut failures = Vec::new();
    for line in golden(name).lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (args, expected) = line.split_once(" | ").expect("table line has ` | `");
        let args: Vec<&str> = args.split_whitespace().collect();
        let run = floorq(&args);
        let first = run.stdout.lines().next().unwrap_or("");
        if first != expected {
            failures.push(format!(
                "`floorq {}` printed {first:?}, expected {expected:?}",
                args.join(" ")
            ));
        }
    }
    failures
}

/// Splits CSV output into a header and rows of fields.
pub fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines
        .next()
        .unwrap_or("")
        .split(',')
        .map(str::to_string)
        .collect();
    let rows = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    (header, rows)
}
