//! The `floorq` command line: argument parsing, command dispatch and output
//! rendering. [`run`] executes one invocation in-process.

mod args;
mod commands;
mod render;

use std::ffi::OsString;

use clap::Parser;
use floorq::{Error, Limits};

use crate::args::{positive, Cli};

/// Environment variable that overrides the soft caps on sweep sizes.
pub const MAX_X_VAR: &str = "FLOORQ_MAX_X";

#[derive(Debug)]
pub(crate) enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Overflow(_)) => 3,
            _ => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

/// What one invocation printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

fn limits(max_x: Option<&str>) -> Result<Limits, CliError> {
    match max_x {
        None => Ok(Limits::default()),
        Some(v) => positive(v)
            .map(Limits::uniform)
            .map_err(|e| CliError::Usage(format!("{MAX_X_VAR}: {e}"))),
    }
}

/// Runs `floorq` with `args` (including the program name). `max_x` is the
/// value of [`MAX_X_VAR`], if set.
///
/// Exit codes: 0 success (and `check` true), 1 `check` false, 2 usage or
/// soft-cap errors, 3 arithmetic overflow.
pub fn run<I, T>(args: I, max_x: Option<&str>) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = u8::try_from(e.exit_code()).unwrap_or(2);
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Invocation {
                stdout,
                stderr,
                code,
            };
        }
    };
    match limits(max_x).and_then(|l| commands::run(cli.command, cli.format, &l)) {
        Ok(out) => Invocation {
            stdout: out.text,
            stderr: String::new(),
            code: out.code,
        },
        Err(e) => Invocation {
            stdout: String::new(),
            stderr: format!("floorq: error: {e}\n"),
            code: e.exit_code(),
        },
    }
}
