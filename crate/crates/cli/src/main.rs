use std::io::Write;
use std::process::ExitCode;

use floorq_cli::{run, MAX_X_VAR};

fn main() -> ExitCode {
    let max_x = match std::env::var(MAX_X_VAR) {
        Ok(v) => Some(v),
        Err(std::env::VarError::NotPresent) => None,
        Err(e) => {
            eprintln!("floorq: error: {MAX_X_VAR}: {e}");
            return ExitCode::from(2);
        }
    };
    let out = run(std::env::args_os(), max_x.as_deref());
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(out.stdout.as_bytes())
        .and_then(|()| stdout.flush())
        .is_err()
    {
        return ExitCode::from(2);
    }
    eprint!("{}", out.stderr);
    ExitCode::from(out.code)
}
