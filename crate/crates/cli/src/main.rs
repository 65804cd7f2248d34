mod args;
mod commands;
mod output;

use std::ffi::OsString;
use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

use args::{Cli, Format};
use commands::Failure;

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

fn status_of(e: &shabat::Error) -> &'static str {
    use shabat::Error::*;
    match e {
        Parse { .. } => "parse_error",
        Precision { .. } | SingularSystem { .. } | RootFinding(_) | Postcondition(_) => {
            "precision_error"
        }
        _ => "domain_error",
    }
}

/// Parse and execute one invocation without touching the process streams.
pub fn run<I, T>(argv: I) -> Run
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Run {
                stdout: e.to_string(),
                stderr: String::new(),
                code: 0,
            };
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or_default();
            let payload =
                json!({ "kind": "usage", "message": first.trim_start_matches("error: ") });
            return Run {
                stdout: output::render(Format::Json, "", "parse_error", &payload),
                stderr: rendered,
                code: 2,
            };
        }
    };
    let name = commands::name(&cli.command);
    let (status, payload, code, stderr) = match commands::execute(&cli.command) {
        Ok(v) => ("ok", v, 0, String::new()),
        Err(Failure::Verification(v)) => (
            "verification_failed",
            v,
            1,
            format!("{name}: verification failed\n"),
        ),
        Err(Failure::Usage(msg)) => (
            "parse_error",
            json!({ "kind": "usage", "message": msg }),
            2,
            format!("error: {msg}\n"),
        ),
        Err(Failure::Lib(e)) => {
            let mut payload = json!({ "kind": e.kind(), "message": e.to_string() });
            if let shabat::Error::Parse { position, .. } = &e {
                payload["position"] = json!(position);
            }
            (status_of(&e), payload, 2, format!("error: {e}\n"))
        }
    };
    Run {
        stdout: output::render(cli.format, name, status, &payload),
        stderr,
        code,
    }
}

fn main() -> ExitCode {
    let r = run(std::env::args_os());
    // a closed stdout is not worth a panic
    let _ = std::io::stdout().write_all(r.stdout.as_bytes());
    let _ = std::io::stderr().write_all(r.stderr.as_bytes());
    ExitCode::from(r.code)
}
