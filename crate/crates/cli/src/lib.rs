//! Command-line front end: argument parsing, dispatch, canonical JSON
//! reports and exit codes (0 pass, 1 failed verification, 2 invalid input).

pub mod acceptance;
pub mod commands;
pub mod report;

use clap::error::ErrorKind;
use clap::Parser;

use crate::commands::Cli;
use crate::report::{Report, Verdict};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<Report>,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_PASS, stdout: text, stderr: String::new(), report: None }
                }
                _ => Outcome { code: EXIT_INVALID, stdout: String::new(), stderr: text, report: None },
            };
        }
    };
    let result = match cli.jobs {
        Some(0) => return invalid("--jobs must be positive".into()),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| commands::execute(&cli.command)),
            Err(e) => return invalid(e.to_string()),
        },
        None => commands::execute(&cli.command),
    };
    match result {
        Ok(report) => {
            let code = if report.verdict == Verdict::Fail { EXIT_FAIL } else { EXIT_PASS };
            let mut stdout = if cli.pretty { report.to_pretty() } else { report.to_json() };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome { code, stdout, stderr: String::new(), report: Some(report) }
        }
        Err(e) => invalid(e.to_string()),
    }
}

fn invalid(msg: String) -> Outcome {
    Outcome { code: EXIT_INVALID, stdout: String::new(), stderr: format!("error: {msg}\n"), report: None }
}
