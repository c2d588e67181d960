//! The `ascpat` command-line front end. Every command builds a [`Report`]
//! which is rendered as an aligned table, CSV, or one JSON line.
//!
//! Exit status: 0 on success, 1 for domain errors, 2 for usage errors, 3
//! when the size limit or time budget stops a run, 4 when a table or
//! conjecture check fails.

mod args;
mod commands;
mod fixtures;
mod output;

use std::ffi::OsString;
use std::time::{Duration, Instant};

use clap::Parser;

pub use args::{Cli, Command, Format};
pub use commands::MAPS;
pub use fixtures::{reference_rows, FixtureRow};
pub use output::{OutputRecord, Report, Status, FORMAT_VERSION};

use crate::enumerate::CountOptions;
use commands::{CliError, Ctx};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI on `args` (program name first) without touching the
/// process streams.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            return Outcome { code, stdout, stderr };
        }
    };
    let ctx = Ctx {
        opts: CountOptions {
            threads: cli.common.threads as usize,
            deadline: Some(Instant::now() + Duration::from_secs(cli.common.budget_seconds)),
            ..CountOptions::default()
        },
        max_n: cli.common.max_n,
        budget_seconds: cli.common.budget_seconds,
    };
    let result = match &cli.command {
        Command::Count(a) => commands::count(a, &ctx),
        Command::List(a) => commands::list(a, &ctx),
        Command::Dist(a) => commands::dist(a, &ctx),
        Command::Bijection(a) => commands::bijection(a),
        Command::Wilf(a) => commands::wilf(a, &ctx),
        Command::Table(a) => commands::table(a, &ctx),
        Command::Conjectures(a) => commands::conjectures(a, &ctx),
    };
    match result {
        Ok(report) => {
            let code = match report.status {
                Status::Ok => EXIT_OK,
                Status::Incomplete => EXIT_BUDGET,
                Status::Mismatch => EXIT_MISMATCH,
            };
            let stderr = report.notes.iter().map(|n| format!("note: {n}\n")).collect();
            Outcome {
                code,
                stdout: report.render(cli.common.format),
                stderr,
            }
        }
        Err(e) => {
            let code = match e {
                CliError::Usage(_) => EXIT_USAGE,
                CliError::Domain(_) => EXIT_DOMAIN,
                CliError::Budget(_) => EXIT_BUDGET,
            };
            Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

/// Entry point for the binary.
pub fn main() -> ! {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code)
}
