//! Command-line surface for hforge: file transforms, verification sweeps,
//! operation counts and benchmark reports.

pub mod cli;
pub mod commands;
pub mod report;

use std::io::Write;
use std::process::ExitCode;

pub use cli::{Cli, Command};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    /// A verification property failed.
    Failed = 1,
    /// Bad usage, unreadable input or unwritable output.
    Usage = 2,
    /// A transform broke an invariant it guarantees.
    Internal = 3,
}

impl From<Exit> for ExitCode {
    fn from(e: Exit) -> ExitCode {
        ExitCode::from(e as u8)
    }
}

/// Runs one parsed command; normal output goes to `out`, diagnostics to `diag`.
pub fn run(cli: Cli, out: &mut dyn Write, diag: &mut dyn Write) -> Exit {
    match cli.command {
        Command::Transform(args) => commands::transform::run(&args, diag),
        Command::Verify(args) => commands::verify::run(&args, out, diag),
        Command::Bench(args) => commands::bench::run(&args, out, diag),
        Command::Opcount(args) => commands::opcount::run(&args, out, diag),
    }
}
