//! `polyface`: batch front end for the exact polyhedra kernel.

mod args;
mod commands;
mod input;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Exit statuses beyond success.
pub mod status {
    /// A requested check ran and reported a violation.
    pub const CHECK_FAILED: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const PRECONDITION: u8 = 3;
    pub const INVARIANT: u8 = 4;
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => {
            print!("{}", report.stdout);
            ExitCode::from(report.status)
        }
        Err(e) => {
            eprintln!("polyface: {}", e.message);
            ExitCode::from(e.status)
        }
    }
}
