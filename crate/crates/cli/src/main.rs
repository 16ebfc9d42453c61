//! `hunters`: command-line front end for the Hunters and Rabbit toolkit.
//!
//! Exit codes: 0 on success, 1 on domain errors (bad graph, losing strategy,
//! class mismatch...), 2 on usage errors.

mod args;
mod commands;

use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match commands::run(cli) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(commands::Failure::Domain(report, err)) => {
            print!("{report}");
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
        Err(commands::Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
