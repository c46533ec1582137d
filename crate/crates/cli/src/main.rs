//! Command-line surface for the string-parametrization toolkit.
//!
//! Exit codes: 0 when every assertion in the requested report holds, 1
//! when a theorem-level assertion fails, 2 for unusable configuration.

mod commands;
mod config;
mod report;

use clap::Parser;

use config::{Cli, EXIT_ASSERTION};

fn main() {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(true) => {}
        Ok(false) => std::process::exit(EXIT_ASSERTION),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
