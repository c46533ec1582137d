//! Command dispatch: each subcommand builds one report; the caller emits
//! it and converts the `ok` flag into the process exit code.

mod expand;
mod module;
mod nok;
mod poly;
mod roots;
mod sagbi;
mod strings;
mod verify;

use crate::config::{Cli, CliResult, Command};
use crate::report::{emit, Report};

pub fn run(cli: Cli) -> CliResult<bool> {
    let report: Report = match cli.command {
        Command::Roots(args) => roots::run(&args)?,
        Command::Module(args) => module::run(&args)?,
        Command::Strings { cmd } => strings::run(&cmd)?,
        Command::Poly { cmd } => poly::run(&cmd)?,
        Command::VerifyMainTheorem(args) => verify::run(&args)?,
        Command::Expand(args) => expand::run(&args)?,
        Command::Nok { cmd } => nok::run(&cmd)?,
        Command::Sagbi { cmd } => sagbi::run(&cmd)?,
    };
    emit(&report, cli.format)?;
    Ok(report.ok)
}
