//! Command-line front end over the streamcsp crates.

pub mod args;
pub mod battery;
pub mod commands;
pub mod error;
pub mod report;

use std::io::BufRead;

use args::{Cli, Command};
use commands::Outcome;
use error::{CliError, Result};

/// Execute a parsed command line. `stdin` backs any input given as `-` or
/// left out.
pub fn run(cli: &Cli, stdin: &mut dyn BufRead) -> Result<Outcome> {
    let format = cli.format;
    match &cli.command {
        Command::Alpha(p) => commands::cmd_alpha(p, format),
        Command::Analyze(a) => commands::cmd_analyze(a, format),
        Command::Gen(g) => commands::cmd_gen(g),
        Command::Estimate(e) => commands::cmd_estimate(e, format, stdin),
        Command::Assign(a) => commands::cmd_assign(a, format, stdin),
        Command::Solve(i) => commands::cmd_solve(i.input.as_deref(), format, stdin),
        Command::Ordsolve(i) => commands::cmd_ordsolve(i.input.as_deref(), format, stdin),
        Command::Repro(r) => commands::cmd_repro(r, format),
    }
}

/// Run and deliver the output to `--out` or `stdout`.
pub fn run_to(cli: &Cli, stdin: &mut dyn BufRead, stdout: &mut dyn std::io::Write) -> Result<i32> {
    let outcome = run(cli, stdin)?;
    match &cli.out {
        Some(path) => std::fs::write(path, &outcome.body)
            .map_err(|source| CliError::Output { path: path.display().to_string(), source })?,
        None => stdout
            .write_all(outcome.body.as_bytes())
            .map_err(|source| CliError::Output { path: "stdout".into(), source })?,
    }
    Ok(outcome.code)
}
