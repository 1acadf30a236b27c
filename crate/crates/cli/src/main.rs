//! `tracegep`: generate GEP instances, solve them by gradient ascent on the
//! trace objective, and run the inequality checkers.
//!
//! Exit codes: 0 success, 1 input error or failed check, 2 non-convergence.

mod check;
mod gen;
mod input;
mod json;
mod solve;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tracegep::Error;

use crate::input::CliError;

#[derive(Debug, Parser)]
#[command(name = "tracegep", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a random (A, B) pair with a prescribed spectrum for A.
    Gen(gen::GenArgs),
    /// Solve densely and by gradient ascent; print a JSON run report.
    Solve(solve::SolveArgs),
    /// Run inequality checkers on files or on seeded random instances.
    Check(check::CheckArgs),
}

const EXIT_INPUT: u8 = 1;
const EXIT_NOT_CONVERGED: u8 = 2;

fn fail(e: &CliError) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        CliError::Core(Error::Diverged { .. }) => ExitCode::from(EXIT_NOT_CONVERGED),
        _ => ExitCode::from(EXIT_INPUT),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match cli.command {
        Command::Gen(args) => match gen::run(&args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(&e),
        },
        Command::Solve(args) => match solve::run(&args) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(EXIT_NOT_CONVERGED),
            Err(e) => fail(&e),
        },
        Command::Check(args) => match check::run(&args) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(EXIT_INPUT),
            Err(e) => fail(&e),
        },
    }
}
