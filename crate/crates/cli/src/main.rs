//! `kron22`: pointwise queries, engine sweeps, catalog export, stretching
//! and saturation counterexamples.
//!
//! Exit codes: 0 on success, 1 on bad input, 2 when engines or fits
//! disagree.

mod args;
mod commands;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match commands::run(&cli) {
        Ok(o) => o,
        Err(f) => {
            eprintln!("error: {}", f.message());
            return f.exit_code();
        }
    };
    let written = match &cli.run.output {
        Some(path) => fs::write(path, &outcome.text),
        None => std::io::stdout().write_all(outcome.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    outcome.code
}
