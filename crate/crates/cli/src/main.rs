// SPDX-License-Identifier: Apache-2.0

mod args;
mod commands;
mod error;
mod model;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::{CliError, EXIT_USAGE};

fn run(cli: &Cli) -> Result<(), CliError> {
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let result = match &cli.command {
        Command::Spectrum(a) => commands::spectrum(a, &mut out),
        Command::Wavefunction(a) => commands::wavefunction(a, &mut out),
        Command::Verify(a) => commands::verify(a, &mut out),
        Command::Constants => commands::constants(&mut out),
        Command::Molecules(a) => commands::molecules(a, &mut out),
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::VerificationFailed) => ExitCode::from(error::EXIT_VERIFY),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
