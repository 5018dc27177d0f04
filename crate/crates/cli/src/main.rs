mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use mubose::{Control, Error};

use args::{Cli, Format};

const EXIT_DOMAIN: u8 = 2;
const EXIT_SUMMATION: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) if e.is_summation_failure() => EXIT_SUMMATION,
            CliError::Lib(_) | CliError::Io(_) => EXIT_DOMAIN,
            CliError::Usage(_) => EXIT_USAGE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "usage: {msg}"),
            CliError::Io(e) => write!(f, "cannot write output: {e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mubose: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let ctl = Control::with_tol(cli.common.tol)?;
    let out = commands::run(&cli.command, cli.common.mu, &ctl)?;
    if let Some(w) = &out.warning {
        eprintln!("mubose: warning: {w}");
    }
    let text = match cli.common.format {
        Format::Csv => out.table.to_csv(),
        Format::Json => out.table.to_json(),
    };
    match &cli.common.output {
        Some(path) => std::fs::write(path, text).map_err(CliError::Io),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(CliError::Io),
    }
}
