//! `kratzer` command-line front end.
//!
//! Exit codes: 0 success, 1 domain or physics error (including a failed
//! `verify`), 2 usage error.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::Parser;
use thiserror::Error;

pub use args::{Cli, Command};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] kratzer_core::Error),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: io::Error,
    },
    #[error("{0}")]
    ToleranceBreach(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use kratzer_core::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(E::Parse(_) | E::Configuration(_)) => 2,
            CliError::Core(_) | CliError::Io { .. } | CliError::ToleranceBreach(_) => 1,
        }
    }
}

/// Parses `argv` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    match commands::execute(&cli.command, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
