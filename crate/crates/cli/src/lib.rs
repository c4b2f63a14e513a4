//! `swchan` command-line tool: campaign and report file formats plus the
//! four subcommands.
//!
//! Exit codes: 0 on success, 1 for bad flags or values, 2 for unreadable or
//! unusable input data. Every float written uses nine significant digits
//! with a `.` separator, so outputs are byte-stable across platforms.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::Parser;

pub mod args;
pub mod campaign;
mod commands;
pub mod error;
pub mod format;
pub mod report;

pub use commands::{load_antenna, parse_gamma, parse_grid, run, Io};
pub use error::{CliError, CliResult};

/// The whole tool behind `main`: parses `args` (program name first), runs
/// the command and returns the exit code.
pub fn main_with<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                return 1;
            }
            let _ = stdout.write_all(text.as_bytes());
            return 0;
        }
    };
    match run(&cli.command, &mut Io { stdin, stdout }) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "swchan: error: {e}");
            e.exit_code()
        }
    }
}
