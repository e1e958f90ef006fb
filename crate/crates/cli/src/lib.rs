//! Command-line driver: parses a run configuration, dispatches to the
//! engines in `mcub-core`, and emits JSON, TSV or SVG.

pub mod args;
pub mod chart;
pub mod commands;
pub mod emit;

use anyhow::Result;

use args::{ChartCommand, Cli, Command, Format};

/// Process exit status for a run whose checks did not all pass. Usage
/// errors caught by the argument parser exit with 2.
pub const EXIT_CHECK_FAILED: i32 = 3;
/// Exit status for usage, input and I/O errors.
pub const EXIT_ERROR: i32 = 1;

pub fn default_format(cli: &Cli) -> Format {
    match (&cli.format, &cli.command) {
        (Some(f), _) => *f,
        (None, Command::Chart(ChartCommand::Render { .. })) => Format::Svg,
        (None, _) => Format::Json,
    }
}

/// Runs the command and writes its output. Returns whether every check
/// the command performed passed.
pub fn run(cli: &Cli) -> Result<bool> {
    let out = commands::dispatch(cli)?;
    let format = default_format(cli);
    let text = out.render(format)?;
    match emit::destination(cli.out.as_deref(), cli.out_dir.as_deref(), &out.name, format) {
        Some(path) => emit::write_atomic(&path, &text)?,
        None => {
            use std::io::Write;
            let mut so = std::io::stdout().lock();
            so.write_all(text.as_bytes())?;
            so.flush()?;
        }
    }
    Ok(out.holds)
}

/// Invariant violations reported by an engine count as failed checks.
pub fn exit_code(r: &Result<bool>) -> i32 {
    match r {
        Ok(true) => 0,
        Ok(false) => EXIT_CHECK_FAILED,
        Err(e) => match e.downcast_ref::<mcub_core::Error>() {
            Some(mcub_core::Error::Invariant(_)) => EXIT_CHECK_FAILED,
            _ => EXIT_ERROR,
        },
    }
}
