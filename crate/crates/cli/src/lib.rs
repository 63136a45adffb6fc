//! Command-line front end for `pathstat-core`: CSV ingestion, model fitting
//! and comparison reports, curve tables, sampling and pathway integrals.
//!
//! Exit statuses: 0 success, 1 usage error, 2 data error, 3 numeric error.
//! Every failure writes one JSON object `{"error": {...}}` to stderr.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod error;
pub mod ingest;
pub mod models;
pub mod table;

use clap::Parser;
use error::{CliError, EXIT_OK, EXIT_USAGE};
use std::ffi::OsString;
use std::io::Write;

/// Parses `args` (program name first), runs the command and writes the
/// artifact to `--output` or `stdout`. Returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let err = CliError::Usage(e.render().to_string().trim_end().to_string());
            let _ = writeln!(stderr, "{}", err.to_json());
            return EXIT_USAGE;
        }
    };
    match commands::execute(&cli).and_then(|a| emit(&cli, a, stdout)) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "{}", e.to_json());
            e.exit_code()
        }
    }
}

fn emit(cli: &args::Cli, artifact: commands::Artifact, stdout: &mut dyn Write) -> error::CliResult<()> {
    for (path, text) in &artifact.side_files {
        std::fs::write(path, text)?;
    }
    match &cli.global.output {
        Some(path) => std::fs::write(path, &artifact.text)?,
        None => stdout.write_all(artifact.text.as_bytes())?,
    }
    Ok(())
}
