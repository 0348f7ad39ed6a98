//! Command-line frontend for `vieta-core`.

pub mod args;
pub mod commands;
pub mod record;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use vieta_core::oracle::Workers;

use args::Cli;

/// Run the command line and return the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let record = match commands::execute(&cli.command, Workers::new(cli.threads)) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            return e.exit_code();
        }
    };
    let text = if cli.json { record.to_json_line() } else { record.to_text() };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &text) {
            let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    if stdout.write_all(text.as_bytes()).is_err() {
        return 2;
    }
    0
}
