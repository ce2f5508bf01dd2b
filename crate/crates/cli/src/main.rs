use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

mod commands;
mod report;

use commands::Cli;
use report::{exit_code_for, CommandReport};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let start = Instant::now();
    match commands::run(&cli.command) {
        Ok(outcome) => {
            let report = CommandReport {
                command: outcome.command,
                inputs: outcome.inputs,
                result: outcome.result,
                certified: outcome.certified,
                elapsed_ms: start.elapsed().as_millis() as u64,
            };
            let body = if cli.json {
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                outcome.text
            };
            // A closed pipe (e.g. `| head`) is not an error of the computation.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(if report.certified { 0 } else { 3 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
