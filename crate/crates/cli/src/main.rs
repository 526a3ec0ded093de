//! `repscheme`: representation schemes of finitely presented algebras from
//! the command line.

mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use commands::{run, Command, Inputs};
use report::Report;

#[derive(Debug, Parser)]
#[command(name = "repscheme", version, about = "Representation schemes of finitely presented algebras")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized searches.
    #[arg(long, global = true, env = "REPSCHEME_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut inputs = Inputs::default();
    match run(&cli.command, cli.seed, &mut inputs) {
        Ok(outcome) => {
            let report = Report {
                command: cli.command.name().to_string(),
                version: env!("CARGO_PKG_VERSION").to_string(),
                inputs_digest: inputs.digest(),
                seed: cli.seed,
                result: outcome.result,
            };
            let text = if cli.json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(u8::from(outcome.failed))
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}
