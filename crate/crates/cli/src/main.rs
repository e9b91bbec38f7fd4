use std::process::ExitCode;

use clap::Parser;

use outstanding_cli::commands::{execute, Cli, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok(outcome) => {
            let text = match cli.format {
                Format::Json => outcome.record.to_json() + "\n",
                Format::Tsv => outcome.record.to_tsv(),
            };
            print!("{text}");
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
