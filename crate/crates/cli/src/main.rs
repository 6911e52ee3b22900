use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use sombrero_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.render());
            let _ = std::io::stdout().flush();
            for line in &outcome.diagnostics {
                eprintln!("{line}");
            }
            ExitCode::from(outcome.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
