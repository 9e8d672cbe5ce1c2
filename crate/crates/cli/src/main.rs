use std::process::ExitCode;

use clap::Parser;
use svm_asymptotics_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("svm-asym: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
