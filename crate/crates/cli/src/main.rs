use std::process::ExitCode;

use clap::Parser;
use uedetect::{run, Cli};

fn main() -> ExitCode {
    // clap exits with status 2 on invalid flags
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            outcome.status.into()
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.status.into()
        }
    }
}
