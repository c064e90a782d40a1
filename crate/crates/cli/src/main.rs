use std::process::ExitCode;

use clap::Parser;
use doublelift_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                print!("{}", report.render_json());
            } else {
                print!("{}", report.render_text());
            }
            match report.first_failure() {
                None => ExitCode::SUCCESS,
                Some((structure, check)) => {
                    eprintln!("first failing law: {structure}: {} at {:?}", check.law, check.witness.as_deref().unwrap_or(&[]));
                    ExitCode::FAILURE
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
