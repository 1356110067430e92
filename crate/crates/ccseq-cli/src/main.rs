use std::process::ExitCode;

use ccseq_cli::{init_threads, run, CliError, JobSpec};
use clap::Parser;

fn main() -> ExitCode {
    let job = JobSpec::parse();
    init_threads();
    match run(&job) {
        Ok(outcome) => match outcome.verification_passed {
            Some(false) => ExitCode::from(1),
            _ => ExitCode::SUCCESS,
        },
        Err(err @ CliError::Invalid(_)) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
        Err(err @ CliError::Io(_)) => {
            eprintln!("error: {err}");
            ExitCode::from(3)
        }
    }
}
