mod args;
mod commands;
mod report;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::{run, RunConfig};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.max_enum == 0 {
        eprintln!("error: --max-enum must be positive");
        return ExitCode::from(2);
    }
    let cfg = RunConfig { seed: cli.seed, max_enum: cli.max_enum };
    let report = match run(&cli.command, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = report.write(cli.out.as_deref()) {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if report.pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
