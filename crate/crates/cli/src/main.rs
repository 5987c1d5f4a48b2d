//! `ddl`: sieve estimates, analytic products and inversions for the
//! distribution of `n/σ(n)`.

mod args;
mod commands;
mod output;

use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::Parser;

use args::{AnalyticOp, Cli, Command};

const EXIT_VALIDATION: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_IO: u8 = 1;

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<ddl::Error>() {
        Some(e) if e.is_resource_refusal() => EXIT_RESOURCE,
        Some(ddl::Error::Io(_)) => EXIT_IO,
        Some(_) => EXIT_VALIDATION,
        None if err.downcast_ref::<std::io::Error>().is_some() => EXIT_IO,
        None => EXIT_VALIDATION,
    }
}

fn wants_gnuplot(cmd: &Command) -> bool {
    matches!(
        cmd,
        Command::Estimate { gnuplot: true, .. }
            | Command::Lattice { gnuplot: true, .. }
            | Command::Invert { gnuplot: true, .. }
            | Command::Analytic { op: AnalyticOp::Psi { gnuplot: true, .. } }
    )
}

fn run(cli: &Cli) -> Result<()> {
    let gnuplot = wants_gnuplot(&cli.command);
    if gnuplot && cli.run.output.is_none() {
        bail!("--gnuplot needs --output");
    }
    let config = serde_json::to_value(cli)?;
    let start = Instant::now();
    let report = commands::run(&cli.command, &cli.run)?;
    let meta = output::metadata(&config, start.elapsed().as_secs_f64());
    if let Some(gp) = output::emit(&report, cli.run.format, cli.run.output.as_deref(), gnuplot, &meta)? {
        eprintln!("gnuplot script: {}", gp.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
