mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use legfrac_core::quad::QuadConfig;
use legfrac_core::Error;

use args::{Cli, Command};

/// Outcome of a command that did not succeed, mapped onto the exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or inputs outside the domain (exit 2).
    Usage(String),
    /// Some identity check failed (exit 1); details are already printed.
    Check,
    /// Evaluation or quadrature failed (exit 3).
    Numerical(String),
    /// The reader closed stdout early (e.g. `| head`).
    Closed,
}

impl Failure {
    pub fn from_core(e: Error) -> Self {
        match e {
            Error::DomainError(_)
            | Error::InvalidInput(_)
            | Error::DomainRejected { .. }
            | Error::UnknownIdentity(_)
            | Error::ConvergenceConditionViolated(_)
            | Error::NoRiemannRepresentation(_)
            | Error::RadiusViolation { .. }
            | Error::ShiftedArgumentOnCut(_)
            | Error::CollapseInvalid(_)
            | Error::TemplateMismatch(_) => Failure::Usage(e.to_string()),
            other => Failure::Numerical(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Numerical(format!("output error: {e}"))
    }
}

fn quad_config(cli: &Cli) -> QuadConfig {
    let mut cfg = QuadConfig::from_env();
    if let Some(n) = cli.nodes {
        cfg.nodes_per_unit = n as usize;
    }
    if let Some(t) = cli.quad_tol {
        cfg.tol = t;
    }
    cfg
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = quad_config(&cli);
    match &cli.command {
        Command::Eval { func, z } => commands::table(func, &[*z], cli.format, cfg),
        Command::Table { func, start, stop, count } => commands::table(func, &commands::path(*start, *stop, *count), cli.format, cfg),
        Command::Genfun(g) => commands::genfun(g, cli.format),
        Command::Verify(v) => commands::verify(v, cli.format, cfg),
        Command::Limits { mu, theta, nu_sweep, bessel } => commands::limits(*mu, *theta, nu_sweep, *bessel, cli.format, cfg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // clap spreads some messages over several lines before the usage block
            let msg = e.to_string();
            let text: Vec<&str> = msg
                .lines()
                .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
                .map(|l| l.trim())
                .filter(|l| !l.is_empty())
                .collect();
            eprintln!("legfrac: {}", text.join(" ").trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) | Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("legfrac: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("legfrac: numerical failure: {msg}");
            ExitCode::from(3)
        }
    }
}
