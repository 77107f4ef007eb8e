//! `wcauchy`: evaluate Itô–Hermite polynomials, Cauchy transforms and
//! projections, export Gram/range/SVD tables, and run the verification
//! suites.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage or file error,
//! 3 numeric-domain error.

mod args;
mod commands;
mod format;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use weighted_cauchy::VerifyConfig;

use args::{Cli, Command, Common};
use commands::CliError;

fn load_config(common: &Common) -> Result<VerifyConfig, CliError> {
    let mut config = match &common.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Setup(format!("cannot read config {}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| CliError::Setup(format!("invalid config {}: {e}", path.display())))?
        }
        None => VerifyConfig::default(),
    };
    if let Some(nr) = common.nr {
        config.nr = nr;
    }
    if let Some(nt) = common.ntheta {
        config.ntheta = nt;
    }
    if let Some(pad) = common.radius_pad {
        config.radius_pad = pad;
    }
    Ok(config)
}

fn write_text(path: Option<&std::path::Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Setup(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Setup(format!("cannot write output: {e}")))
        }
    }
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    let config = load_config(&cli.common)?;
    let output = commands::run(&cli.command, &config, cli.common.format)?;
    write_text(cli.common.out.as_deref(), &output.text)?;
    if let (Command::Verify { summary: Some(path), .. }, Some(text)) = (&cli.command, &output.summary) {
        write_text(Some(path), text)?;
    } else if let Some(text) = &output.summary {
        eprint!("{text}");
    }
    Ok(output.pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Setup(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
