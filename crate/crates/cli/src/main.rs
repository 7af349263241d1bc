mod cli;
mod commands;
mod output;
mod settings;

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;

use cli::{Cli, Command};

/// Why a run stopped: bad input (exit 2) or a failed computation (exit 3).
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Compute(String),
}

impl Failure {
    pub fn usage(e: invsq_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<invsq_core::Error> for Failure {
    fn from(e: invsq_core::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let (common, table) = match cli.command {
        Command::Spectrum { common, sweep } => {
            let cfg = settings::resolve(&common)?;
            let strengths = settings::strengths(&sweep, &cfg)?;
            (common, commands::spectrum(cfg, &strengths)?)
        }
        Command::Wavefunction { common, kind, axis } => {
            let cfg = settings::resolve(&common)?;
            (common, commands::wavefunction(cfg, kind, axis)?)
        }
        Command::Scaling {
            common,
            eps_list,
            rho0_sq_list,
        } => {
            let cfg = settings::resolve(&common)?;
            let eps_list = eps_list
                .map(|l| settings::non_empty(l, "--eps-list"))
                .transpose()?;
            let strengths = rho0_sq_list
                .map(|l| settings::non_empty(l, "--rho0-sq-list"))
                .transpose()?;
            (common, commands::scaling(cfg, eps_list, strengths)?)
        }
        Command::Ladder { common, sweep } => {
            let cfg = settings::resolve(&common)?;
            let strengths = settings::strengths(&sweep, &cfg)?;
            (common, commands::ladder(cfg, &strengths)?)
        }
        Command::Converge { common, n_max_list } => {
            let mut cfg = settings::resolve(&common)?;
            let list = settings::non_empty(n_max_list, "--n-max-list")?;
            cfg.n_max = *list.iter().max().expect("non-empty");
            (common, commands::converge(cfg, &list)?)
        }
    };
    let text = table.render()?;
    write_out(common.out.as_deref(), &text)
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    let result = match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write output: {e}")),
    };
    result.map_err(Failure::Compute)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
