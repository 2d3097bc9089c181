//! Library side of the `rabi` command-line tool: argument model, commands
//! returning numeric tables, and CSV/JSON emission.

pub mod commands;
pub mod config;
mod error;
pub mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};

pub use config::{Cli, Command, Common, Format, LimitKind, ParamSpec, RunConfig};
pub use error::CliError;
pub use output::{read_csv, write_table, Table};

/// Runs the configured command on a pool of `cfg.threads` workers.
pub fn compute(cfg: &RunConfig) -> Result<Table, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cfg.threads {
        b = b.num_threads(n);
    }
    let pool = b.build().map_err(|e| CliError::Validation(e.to_string()))?;
    pool.install(|| commands::run_command(cfg))
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let output = cli.common.output.clone();
    let cfg = RunConfig::from_cli(cli)?;
    let table = compute(&cfg)?;
    match output {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            write_table(&cfg, &table, &mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            write_table(&cfg, &table, &mut w)?;
        }
    }
    Ok(())
}
