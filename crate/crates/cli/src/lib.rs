//! Command-line front end for `chpi-core`: tables of Π(n), certification
//! runs of the relative-error bound, cross-approximant comparisons and the
//! error constants of the `sin x / x` convergents.
//!
//! Every command is a pure function of its [`RunConfig`], so the same
//! configuration always produces the same bytes.

pub mod commands;
pub mod config;
pub mod emit;

use chpi_core::PrecisionContext;

pub use crate::config::{Command, Format, RunConfig, DEFAULT_SEED};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Core(#[from] chpi_core::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// Rendered output of a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    /// Every certification or validation in the output held.
    pub success: bool,
}

/// Validate `cfg` and execute its command.
pub fn run(cfg: &RunConfig) -> Result<Output, CliError> {
    cfg.validate()?;
    let ctx = PrecisionContext::new(cfg.precision_bits)?;
    let out = match cfg.command {
        Command::Table => commands::run_table(cfg, &ctx)?,
        Command::Certify => commands::run_certify(cfg, &ctx)?,
        Command::Compare => commands::run_compare(cfg, &ctx)?,
        Command::Convergents => commands::run_convergents(cfg, &ctx)?,
    };
    Ok(Output {
        text: out.table.render(cfg.format)?,
        success: out.success,
    })
}
