use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::CliError;

/// Seed of the random odd side counts sampled by `certify`.
pub const DEFAULT_SEED: u64 = 1047;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Π(n) with both accuracy metrics and the theorem bounds.
    Table,
    /// Certify the two-sided relative-error bound.
    Certify,
    /// Signed errors of several approximants side by side.
    Compare,
    /// Leading error constants of the sin x / x convergents.
    Convergents,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    #[value(name = "md", alias = "markdown")]
    Markdown,
}

/// Everything a run depends on. Identical configs give identical output.
#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "chpi", version, about = "Polygon approximants of pi and the Chakrabarti-Hudson bound")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    #[arg(long, default_value_t = 32)]
    pub n_min: u64,
    #[arg(long, default_value_t = 1024)]
    pub n_max: u64,
    /// Use n_min, 2·n_min, 4·n_min, … instead of every integer.
    #[arg(long)]
    pub doubling: bool,
    /// Working precision in bits.
    #[arg(long = "bits", default_value_t = 256)]
    pub precision_bits: usize,
    /// Number of random odd side counts added by `certify`.
    #[arg(long = "grid", default_value_t = 64)]
    pub grid_points: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long = "out")]
    pub output_path: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

impl RunConfig {
    /// Defaults for `command`, as if no flags were given.
    pub fn new(command: Command) -> Self {
        Self {
            command,
            n_min: 32,
            n_max: 1024,
            doubling: false,
            precision_bits: 256,
            grid_points: 64,
            format: Format::Csv,
            output_path: None,
            seed: DEFAULT_SEED,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.precision_bits < 64 {
            return Err(CliError::Config(format!(
                "precision too low: --bits must be at least 64, got {}",
                self.precision_bits
            )));
        }
        if self.grid_points < 8 {
            return Err(CliError::Config(format!(
                "--grid must be at least 8, got {}",
                self.grid_points
            )));
        }
        // certify reports an empty range as an empty, passing run
        if self.n_min > self.n_max && self.command != Command::Certify {
            return Err(CliError::Config(format!(
                "--n-min {} exceeds --n-max {}",
                self.n_min, self.n_max
            )));
        }
        Ok(())
    }

    /// Side counts of the run, ascending.
    pub fn side_counts(&self) -> Vec<u64> {
        if self.n_min > self.n_max {
            return Vec::new();
        }
        if !self.doubling {
            return (self.n_min..=self.n_max).collect();
        }
        let mut out = Vec::new();
        let mut n = self.n_min.max(1);
        while n <= self.n_max {
            out.push(n);
            match n.checked_mul(2) {
                Some(m) => n = m,
                None => break,
            }
        }
        out
    }

    /// Significant digits printed for every decimal value.
    pub fn digits(&self) -> usize {
        let full = (self.precision_bits as f64 * std::f64::consts::LOG10_2).ceil() as usize;
        full.saturating_sub(5).max(1)
    }
}
