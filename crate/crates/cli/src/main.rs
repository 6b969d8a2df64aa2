use std::io::Write;
use std::process::ExitCode;

use chpi::{run, CliError, RunConfig};
use clap::Parser;

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    match run(&cfg).and_then(|out| {
        match &cfg.output_path {
            Some(path) => std::fs::write(path, &out.text)?,
            None => std::io::stdout().lock().write_all(out.text.as_bytes())?,
        }
        Ok::<_, CliError>(out.success)
    }) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("chpi: {e}");
            ExitCode::from(2)
        }
    }
}
