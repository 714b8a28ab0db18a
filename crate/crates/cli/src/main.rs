mod args;
mod cache;
mod commands;
mod error;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use cache::ResultCache;
use error::{CliError, EXIT_INTERNAL};

fn run(cli: &Cli) -> Result<commands::Outcome, CliError> {
    if let Some(jobs) = cli.global.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.into())
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let cache = if cli.global.no_cache {
        None
    } else {
        cli.global
            .cache_dir
            .clone()
            .or_else(ResultCache::default_dir)
            .map(ResultCache::new)
    };
    let format = cli.global.format;
    match &cli.command {
        Command::Dim(a) => commands::dim(a, format, cache.as_ref()),
        Command::Ftilde(a) => commands::ftilde(a, format),
        Command::Etable(a) => commands::etable(a, format),
        Command::Orbits(a) => commands::orbits(a, format),
        Command::Verify(a) => commands::verify(a, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.body.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(EXIT_INTERNAL);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
