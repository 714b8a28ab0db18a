use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nichols_core::scalars::{parse_literal, ScalarLiteral, Var};
use nichols_core::sym::Word;
use nichols_core::symmetrizer::DEFAULT_DEGREE_CAP;

#[derive(Debug, Parser)]
#[command(name = "nichols", version, about = "Exact Nichols algebra computations for V_abe")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Directory for cached dimension profiles [default: $HOME/.cache/nichols].
    #[arg(long, global = true, env = "NICHOLS_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Worker threads [default: one per core].
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graded dimensions of the Nichols algebra, degree by degree.
    Dim(DimArgs),
    /// The orbit-block entry F~(x|y).
    Ftilde(FtildeArgs),
    /// The table E_{k,s}^n of the t-subgroup.
    Etable(EtableArgs),
    /// The orbit partition of words of length n.
    Orbits(OrbitsArgs),
    /// Check every closed form against the engines.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct DimArgs {
    /// Parameter a, e.g. `1`, `-2/3`, `zeta(6)^5`.
    #[arg(short = 'a', value_parser = parse_scalar, allow_hyphen_values = true)]
    pub a: ScalarLiteral,
    #[arg(short = 'b', value_parser = parse_scalar, allow_hyphen_values = true)]
    pub b: ScalarLiteral,
    #[arg(short = 'e', value_parser = parse_scalar, allow_hyphen_values = true)]
    pub e: ScalarLiteral,
    /// Highest degree computed before giving up.
    #[arg(long, default_value_t = DEFAULT_DEGREE_CAP, value_parser = parse_cap)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct FtildeArgs {
    #[arg(value_parser = parse_word)]
    pub x: Word,
    #[arg(value_parser = parse_word)]
    pub y: Word,
    /// Specialize a parameter, e.g. `--set e=1`. Repeatable.
    #[arg(long = "set", value_parser = parse_assignment, allow_hyphen_values = true)]
    pub set: Vec<(Var, ScalarLiteral)>,
}

#[derive(Debug, Args)]
pub struct EtableArgs {
    #[arg(short = 'n')]
    pub n: usize,
    /// Largest k listed.
    #[arg(short = 'k')]
    pub k_max: Option<u32>,
}

#[derive(Debug, Args)]
pub struct OrbitsArgs {
    #[arg(short = 'n')]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest word length checked.
    #[arg(long = "nmax", default_value_t = 9)]
    pub n_max: usize,
    /// Largest degree computed by the dimension checks.
    #[arg(long, default_value_t = 14)]
    pub cap: usize,
}

fn parse_scalar(text: &str) -> Result<ScalarLiteral, String> {
    let lit = parse_literal(text).map_err(|e| e.to_string())?;
    if lit.is_zero() {
        return Err("parameters must be nonzero".into());
    }
    Ok(lit)
}

fn parse_cap(text: &str) -> Result<usize, String> {
    let cap: usize = text.parse().map_err(|_| format!("{text:?} is not a degree"))?;
    if cap < 2 {
        return Err("the degree cap must be at least 2".into());
    }
    Ok(cap)
}

fn parse_word(text: &str) -> Result<Word, String> {
    text.parse().map_err(|e: nichols_core::Error| e.to_string())
}

fn parse_assignment(text: &str) -> Result<(Var, ScalarLiteral), String> {
    let (name, value) = text
        .split_once('=')
        .ok_or_else(|| format!("expected VAR=VALUE, found {text:?}"))?;
    let var = match name.trim() {
        "a" => Var::A,
        "b" => Var::B,
        "e" => Var::E,
        other => return Err(format!("unknown parameter {other:?}; expected a, b or e")),
    };
    Ok((var, parse_scalar(value)?))
}
