use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use sr_frobenius::cli::{self, Command, Options, Outcome, Overrides};
use sr_frobenius::frobenius::C0Convention;

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum C0Flag {
    Zero,
    One,
}

/// Frobenius algebra data of Stanley-Reisner rings.
#[derive(Debug, Parser)]
#[command(name = "srfrob", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,

    /// JSON input document.
    #[arg(long, conflicts_with = "ideal")]
    input: Option<PathBuf>,

    /// Inline generators, e.g. "x1*x5, x2*x5, x2*x3, x2*x4".
    #[arg(long)]
    ideal: Option<String>,

    /// Characteristic; overrides the document's value.
    #[arg(long)]
    p: Option<u64>,

    /// Number of variables for inline input (defaults to the largest index).
    #[arg(long)]
    variables: Option<usize>,

    /// Largest Frobenius degree e to compute (default 5, or 3 for the random suite).
    #[arg(long)]
    emax: Option<u32>,

    #[arg(long, value_enum, default_value = "json")]
    format: Format,

    /// Seed of the random suite run by `verify` when no ideal is given.
    #[arg(long)]
    seed: Option<u64>,

    /// Number of random ideals for `verify` without an ideal.
    #[arg(long)]
    instances: Option<usize>,

    /// Constant term convention of the generating function.
    #[arg(long, value_enum, default_value = "zero")]
    c0_convention: C0Flag,

    /// `genfun` only: take this μ instead of computing it.
    #[arg(long)]
    mu: Option<usize>,
}

fn load(args: &Args) -> Result<Option<cli::InputDocument>, String> {
    let overrides = Overrides { p: args.p, variables: args.variables, e_max: args.emax };
    let text = match (&args.input, &args.ideal) {
        (Some(path), _) => std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
        (None, Some(inline)) => inline.clone(),
        (None, None) => return Ok(None),
    };
    cli::parse_input(&text, overrides).map(Some).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let args = Args::parse();
    let options = Options {
        e_max: args.emax,
        c0: match args.c0_convention {
            C0Flag::Zero => C0Convention::Zero,
            C0Flag::One => C0Convention::One,
        },
        seed: args.seed,
        mu: args.mu,
        instances: args.instances,
        p: args.p,
    };
    let outcome = match load(&args) {
        Ok(doc) => cli::run_command(args.command, doc.as_ref(), &options),
        Err(message) => Outcome::input_error(message),
    };
    match args.format {
        Format::Json => println!("{}", outcome.report),
        Format::Text => print!("{}", cli::render_text(&outcome.report)),
    }
    ExitCode::from(outcome.exit_code as u8)
}
