//! `kleincover`: census, tower inspection, and exact arithmetic verification
//! of Klein coverings of genus-3 hyperelliptic curves.
//!
//! Exit codes: 0 on success, 1 when a verification check (or the census
//! comparison) fails, 2 on usage or parameter errors.

mod commands;
mod dot;
mod json;
mod text;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "kleincover",
    version,
    about = "Klein coverings of genus-3 hyperelliptic curves: classification, towers, point-count verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify all 651 Klein subgroups and print the census.
    Classify(ClassifyArgs),
    /// Build the 16-node quotient tower of one Klein subgroup.
    Tower(TowerArgs),
    /// Run the arithmetic identity battery on one instance.
    Verify(VerifyArgs),
    /// Run seeded verification instances across all four cases round-robin.
    Fuzz(FuzzArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format; defaults to $KLEINCOVER_FORMAT, then text.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the rendering to a file instead of standard output.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct TowerArgs {
    /// Case label (I.1, I.2, II.1, II.2); uses its canonical generators.
    #[arg(long, conflicts_with = "gen")]
    case: Option<String>,
    /// Generator subset as Weierstrass indices, e.g. `12` or `1345`;
    /// give the flag twice.
    #[arg(long = "gen")]
    gen: Vec<String>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Case label (I.1, I.2, II.1, II.2); uses its canonical generators.
    #[arg(long, conflicts_with = "gen")]
    case: Option<String>,
    /// Generator subset as Weierstrass indices; give the flag twice.
    #[arg(long = "gen")]
    gen: Vec<String>,
    /// Base prime (at least 11).
    #[arg(long, short)]
    prime: u64,
    /// Eight comma-separated branch points; drawn from the seed if absent.
    #[arg(long)]
    points: Option<String>,
    /// Seed for the branch-point generator.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest exponent of q = p^e used (2..=4).
    #[arg(long, default_value_t = 4)]
    depth: u32,
    /// Perturb one count by +1 (negative control): `top:E` or `quad:CHI:E`.
    #[arg(long)]
    tamper: Option<String>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct FuzzArgs {
    /// Number of instances to run.
    #[arg(long, default_value_t = 20)]
    trials: u64,
    /// Base prime (at least 11).
    #[arg(long, short)]
    prime: u64,
    /// Base seed; instance i derives its own stream from it.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest exponent of q = p^e used (2..=4).
    #[arg(long, default_value_t = 3)]
    depth: u32,
    #[command(flatten)]
    out: OutputArgs,
}

/// A finished command: rendering plus exit status.
pub struct Outcome {
    pub rendering: String,
    pub failed_checks: bool,
}

/// Usage or parameter problem; always exits 2.
pub struct UsageError(pub String);

/// Adapter for `map_err` on anything printable.
pub fn usage<E: std::fmt::Display>(e: E) -> UsageError {
    UsageError(e.to_string())
}

fn resolve_format(requested: Option<Format>, allow_dot: bool) -> Result<Format, UsageError> {
    let format = match requested {
        Some(f) => f,
        None => match std::env::var("KLEINCOVER_FORMAT").ok().as_deref() {
            Some("json") => Format::Json,
            Some("dot") => Format::Dot,
            Some("text") | None => Format::Text,
            Some(other) => {
                return Err(UsageError(format!(
                    "KLEINCOVER_FORMAT={other} is not one of text, json, dot"
                )))
            }
        },
    };
    if format == Format::Dot && !allow_dot {
        return Err(UsageError(
            "dot output is only available for the tower command".into(),
        ));
    }
    Ok(format)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify(args) => commands::classify(&args),
        Command::Tower(args) => commands::tower(&args),
        Command::Verify(args) => commands::verify(&args),
        Command::Fuzz(args) => commands::fuzz(&args),
    };
    match result {
        Ok((outcome, output_path)) => {
            if let Some(path) = output_path {
                if let Err(e) = std::fs::write(&path, outcome.rendering.as_bytes()) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                let mut stdout = std::io::stdout().lock();
                if stdout.write_all(outcome.rendering.as_bytes()).is_err() {
                    return ExitCode::from(2);
                }
            }
            if outcome.failed_checks {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
