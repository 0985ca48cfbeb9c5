//! `hopfx`: check, convert, round-trip and generate Hopf crossed modules,
//! crossed squares and their internal-category counterparts.
//!
//! Exit status is 0 when everything checked passes, 1 on an axiom or
//! precondition failure, and 2 on malformed input or an exhausted budget.

mod commands;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopf_crossed::exactla::Field;
use hopf_crossed::{Config, Error, Paranoia};

use commands::{GenParams, Outcome};

#[derive(Parser)]
#[command(name = "hopfx", version, about = "Exact checks and conversions for Hopf crossed modules and crossed squares")]
struct Cli {
    #[command(flatten)]
    flags: Flags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Flags {
    /// Ground field, `q` or `fp:<prime>`; overrides the field declared in manifests.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Whether constructions re-check what they build.
    #[arg(long, global = true, default_value = "auto")]
    paranoid: String,
    /// Seed of the deterministic sample used above the dimension ceiling.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    sample_seed: u64,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    report: Format,
    /// Largest number of matrix entries a single materialization may use.
    #[arg(long, global = true, default_value_t = 50_000_000)]
    budget: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom of the object in a manifest.
    Check { kind: String, path: PathBuf },
    /// Convert between equivalent descriptions.
    Convert {
        from: String,
        to: String,
        path: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Convert forth and back and verify the comparison isomorphisms.
    Roundtrip { kind: String, path: PathBuf },
    /// Write a manifest for a built-in example.
    Gen {
        name: String,
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        xmod: Option<String>,
        /// Comma-separated element labels of the horizontal subgroup.
        #[arg(long)]
        horizontal: Option<String>,
        /// Comma-separated element labels of the vertical subgroup.
        #[arg(long)]
        vertical: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) | Error::Budget { .. } => 2,
        Error::Axiom(_) | Error::Precondition(_) => 1,
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let flags = &cli.flags;
    let field: Option<Field> = flags.field.as_deref().map(str::parse).transpose()?;
    let paranoia: Paranoia = flags.paranoid.parse()?;
    let cfg = Config { paranoia, sample_seed: flags.sample_seed, budget: flags.budget, ..Config::default() };
    match &cli.command {
        Command::Check { kind, path } => commands::check(kind, path, field, &cfg),
        Command::Convert { from, to, path, out } => commands::convert(from, to, path, out, field, &cfg),
        Command::Roundtrip { kind, path } => commands::roundtrip(kind, path, field, &cfg),
        Command::Gen { name, group, algebra, xmod, horizontal, vertical, out } => {
            let params = GenParams {
                group: group.as_deref(),
                algebra: algebra.as_deref(),
                xmod: xmod.as_deref(),
                horizontal: horizontal.as_deref(),
                vertical: vertical.as_deref(),
            };
            commands::generate(name, &params, out, field.unwrap_or(Field::Rationals), &cfg)
        }
    }
}

fn print_report(report: &hopf_crossed::Report, format: Format) {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            for report in &outcome.reports {
                print_report(report, cli.flags.report);
            }
            for path in &outcome.written {
                println!("wrote {}", path.display());
            }
            ExitCode::from(if outcome.passed() { 0 } else { 1 })
        }
        Err(e) => {
            if let Error::Axiom(report) = &e {
                print_report(report, cli.flags.report);
            }
            eprintln!("hopfx: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
