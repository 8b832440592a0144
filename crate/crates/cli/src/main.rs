use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use qframe_cli::commands::{self, write_file};
use qframe_cli::{CliError, ExampleKind, Options, ReportDocument};

/// Frames, duals and projections in finite-dimensional quaternionic Hilbert spaces.
///
/// Exit status: 0 when every verdict passes, 1 when a verdict fails,
/// 2 on unreadable input or bad usage.
#[derive(Parser)]
#[command(name = "qframe", version)]
struct Cli {
    /// Tolerance applied to every residual.
    #[arg(long, global = true, default_value_t = qframe::DEFAULT_TOLERANCE)]
    tolerance: f64,
    /// Seed for probe vectors and random examples.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Format of the report on standard output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the structured report to this file.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Bounds, canonical dual, dual verification, minimal-norm spot checks and the Gram projection.
    Report { frame: PathBuf },
    /// Frame bounds and classification.
    Bounds { frame: PathBuf },
    /// Write the canonical dual as a frame file.
    Dual {
        frame: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check whether a candidate family is an alternate dual of a frame.
    VerifyDual { frame: PathBuf, candidate: PathBuf },
    /// Project a frame onto the span of the vectors in a second frame file.
    Project { frame: PathBuf, subspace: PathBuf },
    /// Write one of the built-in example families.
    GenExample {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Destination; standard output if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    DuplicatedBasis,
    RandomFrame,
    Orthonormal,
}

impl From<Kind> for ExampleKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::DuplicatedBasis => ExampleKind::DuplicatedBasis,
            Kind::RandomFrame => ExampleKind::RandomFrame,
            Kind::Orthonormal => ExampleKind::Orthonormal,
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    if !(cli.tolerance.is_finite() && cli.tolerance > 0.0) {
        return Err(CliError::Usage(format!("tolerance must be positive and finite, got {}", cli.tolerance)));
    }
    let opts = Options { tolerance: cli.tolerance, seed: cli.seed };
    let started = Instant::now();
    let mut doc: ReportDocument = match &cli.command {
        Command::Report { frame } => commands::report(frame, &opts)?,
        Command::Bounds { frame } => commands::bounds(frame, &opts)?,
        Command::Dual { frame, out } => commands::dual(frame, out, &opts)?,
        Command::VerifyDual { frame, candidate } => commands::verify_dual(frame, candidate, &opts)?,
        Command::Project { frame, subspace } => commands::project(frame, subspace, &opts)?,
        Command::GenExample { kind, n, out } => {
            let text = commands::gen_example((*kind).into(), *n, cli.seed)?.emit();
            match out {
                Some(path) => write_file(path, &text)?,
                None => print!("{text}"),
            }
            return Ok(true);
        }
    };
    doc.timing_ms = started.elapsed().as_secs_f64() * 1e3;
    match cli.format {
        Format::Text => print!("{}", doc.to_text()),
        Format::Structured => print!("{}", doc.to_json()),
    }
    if let Some(path) = &cli.output {
        write_file(path, &doc.to_json())?;
    }
    Ok(doc.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
