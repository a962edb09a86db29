//! `stabloc`: locality metrics, surface codes and theorem certificates for
//! stabilizer groups given as check-matrix files.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use report::Format;

#[derive(Debug, Parser)]
#[command(name = "stabloc", version, about = "Locality of stabilizer codes and effective-Hamiltonian certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimum weight of a non-identity group element.
    Delta(MetricArgs),
    /// Least locality whose elements generate the group.
    Eta(MetricArgs),
    /// Build a surface code from a cellulation.
    Surface(SurfaceArgs),
    /// Certify a theorem on seeded random instances.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
}

#[derive(Debug, Args)]
struct MetricArgs {
    /// Check-matrix file.
    path: PathBuf,
    /// Also run the brute-force enumeration and compare.
    #[arg(long)]
    oracle: bool,
    /// Give up after this many qubit subsets.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct SurfaceArgs {
    #[command(subcommand)]
    source: SurfaceSource,
    /// Write the check matrix (faces then vertices) to this file.
    #[arg(long, global = true)]
    emit: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Debug, Clone, Subcommand)]
enum SurfaceSource {
    /// L × L square lattice on the torus.
    Toric { l: usize },
    /// Cellulation file.
    From { path: PathBuf },
    /// Sphere with minimum valence 3 whose code has delta 2.
    Counterexample,
}

#[derive(Debug, Subcommand)]
enum Check {
    /// Trace of the projector against (delta - 1)-local Hamiltonians.
    Theorem1(VerifyArgs),
    /// Sign-flipped extensions have equal traces against nu-local Hamiltonians.
    Theorem2(VerifyArgs),
    /// Whether the extension codespaces span the Hilbert space.
    Corollary3(VerifyArgs),
    /// Projector distance against the gap-pinching bounds.
    GapPinch(VerifyArgs),
    /// Metric identities of XZ-split groups.
    Css(VerifyArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Check-matrix file.
    path: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    trials: usize,
    #[arg(long)]
    nu: Option<usize>,
    /// Sign bits for the extension, e.g. `01`. All patterns when omitted.
    #[arg(long)]
    b: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (outcome, format) = match cli.command {
        Command::Delta(a) => (commands::metric(commands::Metric::Delta, &a.path, a.oracle, a.budget), a.format),
        Command::Eta(a) => (commands::metric(commands::Metric::Eta, &a.path, a.oracle, a.budget), a.format),
        Command::Surface(a) => (commands::surface(&a.source, a.emit.as_deref()), a.format),
        Command::Verify { check } => {
            let (kind, a) = match check {
                Check::Theorem1(a) => (commands::Theorem::One, a),
                Check::Theorem2(a) => (commands::Theorem::Two, a),
                Check::Corollary3(a) => (commands::Theorem::Span, a),
                Check::GapPinch(a) => (commands::Theorem::GapPinch, a),
                Check::Css(a) => (commands::Theorem::Css, a),
            };
            let opts = commands::VerifyOptions {
                seed: a.seed,
                trials: a.trials,
                nu: a.nu,
                b: a.b.clone(),
            };
            (commands::verify(kind, &a.path, &opts), a.format)
        }
    };
    match outcome {
        Ok(mut report) => {
            print!("{}", report.render(format));
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
