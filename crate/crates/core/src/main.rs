use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pastro::cli::{run, Command, Format, RunConfig};
use pastro::Rational;

#[derive(Parser)]
#[command(version, about = "Exact checks for Pastro biorthogonal polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// P_n, R_n, alpha_n, beta_n, h_n up to --nmax
    Table(Args),
    /// GEVP, q-difference, recurrence, contiguity and Baxter suites
    Verify(Args),
    /// Weights, Gram matrix and adjoints on the N-point grid
    Biorth(Args),
    /// Algebra relations, Casimir and q-Hahn embedding
    Algebra(Args),
    /// The verify suite at seeded random parameter points
    Sweep(Args),
}

#[derive(clap::Args)]
struct Args {
    /// Base q, a rational such as 1/2 (not 0 or ±1)
    #[arg(long, allow_hyphen_values = true)]
    q: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<Rational>,
    /// Pencil parameter for the q-Hahn embedding [default: 1]
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<Rational>,
    /// Highest degree checked
    #[arg(long, default_value_t = 8)]
    nmax: usize,
    /// Grid size; sets a = q^(1-N)
    #[arg(long = "N", default_value_t = 4)]
    n_points: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Number of admissible parameter points for `sweep`
    #[arg(long, default_value_t = 5)]
    draws: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(ValueEnum, Clone, Copy)]
enum OutputFormat {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, args) = match cli.command {
        Cmd::Table(a) => (Command::Table, a),
        Cmd::Verify(a) => (Command::Verify, a),
        Cmd::Biorth(a) => (Command::Biorth, a),
        Cmd::Algebra(a) => (Command::Algebra, a),
        Cmd::Sweep(a) => (Command::Sweep, a),
    };
    let format = match args.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Json => Format::Json,
    };
    let config = RunConfig {
        command,
        q: args.q,
        a: args.a,
        b: args.b,
        mu: args.mu,
        n_max: args.nmax,
        n_points: args.n_points,
        format,
        seed: args.seed,
        draws: args.draws,
    };
    let (report, code) = run(&config);
    print!("{}", report.emit(format));
    ExitCode::from(code as u8)
}
