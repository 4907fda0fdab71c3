use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hforge::io::Format;

#[derive(Debug, Parser)]
#[command(name = "hforge", version, about = "Radix-2 fast Hartley / Walsh-Hadamard transforms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Transform a signal file and write the spectrum.
    Transform(TransformArgs),
    /// Check every fast path against the brute-force oracles.
    Verify(VerifyArgs),
    /// Time transforms across sizes and write a json report.
    Bench(BenchArgs),
    /// Print exact operation counts against the 2N log2 N bound.
    Opcount(OpcountArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TransformKind {
    DhtNaive,
    Fht,
    Fwht,
    Dft,
    Idht,
    Ifwht,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(long, value_enum)]
    pub kind: TransformKind,
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long = "out")]
    pub output: PathBuf,
    /// Output format; inferred from the output extension when omitted.
    #[arg(long)]
    pub format: Option<Format>,
    /// Input format; inferred from the input extension when omitted.
    #[arg(long)]
    pub in_format: Option<Format>,
    /// Use a precomputed twiddle plan (iterative in-place path).
    #[arg(long)]
    pub plan_reuse: bool,
    /// Fail instead of falling back to the naive transform on non-power-of-two input.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 12)]
    pub max_log2: u32,
    #[arg(long, default_value_t = 20)]
    pub trials: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Relative max-norm tolerance for the floating-point properties.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BenchKind {
    DhtNaive,
    Fht,
    FhtPlan,
    Fwht,
    Dft,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, value_delimiter = ',', default_value = "fht,dht-naive")]
    pub kinds: Vec<BenchKind>,
    /// Inclusive exponent range `A..B`.
    #[arg(long, default_value = "4..12")]
    pub log2_range: String,
    #[arg(long, default_value_t = 5)]
    pub reps: u32,
    /// Report destination; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Measure different sizes on separate threads.
    #[arg(long)]
    pub parallel: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Paper,
    Optimized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpcountKind {
    Fht,
    Fwht,
    DhtNaive,
    Dft,
}

#[derive(Debug, Args)]
pub struct OpcountArgs {
    #[arg(long)]
    pub size: usize,
    #[arg(long, value_enum, default_value = "paper")]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value = "fht")]
    pub kind: OpcountKind,
}
