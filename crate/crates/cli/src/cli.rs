//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "sombrero",
    version,
    about = "Exact zero-eigenvalue groundstates of sombrero potentials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotWhat {
    Potential,
    Wavefunction,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Trial exponents, correction and shifted eigenvalue of a potential
    Derive(DeriveArgs),
    /// Zero-mode potentials for a given shape ratio lambda
    FromLambda(FromLambdaArgs),
    /// Tabulate eta(lambda) over a range of lambda
    ScanLambda(ScanLambdaArgs),
    /// Both branches of the m = 0 family at r0^4 = (N+2)/3
    Jackiw(JackiwArgs),
    /// Zero-mode solution of the (eta, mu) family, checked by the eigensolver
    EtaMu(EtaMuArgs),
    /// Compare the closed-form groundstate with the numerical eigensolver
    Verify(VerifyArgs),
    /// Tabulate V(r) or the trial wavefunction
    PlotData(PlotDataArgs),
}

#[derive(Debug, Clone, Args)]
pub struct FormatArg {
    #[arg(long, value_enum, default_value = "human")]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Args)]
pub struct DeriveArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub g: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long = "A", allow_negative_numbers = true)]
    pub big_a: f64,
    #[arg(long = "N", default_value_t = 3)]
    pub n_dim: u32,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Args)]
pub struct FromLambdaArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub g: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: f64,
    #[arg(long = "N", default_value_t = 3)]
    pub n_dim: u32,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Args)]
pub struct ScanLambdaArgs {
    #[arg(long = "N", default_value_t = 3)]
    pub n_dim: u32,
    #[arg(long, allow_negative_numbers = true)]
    pub from: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub to: f64,
    #[arg(long)]
    pub steps: usize,
    #[arg(long)]
    pub out: PathBuf,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Args)]
pub struct JackiwArgs {
    #[arg(long = "N", default_value_t = 3)]
    pub n_dim: u32,
    /// Skip the eigensolver check of each branch
    #[arg(long)]
    pub no_verify: bool,
    #[command(flatten)]
    pub oracle: OracleArgs,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Args)]
pub struct EtaMuArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub g: f64,
    #[arg(long = "N", default_value_t = 3)]
    pub n_dim: u32,
    #[command(flatten)]
    pub oracle: OracleArgs,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    /// Outer radius of the eigensolver domain
    #[arg(long = "rmax", default_value_t = sombrero::oracle::DEFAULT_R_MAX, allow_negative_numbers = true)]
    pub r_max: f64,
    /// Number of cells on the coarse grid (the fine grid has twice as many)
    #[arg(long, default_value_t = sombrero::oracle::DEFAULT_GRID_POINTS)]
    pub grid: usize,
    /// Grow r_max until the eigenvalue no longer depends on it
    #[arg(long)]
    pub auto_extend: bool,
}

/// Where the potential parameters come from: explicit values, the
/// `(lambda, eta)` family, or the `(eta, mu)` family.
#[derive(Debug, Clone, Args)]
pub struct ParamSource {
    #[arg(long, allow_negative_numbers = true)]
    pub g: f64,
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["lambda", "eta_mu"])]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["lambda", "eta_mu"])]
    pub beta: Option<f64>,
    #[arg(long = "A", allow_negative_numbers = true, conflicts_with_all = ["lambda", "eta_mu"])]
    pub big_a: Option<f64>,
    #[arg(long = "N", default_value_t = 3)]
    pub n_dim: u32,
    /// Use the zero-mode solution with this shape ratio (smallest eta root)
    #[arg(long, allow_negative_numbers = true, conflicts_with = "eta_mu")]
    pub lambda: Option<f64>,
    /// Use the zero-mode solution of the (eta, mu) family
    #[arg(long = "eta-mu")]
    pub eta_mu: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub params: ParamSource,
    #[command(flatten)]
    pub oracle: OracleArgs,
    /// Solve V - h instead of V; the trial function is then exact for any m
    #[arg(long)]
    pub with_correction: bool,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Args)]
pub struct PlotDataArgs {
    #[arg(long, value_enum)]
    pub what: PlotWhat,
    #[command(flatten)]
    pub params: ParamSource,
    #[arg(long = "r-from", default_value_t = 0.0, allow_negative_numbers = true)]
    pub r_from: f64,
    #[arg(long = "r-to", allow_negative_numbers = true)]
    pub r_to: f64,
    #[arg(long)]
    pub steps: usize,
    #[arg(long)]
    pub out: PathBuf,
    #[command(flatten)]
    pub format: FormatArg,
}
