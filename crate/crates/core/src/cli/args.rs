use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "p4susy",
    version,
    about = "Exact checks linking rational Painlevé IV solutions to rational extensions of the oscillator"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compare H1 with a rational extension and its ladder operators.
    Verify(VerifyArgs),
    /// List levels of a rational extension, grouped by a ladder.
    Spectrum(SpectrumArgs),
    /// Check that a hierarchy member solves Painlevé IV exactly.
    Residual(ResidualArgs),
    /// Write potential or wavefunction samples as CSV.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct OutputArgs {
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(group(ArgGroup::new("which").required(true).args(["scenario", "all"])))]
pub struct VerifyArgs {
    /// iv, v or vi (or the long names one_step_singlet, ...).
    #[arg(long)]
    pub scenario: Option<String>,
    /// Even index of the seed polynomial; ignored by scenario v.
    #[arg(long, default_value_t = 2)]
    pub n: i64,
    /// Run every scenario over n = 2, 4, 6.
    #[arg(long)]
    pub all: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct GridArgs {
    /// Half-width of the Dirichlet box.
    #[arg(long = "grid-l", default_value_t = crate::numlab::DEFAULT_HALF_WIDTH)]
    pub l: f64,
    /// Interior grid points; defaults to $P4SUSY_GRID_N or 1500.
    #[arg(long = "grid-n")]
    pub n: Option<usize>,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct SpectrumArgs {
    /// Comma-separated seed degrees, e.g. 2 or 2,3.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub ms: Vec<i64>,
    /// b or c for one step, d for two steps; defaults to b or d.
    #[arg(long)]
    pub ladder: Option<String>,
    /// Levels listed above each chain base.
    #[arg(long, default_value_t = crate::susy::DEFAULT_DEPTH)]
    pub depth: usize,
    /// Compare with finite-difference eigenvalues.
    #[arg(long)]
    pub numeric: bool,
    /// Largest accepted |exact - numeric|.
    #[arg(long, default_value_t = 1e-3)]
    pub tol: f64,
    /// Exit with status 1 when a level misses the tolerance.
    #[arg(long, requires = "numeric")]
    pub strict: bool,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct ResidualArgs {
    /// hermite-I, hermite-II, okamoto-I or okamoto-II.
    #[arg(long)]
    pub family: String,
    #[arg(long, allow_negative_numbers = true)]
    pub m: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub n: i64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(group(ArgGroup::new("target").required(true).args(["potential", "wavefunction"])))]
pub struct ExportArgs {
    #[arg(long)]
    pub potential: bool,
    #[arg(long, requires = "nu")]
    pub wavefunction: bool,
    /// Level of the wavefunction.
    #[arg(long, allow_negative_numbers = true)]
    pub nu: Option<i64>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub ms: Vec<i64>,
    /// Samples cover [-xmax, xmax].
    #[arg(long, default_value_t = 5.0)]
    pub xmax: f64,
    #[arg(long, default_value_t = 200)]
    pub points: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}
