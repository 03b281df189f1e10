use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kratzer_core::{EtaMode, Format};

#[derive(Debug, Parser)]
#[command(
    name = "kratzer",
    version,
    about = "Bound states and vibration-rotation spectra of the Kratzer potential"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form energy levels E(n, l) in eV and cm^-1
    Levels(LevelsArgs),
    /// Fundamental absorption band: centre, P/R lines, comparison with experiment
    Spectrum(SpectrumArgs),
    /// Asymptotic Iteration Method roots side by side with the closed-form beta
    Aim(AimArgs),
    /// Closed form against the finite-difference oracle; exits 1 on a tolerance breach
    Verify(VerifyArgs),
    /// Theoretical band centre against the measured one
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EtaArg {
    Kratzer,
    Modified,
}

impl From<EtaArg> for EtaMode {
    fn from(e: EtaArg) -> Self {
        match e {
            EtaArg::Kratzer => EtaMode::Kratzer,
            EtaArg::Modified => EtaMode::Modified,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Debug, Args)]
pub struct MoleculeArgs {
    /// Molecule JSON file, or the name of a bundled molecule (hcl, h2)
    #[arg(long, value_name = "FILE")]
    pub molecule: PathBuf,
    /// Energy origin; overrides the file's eta_mode
    #[arg(long, value_enum)]
    pub eta: Option<EtaArg>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,
    /// Write to this file instead of stdout
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LevelsArgs {
    #[command(flatten)]
    pub molecule: MoleculeArgs,
    #[arg(long, default_value_t = 3)]
    pub v_max: u32,
    #[arg(long, default_value_t = 3)]
    pub j_max: u32,
    /// Spatial dimension N; defaults to the file's N
    #[arg(long)]
    pub dimension: Option<u32>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    /// Measured band centre in cm^-1; overrides the reference data
    #[arg(long, value_name = "CM1")]
    pub experimental: Option<f64>,
    /// Reference data file with a band_centers_cm1 map
    #[arg(long, value_name = "FILE", conflicts_with = "experimental")]
    pub experimental_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub molecule: MoleculeArgs,
    #[arg(long, default_value_t = 10)]
    pub j_max: u32,
    #[command(flatten)]
    pub experiment: ExperimentArgs,
    /// json: band report; csv/text: line list
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
    /// Also write the line list as CSV to this file
    #[arg(long, value_name = "FILE")]
    pub lines: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AimArgs {
    /// Molecule JSON file or bundled name
    #[arg(
        long,
        value_name = "FILE",
        required_unless_present = "kappa",
        conflicts_with = "kappa"
    )]
    pub molecule: Option<PathBuf>,
    /// Dimensionless coupling 2 mu De re^2 / hbar^2, instead of a molecule
    #[arg(long)]
    pub kappa: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    #[arg(long, default_value_t = 3)]
    pub n_max: u32,
    /// Evaluation point y0 = r0/re of the termination condition
    #[arg(long, default_value_t = 1.0)]
    pub y0: f64,
    /// Spatial dimension N; defaults to the file's N, or 3 with --kappa
    #[arg(long)]
    pub dimension: Option<u32>,
    #[arg(long, default_value_t = 30)]
    pub k_max: usize,
    #[arg(long, default_value_t = 2000)]
    pub scan_points: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub molecule: MoleculeArgs,
    #[arg(long, default_value_t = 3)]
    pub n_max: u32,
    #[arg(long, default_value_t = 3)]
    pub l_max: u32,
    /// Dimensions to check, comma separated; defaults to the file's N
    #[arg(long, value_delimiter = ',')]
    pub dimension: Vec<u32>,
    /// Points of the coarse finite-difference grid
    #[arg(long, default_value_t = kratzer_core::oracle::DEFAULT_POINTS)]
    pub points: usize,
    /// Maximum accepted relative error
    #[arg(long, default_value_t = 1e-6)]
    pub tolerance: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub molecule: MoleculeArgs,
    #[command(flatten)]
    pub experiment: ExperimentArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}
