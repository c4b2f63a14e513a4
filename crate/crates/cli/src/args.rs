use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "swchan",
    version,
    about = "Fit, predict and simulate short-range path loss with a standing-wave term"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit the combined model to a campaign CSV and write a JSON report
    Fit(FitArgs),
    /// Tabulate path loss and received power from a report
    Predict(PredictArgs),
    /// Write a synthetic campaign CSV
    Simulate(SimulateArgs),
    /// Write standing-wave curves for one or more reflection coefficients
    ExportStandingWave(ExportArgs),
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// Campaign CSV, or '-' for stdin
    pub input: String,
    /// Reference distance d0 in metres
    #[arg(long, default_value_t = 0.1)]
    pub d0: f64,
    /// Transmit power, needed for received_power_dbm input
    #[arg(long, allow_negative_numbers = true)]
    pub tx_power_dbm: Option<f64>,
    /// Transmit antenna: preset name (WR-2.2, WR-4.3, WR-6.5) or JSON spec file
    #[arg(long)]
    pub tx_antenna: Option<String>,
    /// Receive antenna: preset name or JSON spec file
    #[arg(long)]
    pub rx_antenna: Option<String>,
    /// Directory for curve.csv and residuals.csv
    #[arg(long)]
    pub curves: Option<PathBuf>,
    /// Points in curve.csv
    #[arg(long, default_value_t = 1000)]
    pub curve_points: usize,
    /// Report path (default: stdout)
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// JSON file overriding fit settings
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    /// JSON report written by `fit`
    #[arg(long)]
    pub model: PathBuf,
    /// Distances as start:stop:step (metres)
    #[arg(
        long,
        conflicts_with = "distances",
        required_unless_present = "distances"
    )]
    pub grid: Option<String>,
    /// Comma-separated distances (metres)
    #[arg(long, value_delimiter = ',')]
    pub distances: Option<Vec<f64>>,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub tx_power_dbm: f64,
    /// Preset name or JSON spec file; omitted antennas count as 0 dBi
    #[arg(long)]
    pub tx_antenna: Option<String>,
    #[arg(long)]
    pub rx_antenna: Option<String>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, default_value_t = 70.0, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub beta: f64,
    /// Reflection coefficient as mag:phase_deg
    #[arg(long, default_value = "0:0", allow_hyphen_values = true)]
    pub gamma: String,
    /// Wavenumber in rad/m (default 10π)
    #[arg(long)]
    pub k: Option<f64>,
    /// Shadow-fading standard deviation in dB; needs --seed when positive
    #[arg(long, default_value_t = 0.0)]
    pub sigma: f64,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Distances as start:stop:step (default 0.1016:0.8128:0.0508)
    #[arg(long)]
    pub grid: Option<String>,
    #[arg(long, default_value_t = 140.0)]
    pub frequency: f64,
    #[arg(long, default_value_t = 0.1)]
    pub d0: f64,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    /// Reflection coefficient as mag:phase_deg; repeat for several curves
    #[arg(long, required = true, allow_hyphen_values = true)]
    pub gamma: Vec<String>,
    /// Wavenumber in rad/m (default 2π, a 1 m wavelength)
    #[arg(long)]
    pub k: Option<f64>,
    /// Distances as start:stop:step (default 0:2:0.005)
    #[arg(long, conflicts_with = "distances")]
    pub grid: Option<String>,
    #[arg(long, value_delimiter = ',')]
    pub distances: Option<Vec<f64>>,
    /// Reference distance where the reflected wave is launched
    #[arg(long, default_value_t = 0.0)]
    pub d0: f64,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}
