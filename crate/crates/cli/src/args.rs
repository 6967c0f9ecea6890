use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(name = "chrw", version, about = "Driven two-level system: CHRW, rotating-wave baselines and exact dynamics")]
pub struct Cli {
    /// Frequency convention of every input and output frequency. `hz`
    /// reads values as ν = ω/2π (e.g. GHz, with times in ns).
    #[arg(long, value_enum, global = true)]
    pub units: Option<Units>,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Output format; `solve` defaults to json, everything else to csv.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Units {
    Angular,
    Hz,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the self-consistency conditions and report every derived quantity.
    Solve(ParamArgs),
    /// P_up(t) for one method, or all of them.
    Evolve {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        time: TimeArgs,
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// P_up(t) for every method plus the maximum deviation of each from exact.
    Compare {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        time: TimeArgs,
    },
    /// Tabulate frequency-domain quantities along one parameter axis.
    Sweep {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Fourier spectrum of P_up(t) with comb-labelled peaks.
    Spectrum {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        time: TimeArgs,
        /// `exact`, `chrw` or `all` (both).
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Zero-padding factor of the transform.
        #[arg(long)]
        pad: Option<usize>,
        /// Relative weight below which peaks are not reported.
        #[arg(long)]
        threshold: Option<f64>,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    /// Recipe file with `key = value` lines; flags override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Tunneling Δ (default 1).
    #[arg(long, allow_negative_numbers = true)]
    pub delta: Option<f64>,
    /// Static bias ε (default 0).
    #[arg(long, allow_negative_numbers = true)]
    pub epsilon: Option<f64>,
    /// Drive amplitude A.
    #[arg(long, allow_negative_numbers = true)]
    pub amplitude: Option<f64>,
    /// Drive frequency ω.
    #[arg(long, allow_negative_numbers = true)]
    pub omega: Option<f64>,
    /// Photon number n of the RWA-RF baseline (default -round(ε/ω)).
    #[arg(long, allow_negative_numbers = true)]
    pub photon_n: Option<i32>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct TimeArgs {
    /// End of the time window; the grid starts at 0.
    #[arg(long)]
    pub t_max: Option<f64>,
    /// Number of grid points, both ends included.
    #[arg(long)]
    pub samples: Option<usize>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub axis: Option<Axis>,
    #[arg(long, allow_negative_numbers = true)]
    pub from: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub to: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
    /// Comma-separated quantities, one column each.
    #[arg(long, value_delimiter = ',', value_enum)]
    pub quantity: Option<Vec<Quantity>>,
    /// Parameter held at each of the `--series` values in turn.
    #[arg(long, value_enum)]
    pub series_param: Option<Axis>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub series: Option<Vec<f64>>,
    /// Set ω = Ξ₀ at every point.
    #[arg(long)]
    pub track_resonance: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Method {
    Chrw,
    RabiRwa,
    RwaRf,
    Exact,
    All,
}

impl Method {
    pub fn column(self) -> &'static str {
        match self {
            Method::Chrw => "chrw",
            Method::RabiRwa => "rabi_rwa",
            Method::RwaRf => "rwa_rf",
            Method::Exact => "exact",
            Method::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Axis {
    Amplitude,
    Bias,
    Tunneling,
    Omega,
    /// Bare splitting Ξ₀ at fixed Δ; sets ε = sqrt(Ξ₀² - Δ²).
    Splitting,
}

impl Axis {
    pub fn column(self) -> &'static str {
        match self {
            Axis::Amplitude => "amplitude",
            Axis::Bias => "epsilon",
            Axis::Tunneling => "delta",
            Axis::Omega => "omega",
            Axis::Splitting => "splitting",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Quantity {
    /// Self-consistent generalized Rabi frequency.
    Rabi,
    /// Second-order Rabi frequency.
    Rabi2nd,
    /// Rabi-RWA frequency.
    RabiRwaFreq,
    /// Resonance shift from minimizing the full Rabi frequency over ω.
    BsShift,
    /// Closed-form second-order shift.
    BsShift2nd,
    /// Ω_R0² / (4Ξ₀).
    BsRef,
    /// Ω_R0 = (Δ/2)(A/Ξ₀).
    RabiR0,
}

impl Quantity {
    pub fn column(self) -> &'static str {
        match self {
            Quantity::Rabi => "rabi",
            Quantity::Rabi2nd => "rabi2nd",
            Quantity::RabiRwaFreq => "rabi_rwa_freq",
            Quantity::BsShift => "bs_shift",
            Quantity::BsShift2nd => "bs_shift_2nd",
            Quantity::BsRef => "bs_ref",
            Quantity::RabiR0 => "rabi_r0",
        }
    }
}
