//! Merge recipe files and flags into validated run settings. Flags win over
//! the recipe; frequencies are converted to angular units here.

use std::f64::consts::TAU;

use chrw_core::baselines::default_photon_number;
use chrw_core::DriveParams;
use clap::ValueEnum;

use crate::args::{Axis, Method, ParamArgs, Quantity, SweepArgs, TimeArgs, Units};
use crate::config::ConfigFile;
use crate::error::CliError;

pub const DEFAULT_T_MAX: f64 = 50.0;
pub const DEFAULT_SAMPLES: usize = 1001;

#[derive(Debug, Clone)]
pub struct Base {
    pub units: Units,
    pub params: DriveParams,
    pub photon_n: i32,
    pub file: ConfigFile,
}

impl Base {
    /// Angular value for a frequency given in the active units.
    pub fn freq_in(&self, x: f64) -> f64 {
        freq_in(self.units, x)
    }

    /// A frequency in the active units.
    pub fn freq_out(&self, x: f64) -> f64 {
        match self.units {
            Units::Angular => x,
            Units::Hz => x / TAU,
        }
    }
}

fn freq_in(units: Units, x: f64) -> f64 {
    match units {
        Units::Angular => x,
        Units::Hz => x * TAU,
    }
}

fn enum_value<T: ValueEnum>(key: &str, raw: &str) -> Result<T, CliError> {
    T::from_str(raw.trim(), false).map_err(|_| CliError::Usage(format!("`{key}`: unknown value `{raw}`")))
}

pub fn config_enum<T: ValueEnum>(file: &ConfigFile, key: &str) -> Result<Option<T>, CliError> {
    file.raw(key).map(|raw| enum_value(key, raw)).transpose()
}

fn config_enum_list<T: ValueEnum>(file: &ConfigFile, key: &str) -> Result<Option<Vec<T>>, CliError> {
    file.raw(key)
        .map(|raw| raw.split(',').map(|item| enum_value(key, item)).collect())
        .transpose()
}

pub fn base(units_flag: Option<Units>, p: &ParamArgs) -> Result<Base, CliError> {
    let file = match &p.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let units = match units_flag {
        Some(u) => u,
        None => config_enum(&file, "units")?.unwrap_or(Units::Angular),
    };
    let pick = |flag: Option<f64>, key: &str| -> Result<Option<f64>, CliError> {
        Ok(match flag {
            Some(v) => Some(v),
            None => file.get::<f64>(key)?,
        })
    };
    let required = |v: Option<f64>, key: &str| {
        v.ok_or_else(|| CliError::Usage(format!("missing `{key}` (flag --{key} or recipe key)")))
    };
    let delta = pick(p.delta, "delta")?.unwrap_or(1.0);
    let epsilon = pick(p.epsilon, "epsilon")?.unwrap_or(0.0);
    let amplitude = required(pick(p.amplitude, "amplitude")?, "amplitude")?;
    let omega = required(pick(p.omega, "omega")?, "omega")?;
    let params = DriveParams::new(
        freq_in(units, delta),
        freq_in(units, epsilon),
        freq_in(units, amplitude),
        freq_in(units, omega),
    )?;
    let photon_n = match p.photon_n {
        Some(n) => n,
        None => file.get::<i32>("photon_n")?.unwrap_or_else(|| default_photon_number(&params)),
    };
    Ok(Base {
        units,
        params,
        photon_n,
        file,
    })
}

#[derive(Debug, Clone, Copy)]
pub struct Window {
    pub t_max: f64,
    pub samples: usize,
}

impl Window {
    pub fn dt(&self) -> f64 {
        self.t_max / (self.samples - 1) as f64
    }
}

/// Time grid `[0, t_max]`; `default_t_max` applies when neither flag nor
/// recipe sets it.
pub fn window(b: &Base, t: &TimeArgs, default_t_max: f64, default_samples: usize) -> Result<Window, CliError> {
    let t_max = match t.t_max {
        Some(v) => v,
        None => b.file.get::<f64>("t_max")?.unwrap_or(default_t_max),
    };
    let samples = match t.samples {
        Some(v) => v,
        None => b.file.get::<usize>("samples")?.unwrap_or(default_samples),
    };
    if !(t_max > 0.0 && t_max.is_finite()) || samples < 2 {
        return Err(CliError::Usage(format!(
            "need t_max > 0 and samples >= 2, got {t_max} and {samples}"
        )));
    }
    Ok(Window { t_max, samples })
}

pub fn method(b: &Base, flag: Option<Method>, default: Method) -> Result<Method, CliError> {
    Ok(match flag {
        Some(m) => m,
        None => config_enum(&b.file, "method")?.unwrap_or(default),
    })
}

#[derive(Debug, Clone)]
pub struct Sweep {
    pub axis: Axis,
    /// Angular axis values (Ξ₀ for the splitting axis).
    pub values: Vec<f64>,
    pub quantities: Vec<Quantity>,
    pub series: Option<(Axis, Vec<f64>)>,
    pub track_resonance: bool,
}

pub fn sweep(b: &Base, s: &SweepArgs) -> Result<Sweep, CliError> {
    let f = &b.file;
    let axis = match s.axis {
        Some(a) => a,
        None => config_enum(f, "axis")?.ok_or_else(|| CliError::Usage("missing `axis`".into()))?,
    };
    let from = s.from.or(f.get("from")?).ok_or_else(|| CliError::Usage("missing `from`".into()))?;
    let to = s.to.or(f.get("to")?).ok_or_else(|| CliError::Usage("missing `to`".into()))?;
    let points = s.points.or(f.get("points")?).ok_or_else(|| CliError::Usage("missing `points`".into()))?;
    if points < 2 || !from.is_finite() || !to.is_finite() || from == to {
        return Err(CliError::Usage(format!(
            "sweep needs points >= 2 and a non-empty finite range, got {points} points over [{from}, {to}]"
        )));
    }
    let quantities = match &s.quantity {
        Some(q) => q.clone(),
        None => config_enum_list(f, "quantity")?.unwrap_or_else(|| vec![Quantity::Rabi]),
    };
    let series_param = match s.series_param {
        Some(a) => Some(a),
        None => config_enum(f, "series_param")?,
    };
    let series_values = match &s.series {
        Some(v) => Some(v.clone()),
        None => f.list::<f64>("series")?,
    };
    let series = match (series_param, series_values) {
        (Some(a), Some(v)) if !v.is_empty() => {
            if a == axis {
                return Err(CliError::Usage("series_param must differ from axis".into()));
            }
            Some((a, v.into_iter().map(|x| b.freq_in(x)).collect()))
        }
        (None, None) => None,
        _ => return Err(CliError::Usage("series_param and series go together".into())),
    };
    let track_resonance = match s.track_resonance {
        Some(v) => v,
        None => f.get::<bool>("track_resonance")?.unwrap_or(false),
    };
    if track_resonance && (axis == Axis::Omega || series.as_ref().is_some_and(|(a, _)| *a == Axis::Omega)) {
        return Err(CliError::Usage("track_resonance fixes omega; it cannot also be swept".into()));
    }
    let values = (0..points)
        .map(|i| b.freq_in(from + (to - from) * i as f64 / (points - 1) as f64))
        .collect();
    Ok(Sweep {
        axis,
        values,
        quantities,
        series,
        track_resonance,
    })
}

/// `p` with `axis` set to the angular value `x`. Not validated.
pub fn apply(p: DriveParams, axis: Axis, x: f64) -> Result<DriveParams, String> {
    Ok(match axis {
        Axis::Amplitude => p.with_amplitude(x),
        Axis::Bias => p.with_epsilon(x),
        Axis::Tunneling => DriveParams { delta: x, ..p },
        Axis::Omega => p.with_omega(x),
        Axis::Splitting => {
            if x < p.delta {
                return Err(format!("splitting {x} is below the tunneling {}", p.delta));
            }
            p.with_epsilon((x * x - p.delta * p.delta).sqrt())
        }
    })
}
