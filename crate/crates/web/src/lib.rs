//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each operation has a plain Rust form returning `Result<_, String>`, which
//! the native tests exercise, and an exported wrapper that turns the error
//! into a JS exception. All frequencies are angular, in units of Δ.

use chrw_core::baselines::{rabi_rwa_frequency, rabi_rwa_population, RwaRf};
use chrw_core::chrw::{population_up, rabi_frequency_2nd, solve};
use chrw_core::exact::{population_up_exact, IntegratorConfig};
use chrw_core::model::time_grid;
use chrw_core::spectrum::{comb_match, find_peaks, fourier_spectrum, rabi_window, DEFAULT_PAD_FACTOR};
use chrw_core::{DriveParams, TimeSeries};
use wasm_bindgen::prelude::*;

/// Largest time grid the page may request; keeps a single click under a
/// second or so.
pub const MAX_SAMPLES: usize = 20_000;
pub const MAX_SWEEP_POINTS: usize = 2_000;

fn params(delta: f64, epsilon: f64, amplitude: f64, omega: f64) -> Result<DriveParams, String> {
    DriveParams::new(delta, epsilon, amplitude, omega).map_err(|e| e.to_string())
}

fn max_dev(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// P_up(t) from every method on a shared grid.
#[wasm_bindgen(getter_with_clone)]
#[derive(Debug, Clone)]
pub struct Curves {
    pub t: Vec<f64>,
    pub chrw: Vec<f64>,
    pub rabi_rwa: Vec<f64>,
    pub rwa_rf: Vec<f64>,
    pub exact: Vec<f64>,
    pub photon_n: i32,
    pub rabi_freq: f64,
    pub max_dev_chrw: f64,
    pub max_dev_rabi_rwa: f64,
    pub max_dev_rwa_rf: f64,
}

pub fn compute_dynamics(
    delta: f64,
    epsilon: f64,
    amplitude: f64,
    omega: f64,
    t_max: f64,
    samples: usize,
) -> Result<Curves, String> {
    let p = params(delta, epsilon, amplitude, omega)?;
    if !(t_max > 0.0 && t_max.is_finite()) || !(2..=MAX_SAMPLES).contains(&samples) {
        return Err(format!("need t_max > 0 and 2..={MAX_SAMPLES} samples"));
    }
    let dt = t_max / (samples - 1) as f64;
    let s = solve(&p).map_err(|e| e.to_string())?;
    let n = chrw_core::baselines::default_photon_number(&p);
    let rf = RwaRf::new(&p, n).map_err(|e| e.to_string())?;
    let t: Vec<f64> = time_grid(0.0, dt, samples).collect();
    let chrw: Vec<f64> = t.iter().map(|&t| population_up(&s, &p, t)).collect();
    let rabi_rwa: Vec<f64> = t.iter().map(|&t| rabi_rwa_population(&p, t)).collect();
    let rwa_rf: Vec<f64> = t.iter().map(|&t| rf.population(t)).collect();
    let exact = population_up_exact(&p, 0.0, dt, samples, &IntegratorConfig::default())
        .map_err(|e| e.to_string())?
        .values;
    Ok(Curves {
        max_dev_chrw: max_dev(&chrw, &exact),
        max_dev_rabi_rwa: max_dev(&rabi_rwa, &exact),
        max_dev_rwa_rf: max_dev(&rwa_rf, &exact),
        t,
        chrw,
        rabi_rwa,
        rwa_rf,
        exact,
        photon_n: n,
        rabi_freq: s.rabi_freq,
    })
}

#[wasm_bindgen]
pub fn dynamics(
    delta: f64,
    epsilon: f64,
    amplitude: f64,
    omega: f64,
    t_max: f64,
    samples: usize,
) -> Result<Curves, JsError> {
    compute_dynamics(delta, epsilon, amplitude, omega, t_max, samples).map_err(|e| JsError::new(&e))
}

/// Rabi frequency against drive amplitude. Points where the self-consistent
/// solve fails hold NaN so the plot shows a gap.
#[wasm_bindgen(getter_with_clone)]
#[derive(Debug, Clone)]
pub struct RabiSweep {
    pub amplitude: Vec<f64>,
    pub chrw: Vec<f64>,
    pub second_order: Vec<f64>,
    pub rabi_rwa: Vec<f64>,
}

pub fn compute_rabi_sweep(
    delta: f64,
    epsilon: f64,
    omega: f64,
    a_max: f64,
    points: usize,
) -> Result<RabiSweep, String> {
    let p = params(delta, epsilon, a_max, omega)?;
    if !(2..=MAX_SWEEP_POINTS).contains(&points) {
        return Err(format!("need 2..={MAX_SWEEP_POINTS} points"));
    }
    let amplitude: Vec<f64> = (0..points).map(|i| a_max * i as f64 / (points - 1) as f64).collect();
    let at = |a: f64| p.with_amplitude(a);
    Ok(RabiSweep {
        chrw: amplitude
            .iter()
            .map(|&a| solve(&at(a)).map_or(f64::NAN, |s| s.rabi_freq))
            .collect(),
        second_order: amplitude.iter().map(|&a| rabi_frequency_2nd(&at(a))).collect(),
        rabi_rwa: amplitude.iter().map(|&a| rabi_rwa_frequency(&at(a))).collect(),
        amplitude,
    })
}

#[wasm_bindgen]
pub fn rabi_sweep(delta: f64, epsilon: f64, omega: f64, a_max: f64, points: usize) -> Result<RabiSweep, JsError> {
    compute_rabi_sweep(delta, epsilon, omega, a_max, points).map_err(|e| JsError::new(&e))
}

/// Fourier spectra of the exact and CHRW P_up(t) over forty Rabi periods,
/// with the exact peaks labelled against the ω / Ω_R comb.
#[wasm_bindgen(getter_with_clone)]
#[derive(Debug, Clone)]
pub struct SpectrumView {
    pub frequency: Vec<f64>,
    pub exact: Vec<f64>,
    pub chrw: Vec<f64>,
    pub peak_frequency: Vec<f64>,
    pub peak_weight: Vec<f64>,
    pub peak_label: Vec<String>,
    pub rabi_freq: f64,
    pub resolution: f64,
}

pub fn compute_spectrum(
    delta: f64,
    epsilon: f64,
    amplitude: f64,
    omega: f64,
    threshold: f64,
) -> Result<SpectrumView, String> {
    let p = params(delta, epsilon, amplitude, omega)?;
    if !(threshold > 0.0 && threshold <= 1.0) {
        return Err("threshold must lie in (0, 1]".into());
    }
    let s = solve(&p).map_err(|e| e.to_string())?;
    let t_max = if s.rabi_freq > 1e-9 * omega {
        rabi_window(s.rabi_freq, 40.0)
    } else {
        40.0 * p.period()
    };
    // four samples per period of the fastest first-order line
    let samples = ((t_max * 2.0 * (omega + s.rabi_freq) / std::f64::consts::PI).ceil() as usize).max(4096);
    if samples > 4 * MAX_SAMPLES {
        return Err("Rabi frequency too small against ω for an in-browser window".into());
    }
    let dt = t_max / (samples - 1) as f64;
    let exact_series = population_up_exact(&p, 0.0, dt, samples, &IntegratorConfig::default()).map_err(|e| e.to_string())?;
    let chrw_values = time_grid(0.0, dt, samples).map(|t| population_up(&s, &p, t)).collect();
    let chrw_series = TimeSeries::new(0.0, dt, chrw_values).map_err(|e| e.to_string())?;
    let exact = fourier_spectrum(&exact_series, DEFAULT_PAD_FACTOR).map_err(|e| e.to_string())?;
    let chrw = fourier_spectrum(&chrw_series, DEFAULT_PAD_FACTOR).map_err(|e| e.to_string())?;
    let peaks = comb_match(&find_peaks(&exact, threshold), omega, s.rabi_freq, exact.resolution);
    Ok(SpectrumView {
        peak_frequency: peaks.iter().map(|c| c.frequency).collect(),
        peak_weight: peaks.iter().map(|c| c.weight).collect(),
        peak_label: peaks.iter().map(|c| c.label.to_string()).collect(),
        rabi_freq: s.rabi_freq,
        resolution: exact.resolution,
        frequency: exact.frequencies,
        exact: exact.magnitudes,
        chrw: chrw.magnitudes,
    })
}

#[wasm_bindgen]
pub fn spectrum(delta: f64, epsilon: f64, amplitude: f64, omega: f64, threshold: f64) -> Result<SpectrumView, JsError> {
    compute_spectrum(delta, epsilon, amplitude, omega, threshold).map_err(|e| JsError::new(&e))
}
