//! Fourier analysis of population time series and classification of the
//! resulting lines against the comb `{nω, |Ω_R + kω|}`.

use std::fmt;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::{Error, Result, TimeSeries};

pub const MIN_SERIES_LEN: usize = 64;
pub const DEFAULT_PAD_FACTOR: usize = 8;
/// Relative weight below which on-grid maxima are not listed in
/// [`Spectrum::peaks`].
pub const PEAK_FLOOR: f64 = 1e-3;

/// Analysis window spanning `periods` Rabi periods; 40 resolves the comb.
pub fn rabi_window(rabi_freq: f64, periods: f64) -> f64 {
    periods * std::f64::consts::TAU / rabi_freq
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Window {
    Hann,
    /// Four-term Blackman-Harris: sidelobes below -92 dB, so weak comb lines
    /// are not buried under the leakage of the strong ones.
    #[default]
    BlackmanHarris,
}

impl Window {
    fn coefficients(self, n: usize) -> Vec<f64> {
        let denom = (n - 1) as f64;
        let tau = std::f64::consts::TAU;
        (0..n)
            .map(|i| {
                let x = tau * i as f64 / denom;
                match self {
                    Window::Hann => 0.5 - 0.5 * x.cos(),
                    Window::BlackmanHarris => {
                        0.35875 - 0.48829 * x.cos() + 0.14128 * (2.0 * x).cos() - 0.01168 * (3.0 * x).cos()
                    }
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Angular frequencies `2πk/(M dt)`, `k = 0..=M/2`.
    pub frequencies: Vec<f64>,
    pub magnitudes: Vec<f64>,
    /// On-grid local maxima above [`PEAK_FLOOR`] as `(frequency, weight)`,
    /// weight relative to the global maximum, heaviest first.
    pub peaks: Vec<(f64, f64)>,
    /// Resolution of the unpadded transform, `2π/T_window`.
    pub resolution: f64,
}

impl Spectrum {
    /// Spacing of the (padded) frequency grid.
    pub fn grid_step(&self) -> f64 {
        self.frequencies.get(1).copied().unwrap_or(0.0)
    }
}

pub fn fourier_spectrum(series: &TimeSeries, pad_factor: usize) -> Result<Spectrum> {
    fourier_spectrum_with(series, pad_factor, Window::default())
}

pub fn fourier_spectrum_with(series: &TimeSeries, pad_factor: usize, window: Window) -> Result<Spectrum> {
    let n = series.len();
    if n < MIN_SERIES_LEN {
        return Err(Error::SeriesTooShort {
            len: n,
            min: MIN_SERIES_LEN,
        });
    }
    if pad_factor == 0 {
        return Err(Error::InvalidParams("pad_factor must be at least 1".into()));
    }

    let mean = series.values.iter().sum::<f64>() / n as f64;
    let rms = (series.values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n as f64).sqrt();
    let m = pad_factor * n;
    let bins = m / 2 + 1;
    let frequencies: Vec<f64> = (0..bins)
        .map(|k| std::f64::consts::TAU * k as f64 / (m as f64 * series.dt))
        .collect();
    let resolution = std::f64::consts::TAU / series.window();

    // what survives mean removal of a constant is rounding noise
    if rms <= 1e-12 * mean.abs().max(1.0) {
        return Ok(Spectrum {
            frequencies,
            magnitudes: vec![0.0; bins],
            peaks: Vec::new(),
            resolution,
        });
    }

    let w = window.coefficients(n);
    let mut buf = vec![Complex64::new(0.0, 0.0); m];
    for ((b, v), wi) in buf.iter_mut().zip(&series.values).zip(&w) {
        *b = Complex64::new((v - mean) * wi, 0.0);
    }
    FftPlanner::new().plan_fft_forward(m).process(&mut buf);
    let magnitudes: Vec<f64> = buf[..bins].iter().map(|c| c.norm() * series.dt).collect();

    let peaks = local_maxima(&magnitudes, PEAK_FLOOR)
        .into_iter()
        .map(|(k, w)| (frequencies[k], w))
        .collect();
    Ok(Spectrum {
        frequencies,
        magnitudes,
        peaks,
        resolution,
    })
}

/// Indices of strict-left local maxima with relative weight `>= rel`,
/// heaviest first.
fn local_maxima(mag: &[f64], rel: f64) -> Vec<(usize, f64)> {
    let max = mag.iter().copied().fold(0.0, f64::max);
    if !(max > 0.0) {
        return Vec::new();
    }
    let mut out: Vec<(usize, f64)> = (1..mag.len().saturating_sub(1))
        .filter(|&k| mag[k] > mag[k - 1] && mag[k] >= mag[k + 1] && mag[k] >= rel * max)
        .map(|k| (k, mag[k] / max))
        .collect();
    out.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    out
}

/// Local maxima with relative weight at least `rel_threshold`, positions
/// refined by a parabola through the three neighbouring bins.
pub fn find_peaks(s: &Spectrum, rel_threshold: f64) -> Vec<(f64, f64)> {
    let step = s.grid_step();
    local_maxima(&s.magnitudes, rel_threshold)
        .into_iter()
        .map(|(k, w)| {
            let (a, b, c) = (s.magnitudes[k - 1], s.magnitudes[k], s.magnitudes[k + 1]);
            let curv = a - 2.0 * b + c;
            let offset = if curv < 0.0 { 0.5 * (a - c) / curv } else { 0.0 };
            (s.frequencies[k] + offset * step, w)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombLabel {
    /// `nω`
    Harmonic(u32),
    /// `|Ω_R + kω|`
    Sideband(i32),
    Unclassified,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CombMatch {
    pub frequency: f64,
    pub weight: f64,
    pub label: CombLabel,
    /// Distance to the nearest comb line, whether or not within tolerance.
    pub residual: f64,
}

/// Label each peak with its nearest comb line; lines further than `tol`
/// away are left unclassified. Harmonics win ties.
pub fn comb_match(peaks: &[(f64, f64)], omega: f64, omega_r: f64, tol: f64) -> Vec<CombMatch> {
    peaks
        .iter()
        .map(|&(f, weight)| {
            let n = (f / omega).round().max(0.0);
            let harmonic = (CombLabel::Harmonic(n as u32), (f - n * omega).abs());
            // |Ω_R + kω| = f  means  k ω = ±f - Ω_R
            let sideband = [f, -f]
                .into_iter()
                .map(|target| {
                    let k = ((target - omega_r) / omega).round();
                    (CombLabel::Sideband(k as i32), ((omega_r + k * omega).abs() - f).abs())
                })
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap_or((CombLabel::Unclassified, f64::INFINITY));
            let (label, residual) = if sideband.1 < harmonic.1 { sideband } else { harmonic };
            CombMatch {
                frequency: f,
                weight,
                label: if residual <= tol { label } else { CombLabel::Unclassified },
                residual,
            }
        })
        .collect()
}

impl fmt::Display for CombLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CombLabel::Harmonic(n) => write!(f, "{n}w"),
            CombLabel::Sideband(0) => write!(f, "R"),
            CombLabel::Sideband(k) if k > 0 => write!(f, "R+{k}w"),
            CombLabel::Sideband(k) => write!(f, "|R-{}w|", -k),
            CombLabel::Unclassified => write!(f, "unclassified"),
        }
    }
}
