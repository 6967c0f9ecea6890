//! Physical parameters, spin states, time grids and the lab-frame Hamiltonian.
//!
//! Basis ordering is fixed throughout the crate: component 0 is the σz = +1
//! ("up") state, component 1 the σz = -1 ("down") state.

use num_complex::Complex64;

use crate::{Error, Result};

/// 2×2 complex matrix in the σz basis, row-major.
pub type Matrix2 = [[Complex64; 2]; 2];

/// Tunneling `delta`, static bias `epsilon`, drive amplitude `amplitude` and
/// drive frequency `omega`, all angular frequencies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveParams {
    pub delta: f64,
    pub epsilon: f64,
    pub amplitude: f64,
    pub omega: f64,
}

impl DriveParams {
    /// Validating constructor: `delta > 0`, `omega > 0`, `amplitude >= 0`,
    /// everything finite.
    pub fn new(delta: f64, epsilon: f64, amplitude: f64, omega: f64) -> Result<Self> {
        let p = Self {
            delta,
            epsilon,
            amplitude,
            omega,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let all_finite = [self.delta, self.epsilon, self.amplitude, self.omega]
            .iter()
            .all(|v| v.is_finite());
        if !all_finite {
            return Err(Error::InvalidParams("parameters must be finite".into()));
        }
        if self.delta <= 0.0 {
            return Err(Error::InvalidParams(format!("delta must be > 0, got {}", self.delta)));
        }
        if self.omega <= 0.0 {
            return Err(Error::InvalidParams(format!("omega must be > 0, got {}", self.omega)));
        }
        if self.amplitude < 0.0 {
            return Err(Error::InvalidParams(format!(
                "amplitude must be >= 0, got {}",
                self.amplitude
            )));
        }
        Ok(())
    }

    /// Bare splitting `Ξ₀ = sqrt(Δ² + ε²)`.
    pub fn bare_splitting(&self) -> f64 {
        bare_splitting(self)
    }

    pub fn with_amplitude(self, amplitude: f64) -> Self {
        Self { amplitude, ..self }
    }

    pub fn with_omega(self, omega: f64) -> Self {
        Self { omega, ..self }
    }

    pub fn with_epsilon(self, epsilon: f64) -> Self {
        Self { epsilon, ..self }
    }

    /// Drive period `2π/ω`.
    pub fn period(&self) -> f64 {
        std::f64::consts::TAU / self.omega
    }
}

pub fn bare_splitting(p: &DriveParams) -> f64 {
    p.delta.hypot(p.epsilon)
}

/// `H(t) = -(Δ/2)σx - ((ε + A cos ωt)/2)σz`.
pub fn hamiltonian_at(p: &DriveParams, t: f64) -> Matrix2 {
    let bias = 0.5 * (p.epsilon + p.amplitude * (p.omega * t).cos());
    let tunnel = Complex64::new(-0.5 * p.delta, 0.0);
    [
        [Complex64::new(-bias, 0.0), tunnel],
        [tunnel, Complex64::new(bias, 0.0)],
    ]
}

/// Two-component amplitude vector in the σz basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinState {
    pub up: Complex64,
    pub down: Complex64,
}

impl SpinState {
    pub const NORM_TOL: f64 = 1e-12;

    /// Normalized state; rejects inputs whose squared norm is off by more
    /// than [`Self::NORM_TOL`].
    pub fn new(up: Complex64, down: Complex64) -> Result<Self> {
        let s = Self { up, down };
        if (s.norm_sqr() - 1.0).abs() > Self::NORM_TOL {
            return Err(Error::InvalidParams(format!(
                "spin state not normalized: |up|²+|down|² = {}",
                s.norm_sqr()
            )));
        }
        Ok(s)
    }

    pub fn spin_up() -> Self {
        Self {
            up: Complex64::new(1.0, 0.0),
            down: Complex64::new(0.0, 0.0),
        }
    }

    pub fn spin_down() -> Self {
        Self {
            up: Complex64::new(0.0, 0.0),
            down: Complex64::new(1.0, 0.0),
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.up.norm_sqr() + self.down.norm_sqr()
    }

    /// `|⟨up|ψ⟩|²`.
    pub fn population_up(&self) -> f64 {
        self.up.norm_sqr()
    }

    /// `⟨σz⟩`.
    pub fn sigma_z(&self) -> f64 {
        self.up.norm_sqr() - self.down.norm_sqr()
    }
}

/// Uniformly sampled real observable.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    pub t0: f64,
    pub dt: f64,
    pub values: Vec<f64>,
}

impl TimeSeries {
    pub fn new(t0: f64, dt: f64, values: Vec<f64>) -> Result<Self> {
        if !(dt > 0.0 && dt.is_finite()) || !t0.is_finite() {
            return Err(Error::InvalidParams(format!("time grid needs finite t0 and dt > 0, got dt = {dt}")));
        }
        if values.is_empty() {
            return Err(Error::InvalidParams("time series must be non-empty".into()));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidParams(format!("sample {i} is not finite")));
        }
        Ok(Self { t0, dt, values })
    }

    /// Sample `f` on `samples` points `t0, t0 + dt, ...`.
    pub fn sample(t0: f64, dt: f64, samples: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = time_grid(t0, dt, samples).map(f).collect();
        Self::new(t0, dt, values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn time(&self, i: usize) -> f64 {
        self.t0 + i as f64 * self.dt
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        time_grid(self.t0, self.dt, self.values.len())
    }

    /// Duration covered by the samples, `len * dt`.
    pub fn window(&self) -> f64 {
        self.values.len() as f64 * self.dt
    }
}

/// `t0 + i*dt` for `i in 0..n`, computed by multiplication so long grids do
/// not accumulate rounding.
pub fn time_grid(t0: f64, dt: f64, n: usize) -> impl Iterator<Item = f64> + Clone {
    (0..n).map(move |i| t0 + i as f64 * dt)
}

/// Uniform grid of `samples` points covering `[0, t_max]` inclusive.
pub fn uniform_grid(t_max: f64, samples: usize) -> Result<(f64, usize)> {
    if samples < 2 || !(t_max > 0.0) {
        return Err(Error::InvalidParams(format!(
            "need samples >= 2 and t_max > 0, got {samples} and {t_max}"
        )));
    }
    Ok((t_max / (samples - 1) as f64, samples))
}

pub(crate) fn mat_vec(m: &Matrix2, s: &SpinState) -> SpinState {
    SpinState {
        up: m[0][0] * s.up + m[0][1] * s.down,
        down: m[1][0] * s.up + m[1][1] * s.down,
    }
}
