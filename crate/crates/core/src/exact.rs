//! Direct integration of `i d|Ψ⟩/dt = H(t)|Ψ⟩`.
//!
//! Dormand-Prince 5(4) with local extrapolation; the step controller bounds
//! the error per unit step. Steps are clipped so that every requested grid point is hit
//! exactly; no interpolation and no renormalization of the state.

use num_complex::Complex64;

use crate::model::mat_vec;
use crate::{hamiltonian_at, DriveParams, Error, Result, SpinState, TimeSeries};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Largest step, as a fraction of the drive period `2π/ω`.
    pub max_step: f64,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_step: 0.1,
        }
    }
}

/// Tolerances below this cannot be met in double precision.
const MIN_REL_TOL: f64 = 100.0 * f64::EPSILON;

impl IntegratorConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(Error::InvalidParams(format!(
                "tolerances must be positive, got rel {} abs {}",
                self.rel_tol, self.abs_tol
            )));
        }
        if !(self.max_step > 0.0 && self.max_step <= 0.1) {
            return Err(Error::InvalidParams(format!(
                "max_step must lie in (0, 0.1] drive periods, got {}",
                self.max_step
            )));
        }
        if self.rel_tol < MIN_REL_TOL {
            return Err(Error::ToleranceUnachievable(format!(
                "rel_tol {} is below the rounding floor {MIN_REL_TOL:e}",
                self.rel_tol
            )));
        }
        Ok(())
    }

    pub fn with_tolerances(self, rel_tol: f64, abs_tol: f64) -> Self {
        Self {
            rel_tol,
            abs_tol,
            ..self
        }
    }
}

// Dormand-Prince tableau
const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const B5: [f64; 7] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

type Amp = [Complex64; 2];

fn rhs(p: &DriveParams, t: f64, y: &Amp) -> Amp {
    let h = hamiltonian_at(p, t);
    let s = mat_vec(&h, &SpinState { up: y[0], down: y[1] });
    let mi = Complex64::new(0.0, -1.0);
    [mi * s.up, mi * s.down]
}

/// One Dormand-Prince step: the fifth-order update and the error estimate.
fn dopri_step(p: &DriveParams, t: f64, y: &Amp, h: f64) -> (Amp, Amp) {
    let mut k = [[Complex64::new(0.0, 0.0); 2]; 7];
    for s in 0..7 {
        let mut ys = *y;
        for (j, kj) in k.iter().enumerate().take(s) {
            let a = A[s][j] * h;
            if a != 0.0 {
                ys[0] += kj[0] * a;
                ys[1] += kj[1] * a;
            }
        }
        k[s] = rhs(p, t + C[s] * h, &ys);
    }
    let mut y5 = *y;
    let mut err = [Complex64::new(0.0, 0.0); 2];
    for s in 0..7 {
        for c in 0..2 {
            y5[c] += k[s][c] * (B5[s] * h);
            err[c] += k[s][c] * ((B5[s] - B4[s]) * h);
        }
    }
    (y5, err)
}

fn error_norm(y: &Amp, y_new: &Amp, err: &Amp, cfg: &IntegratorConfig) -> f64 {
    let mut worst: f64 = 0.0;
    for c in 0..2 {
        for (e, a, b) in [
            (err[c].re, y[c].re, y_new[c].re),
            (err[c].im, y[c].im, y_new[c].im),
        ] {
            let scale = cfg.abs_tol + cfg.rel_tol * a.abs().max(b.abs());
            worst = worst.max((e / scale).abs());
        }
    }
    worst
}

/// Evolve `initial`, taken to be the state at `grid[0]`, onto every grid
/// point. The grid must be strictly monotone; a decreasing grid integrates
/// backward in time.
pub fn evolve_exact(
    p: &DriveParams,
    initial: SpinState,
    grid: &[f64],
    cfg: &IntegratorConfig,
) -> Result<Vec<SpinState>> {
    p.validate()?;
    cfg.validate()?;
    if (initial.norm_sqr() - 1.0).abs() > 1e-8 {
        return Err(Error::InvalidParams(format!(
            "initial state has norm² {}",
            initial.norm_sqr()
        )));
    }
    let Some(&first) = grid.first() else {
        return Ok(Vec::new());
    };
    let dir = match grid.get(1) {
        Some(&second) if second < first => -1.0,
        _ => 1.0,
    };
    if grid.iter().any(|t| !t.is_finite()) || grid.windows(2).any(|w| !(dir * (w[1] - w[0]) > 0.0)) {
        return Err(Error::InvalidParams("time grid must be finite and strictly monotone".into()));
    }

    let h_max = cfg.max_step * p.period();
    let mut y: Amp = [initial.up, initial.down];
    let mut t = first;
    let mut h = h_max.min(0.01 / (p.bare_splitting() + p.amplitude.abs()).max(1e-300));
    let mut out = Vec::with_capacity(grid.len());
    out.push(initial);

    for &target in &grid[1..] {
        while dir * (target - t) > 0.0 {
            let remaining = (target - t).abs();
            // land exactly on the grid point rather than overshoot it
            let clipped = h.min(remaining);
            let h_min = 1e-14 * t.abs().max(remaining).max(1.0);
            if clipped < h_min && clipped < remaining {
                return Err(Error::StepUnderflow { t });
            }
            let (y_new, err) = dopri_step(p, t, &y, dir * clipped);
            // error per unit step: the bound shrinks with the step, so the
            // accumulated error stays at the tolerance scale however many
            // steps a strong drive forces
            let e = error_norm(&y, &y_new, &err, cfg) * h_max / clipped;
            if !e.is_finite() {
                return Err(Error::StepUnderflow { t });
            }
            let factor = if e == 0.0 {
                5.0
            } else {
                (0.9 * e.powf(-0.25)).clamp(0.2, 5.0)
            };
            if e <= 1.0 {
                t = if clipped == remaining { target } else { t + dir * clipped };
                y = y_new;
                // a clip is not a controller decision; keep the free step
                if clipped == h {
                    h = (h * factor).min(h_max);
                }
            } else {
                h = clipped * factor.min(1.0);
                if h < h_min {
                    return Err(Error::StepUnderflow { t });
                }
            }
        }
        out.push(SpinState { up: y[0], down: y[1] });
    }
    Ok(out)
}

/// `P_up` on `samples` points `t0, t0 + dt, ...`, starting from spin-down
/// at `t0`.
pub fn population_up_exact(p: &DriveParams, t0: f64, dt: f64, samples: usize, cfg: &IntegratorConfig) -> Result<TimeSeries> {
    let grid: Vec<f64> = crate::model::time_grid(t0, dt, samples).collect();
    let states = evolve_exact(p, SpinState::spin_down(), &grid, cfg)?;
    TimeSeries::new(t0, dt, states.iter().map(SpinState::population_up).collect())
}

/// Fixed-step Dormand-Prince (fifth-order update, no error control) over
/// `[t0, t1]` in `steps` equal steps.
pub fn evolve_fixed_step(p: &DriveParams, initial: SpinState, t0: f64, t1: f64, steps: usize) -> Result<SpinState> {
    p.validate()?;
    if steps == 0 {
        return Err(Error::InvalidParams("fixed-step integration needs at least one step".into()));
    }
    let h = (t1 - t0) / steps as f64;
    let mut y: Amp = [initial.up, initial.down];
    for i in 0..steps {
        y = dopri_step(p, t0 + i as f64 * h, &y, h).0;
    }
    Ok(SpinState { up: y[0], down: y[1] })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        let cfg = IntegratorConfig::default();
        assert!(cfg.validate().is_ok());
        assert!(IntegratorConfig { max_step: 0.2, ..cfg }.validate().is_err());
        assert!(cfg.with_tolerances(0.0, 1e-12).validate().is_err());
        assert!(matches!(
            cfg.with_tolerances(1e-17, 1e-20).validate(),
            Err(Error::ToleranceUnachievable(_))
        ));
    }

    #[test]
    fn rejects_bad_grid() {
        let p = DriveParams::new(1.0, 0.0, 0.5, 1.0).unwrap();
        let cfg = IntegratorConfig::default();
        assert!(evolve_exact(&p, SpinState::spin_down(), &[0.0, 1.0, 1.0], &cfg).is_err());
        assert!(evolve_exact(&p, SpinState::spin_down(), &[0.0, 1.0, 0.5], &cfg).is_err());
        assert!(evolve_exact(&p, SpinState::spin_down(), &[0.0, f64::NAN], &cfg).is_err());
    }

    #[test]
    fn starts_spin_down() {
        let p = DriveParams::new(1.0, 1.0, 1.4, 1.4).unwrap();
        let s = population_up_exact(&p, 0.0, 0.1, 10, &IntegratorConfig::default()).unwrap();
        assert_eq!(s.values[0], 0.0);
    }

    #[test]
    fn single_point_grid() {
        let p = DriveParams::new(1.0, 1.0, 1.4, 1.4).unwrap();
        let out = evolve_exact(&p, SpinState::spin_down(), &[3.0], &IntegratorConfig::default()).unwrap();
        assert_eq!(out, vec![SpinState::spin_down()]);
    }
}
