//! Self-consistent solve for `(ξ, ζ)`.
//!
//! Damped Newton iteration with a central-difference Jacobian, started from
//! the weak-drive limit. Strong drives (`A/ω > 1`) are reached by
//! continuation in `A` so the returned root stays on the branch connected to
//! `A = 0`; a failed continuation step is retried at half the size.

use super::{scaled_residuals, ChrwSolution};
use crate::{DriveParams, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Bound on the returned `residual_norm`.
    pub tol: f64,
    /// Newton iterations allowed per continuation step.
    pub max_iter: usize,
    /// Relative central-difference step for the Jacobian.
    pub fd_step: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 200,
            fd_step: 1e-7,
        }
    }
}

/// Solve with [`SolverConfig::default`].
pub fn solve(p: &DriveParams) -> Result<ChrwSolution> {
    solve_with(p, &SolverConfig::default())
}

pub fn solve_self_consistent(p: &DriveParams, tol: f64, max_iter: usize) -> Result<ChrwSolution> {
    solve_with(
        p,
        &SolverConfig {
            tol,
            max_iter,
            ..SolverConfig::default()
        },
    )
}

/// `A → 0` root: `ξ = (ωΞ₀ + ε²)/(Ξ₀(Ξ₀ + ω))`, `ζ = εΔ/(Ξ₀(Ξ₀ + ω))`.
pub fn weak_drive_limit(p: &DriveParams) -> (f64, f64) {
    let s = p.bare_splitting();
    let denom = s * (s + p.omega);
    ((p.omega * s + p.epsilon * p.epsilon) / denom, p.epsilon * p.delta / denom)
}

pub fn solve_with(p: &DriveParams, cfg: &SolverConfig) -> Result<ChrwSolution> {
    p.validate()?;
    if !(cfg.tol > 0.0) || cfg.max_iter == 0 {
        return Err(Error::InvalidParams(format!(
            "solver needs tol > 0 and max_iter > 0, got {} and {}",
            cfg.tol, cfg.max_iter
        )));
    }

    let start = weak_drive_limit(p);
    if p.amplitude == 0.0 {
        let mut s = ChrwSolution::at(p, start.0, start.1)?;
        // Both conditions hold identically at zero drive.
        s.residual_norm = 0.0;
        return Ok(s);
    }

    let pin_zeta = p.epsilon == 0.0;
    let direct = if p.amplitude <= p.omega {
        newton(p, start, pin_zeta, cfg).ok()
    } else {
        None
    };
    let (xi, zeta) = match direct {
        Some(root) => root,
        None => continuation(p, start, pin_zeta, cfg)?,
    };

    let s = ChrwSolution::at(p, xi, zeta)?;
    if !(s.residual_norm < cfg.tol) {
        return Err(Error::NonConvergence {
            iterations: cfg.max_iter,
            residual: s.residual_norm,
        });
    }
    Ok(s)
}

fn continuation(
    p: &DriveParams,
    start: (f64, f64),
    pin_zeta: bool,
    cfg: &SolverConfig,
) -> Result<(f64, f64)> {
    let target = p.amplitude;
    let nominal = if target > p.omega {
        (0.1 * p.omega).min(target / 10.0)
    } else {
        target / 10.0
    };
    let min_step = target * 1e-9;

    let mut a = 0.0;
    let mut root = start;
    let mut last_move = f64::INFINITY;
    let mut step = nominal;
    while a < target {
        let a_next = (a + step).min(target);
        let trial = newton(&p.with_amplitude(a_next), root, pin_zeta, cfg);
        let accepted = match trial {
            Ok(next) => {
                let moved = (next.0 - root.0).hypot(next.1 - root.1);
                // a jump much larger than the previous step's motion means
                // Newton landed on another branch
                let jumped = last_move.is_finite() && moved > 5.0 * last_move + 0.05;
                if jumped {
                    None
                } else {
                    Some((next, moved))
                }
            }
            Err(_) => None,
        };
        match accepted {
            Some((next, moved)) => {
                root = next;
                last_move = moved;
                a = a_next;
                step = (2.0 * step).min(nominal);
            }
            None => {
                step *= 0.5;
                if step < min_step {
                    let residual = scaled_residuals(&p.with_amplitude(a_next), root.0, root.1)
                        .map(|(x, z)| x.abs().max(z.abs()))
                        .unwrap_or(f64::NAN);
                    return Err(Error::NonConvergence {
                        iterations: cfg.max_iter,
                        residual,
                    });
                }
            }
        }
    }
    Ok(root)
}

/// Newton on `(r_xi/A, r_zeta)`; with `pin_zeta` only `ξ` moves and `ζ`
/// stays exactly at its starting value.
fn newton(
    p: &DriveParams,
    start: (f64, f64),
    pin_zeta: bool,
    cfg: &SolverConfig,
) -> Result<(f64, f64)> {
    let eval = |x: f64, z: f64| -> Option<(f64, f64)> {
        match scaled_residuals(p, x, z) {
            Ok((a, b)) if a.is_finite() && b.is_finite() => Some((a, b)),
            _ => None,
        }
    };
    let scale = p.amplitude.max(1.0);
    let size = |r: (f64, f64)| (r.0 * scale).abs().max(r.1.abs());
    let target = cfg.tol * 1e-2;

    let (mut x, mut z) = start;
    let mut r = eval(x, z).ok_or_else(|| Error::Domain("solver started at a singular point".into()))?;
    for _ in 0..cfg.max_iter {
        let norm = size(r);
        if norm < target {
            return Ok((x, z));
        }

        let hx = cfg.fd_step * x.abs().max(1.0);
        let hz = cfg.fd_step * z.abs().max(1.0);
        let jac = |f: &dyn Fn(f64) -> Option<(f64, f64)>, h: f64| -> Option<(f64, f64)> {
            let (a, b) = (f(h)?, f(-h)?);
            Some(((a.0 - b.0) / (2.0 * h), (a.1 - b.1) / (2.0 * h)))
        };
        let col_x = jac(&|h| eval(x + h, z), hx);
        let (dx, dz) = if pin_zeta {
            let d = col_x.map(|c| c.0).filter(|d| *d != 0.0);
            match d {
                Some(d) => (r.0 / d, 0.0),
                None => break,
            }
        } else {
            let col_z = jac(&|h| eval(x, z + h), hz);
            let (Some(cx), Some(cz)) = (col_x, col_z) else { break };
            let det = cx.0 * cz.1 - cz.0 * cx.1;
            if det == 0.0 || !det.is_finite() {
                break;
            }
            ((r.0 * cz.1 - cz.0 * r.1) / det, (cx.0 * r.1 - r.0 * cx.1) / det)
        };

        let mut lambda = 1.0;
        let mut moved = false;
        while lambda > 1e-6 {
            let (tx, tz) = (x - lambda * dx, z - lambda * dz);
            if let Some(tr) = eval(tx, tz) {
                if size(tr) < norm {
                    x = tx;
                    z = tz;
                    r = tr;
                    moved = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if !moved {
            // rounding floor reached
            break;
        }
    }
    if size(r) < cfg.tol {
        return Ok((x, z));
    }
    Err(Error::NonConvergence {
        iterations: cfg.max_iter,
        residual: size(r),
    })
}
