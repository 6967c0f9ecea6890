//! Generalized Rabi frequency and resonance shifts.

use std::ops::RangeInclusive;

use super::solve;
use crate::{bare_splitting, DriveParams, Error, Result};

/// Self-consistent `Ω_R = sqrt((ω - Ξ̃)² + Ã²)`.
pub fn generalized_rabi_frequency(p: &DriveParams) -> Result<f64> {
    Ok(solve(p)?.rabi_freq)
}

/// Second order in `A`: `Ω² = (ω - Ξ₀)² + A²Δ² / (2Ξ₀(ω + Ξ₀))`.
pub fn rabi_frequency_2nd(p: &DriveParams) -> f64 {
    let s = bare_splitting(p);
    let detuning = p.omega - s;
    let drive = p.amplitude * p.amplitude * p.delta * p.delta / (2.0 * s * (p.omega + s));
    (detuning * detuning + drive).sqrt()
}

/// `(A²/(4Ξ₀)) (1 - (3/4)(Δ/Ξ₀)²)`, the shift obtained by extremizing the
/// second-order `Ω_R²` with respect to `Δ`.
pub fn bloch_siegert_shift_2nd(p: &DriveParams) -> f64 {
    let s = bare_splitting(p);
    let r = p.delta / s;
    p.amplitude * p.amplitude / (4.0 * s) * (1.0 - 0.75 * r * r)
}

/// Weak-drive Rabi frequency on resonance, `Ω_R0 = (Δ/2)(A/Ξ₀)`.
pub fn rabi_r0(p: &DriveParams) -> f64 {
    0.5 * p.delta * p.amplitude / bare_splitting(p)
}

/// Textbook second-order shift `Ω_R0² / (4Ξ₀)`.
pub fn second_order_bs_reference(p: &DriveParams) -> f64 {
    let r0 = rabi_r0(p);
    0.25 * r0 * r0 / bare_splitting(p)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceShift {
    /// `ω_res - Ξ₀`; positive when the resonance sits above the bare splitting.
    pub delta_omega: f64,
    /// Drive frequency minimizing `Ω_R`.
    pub omega_res: f64,
}

const SCAN_POINTS: usize = 64;

/// Locate the drive frequency in `scan` at which the full self-consistent
/// `Ω_R(ω)` is smallest. A coarse scan brackets the minimum, golden-section
/// search narrows the bracket to `1e-6` relative width.
pub fn resonance_shift_numeric(
    delta: f64,
    epsilon: f64,
    amplitude: f64,
    scan: RangeInclusive<f64>,
) -> Result<ResonanceShift> {
    let (lo, hi) = (*scan.start(), *scan.end());
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(Error::InvalidParams(format!("scan interval [{lo}, {hi}] must be positive and ordered")));
    }
    let base = DriveParams::new(delta, epsilon, amplitude, lo)?;
    let rabi = |w: f64| generalized_rabi_frequency(&base.with_omega(w));

    let step = (hi - lo) / (SCAN_POINTS - 1) as f64;
    let grid: Vec<f64> = (0..SCAN_POINTS).map(|i| lo + i as f64 * step).collect();
    let values = grid.iter().map(|&w| rabi(w)).collect::<Result<Vec<_>>>()?;
    let best = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0);
    if best == 0 || best == SCAN_POINTS - 1 {
        return Err(Error::NoMinimum { lo, hi });
    }

    let omega_res = golden_section(&rabi, grid[best - 1], grid[best + 1], 1e-6)?;
    Ok(ResonanceShift {
        delta_omega: omega_res - base.bare_splitting(),
        omega_res,
    })
}

fn golden_section(f: &dyn Fn(f64) -> Result<f64>, mut a: f64, mut b: f64, rel: f64) -> Result<f64> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    while (b - a) > rel * 0.5 * (a.abs() + b.abs()) {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d)?;
        }
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{SQRT_2, TAU};

    #[test]
    fn published_rabi_frequencies() {
        let p = DriveParams::new(1.0, 4.0, 0.5, 0.5).unwrap();
        assert!((generalized_rabi_frequency(&p).unwrap() - 3.6238).abs() < 1e-3);
        let p = DriveParams::new(1.0, 0.6, 0.1, 0.1).unwrap();
        assert!((generalized_rabi_frequency(&p).unwrap() - 1.0677).abs() < 1e-3);
    }

    #[test]
    fn zero_drive_on_resonance() {
        let p = DriveParams::new(1.0, 0.3, 0.0, 1.0f64.hypot(0.3)).unwrap();
        assert!(generalized_rabi_frequency(&p).unwrap() < 1e-10);
    }

    #[test]
    fn second_order_rabi_examples() {
        let p = DriveParams::new(1.0, 1.0, SQRT_2, SQRT_2).unwrap();
        assert!((rabi_frequency_2nd(&p) - 0.5).abs() < 1e-15);
        // resonance at zero bias gives A/2
        let p = DriveParams::new(1.0, 0.0, 0.03, 1.0).unwrap();
        assert!((rabi_frequency_2nd(&p) - 0.015).abs() < 1e-15);
        let p = DriveParams::new(1.3, 0.4, 0.0, 2.0).unwrap();
        assert_eq!(rabi_frequency_2nd(&p), (2.0 - p.bare_splitting()).abs());
    }

    #[test]
    fn bloch_siegert_examples() {
        let p = DriveParams::new(2.0, 0.0, 0.7, 1.0).unwrap();
        assert!((bloch_siegert_shift_2nd(&p) - 0.49 / 32.0).abs() < 1e-15);
        assert_eq!(bloch_siegert_shift_2nd(&p.with_amplitude(0.0)), 0.0);
        let p = DriveParams::new(4.869, 4.154, 4.100, 6.0).unwrap();
        assert!((bloch_siegert_shift_2nd(&p) - 0.372).abs() < 1e-3);
    }

    #[test]
    fn reference_shift_examples() {
        let p = DriveParams::new(1.5, 0.0, 0.4, 1.0).unwrap();
        assert!((second_order_bs_reference(&p) - 0.16 / 24.0).abs() < 1e-15);
        assert_eq!(second_order_bs_reference(&p.with_amplitude(0.0)), 0.0);
    }

    #[test]
    fn flux_qubit_shift() {
        let g = TAU;
        let (d, e, a) = (4.869 * g, 4.154 * g, 4.100 * g);
        let s0 = d.hypot(e);
        let shift = resonance_shift_numeric(d, e, a, (s0 - 0.5 * g)..=(s0 + 0.5 * g)).unwrap();
        let mhz = shift.delta_omega / g * 1e3;
        assert!((mhz - 70.0).abs() < 5.0, "{mhz} MHz");
        // the second-order reference overestimates in this regime
        let p = DriveParams::new(d, e, a, s0).unwrap();
        assert!(rabi_r0(&p) / g >= 0.8);
        assert!(second_order_bs_reference(&p) > shift.delta_omega);
    }

    #[test]
    fn zero_drive_resonance_at_bare_splitting() {
        let s0 = 1.0f64.hypot(0.5);
        let shift = resonance_shift_numeric(1.0, 0.5, 0.0, 0.5..=2.0).unwrap();
        assert!(shift.delta_omega.abs() < 1e-5, "{}", shift.delta_omega);
        assert!((shift.omega_res - s0).abs() < 1e-5);
    }

    #[test]
    fn weak_drive_shift_cross_checks() {
        // zero bias: the numeric shift and the closed form coincide
        let shift = resonance_shift_numeric(1.0, 0.0, 0.1, 0.9..=1.1).unwrap();
        let p = DriveParams::new(1.0, 0.0, 0.1, 1.0).unwrap();
        let bs = bloch_siegert_shift_2nd(&p);
        assert!((shift.delta_omega - bs).abs() < 0.1 * bs, "{} vs {bs}", shift.delta_omega);
        // finite bias: the numeric shift follows Ω_R0²/(4Ξ₀)
        for (e, a) in [(0.5, 0.1), (1.0, 0.14), (-0.7, 0.1)] {
            let s0 = 1.0f64.hypot(e);
            let shift = resonance_shift_numeric(1.0, e, a, (s0 - 0.1)..=(s0 + 0.1)).unwrap();
            let r = second_order_bs_reference(&DriveParams::new(1.0, e, a, s0).unwrap());
            assert!((shift.delta_omega - r).abs() < 0.1 * r, "eps {e}: {} vs {r}", shift.delta_omega);
        }
    }

    #[test]
    fn boundary_minimum_is_rejected() {
        let err = resonance_shift_numeric(1.0, 0.0, 0.1, 2.0..=3.0).unwrap_err();
        assert!(matches!(err, Error::NoMinimum { .. }));
    }
}
