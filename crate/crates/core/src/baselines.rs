//! Rotating-wave baselines: the conventional energy-basis RWA ("Rabi-RWA")
//! and the RWA taken in the frame rotating with the drive ("RWA-RF").

use crate::special::bessel_j_signed;
use crate::{bare_splitting, DriveParams, Result};

/// Energy-basis quantities of the Rabi-RWA treatment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RabiRwaFrame {
    pub u0: f64,
    pub v0: f64,
    /// `A Δ / Ξ₀`, the transverse drive in the energy basis.
    pub a_x: f64,
    /// `A ε / Ξ₀`, the longitudinal drive dropped by the RWA.
    pub a_z: f64,
    /// `δ = Ξ₀ - ω`
    pub detuning: f64,
    /// `Ω_RR = sqrt(δ² + (A_x/2)²)`
    pub omega_rr: f64,
}

impl RabiRwaFrame {
    pub fn new(p: &DriveParams) -> Self {
        let s = bare_splitting(p);
        let ratio = p.epsilon / s;
        let a_x = p.amplitude * p.delta / s;
        let detuning = s - p.omega;
        Self {
            u0: (0.5 - 0.5 * ratio).max(0.0).sqrt(),
            v0: (0.5 + 0.5 * ratio).max(0.0).sqrt(),
            a_x,
            a_z: p.amplitude * ratio,
            detuning,
            omega_rr: detuning.hypot(0.5 * a_x),
        }
    }
}

pub fn rabi_rwa_frequency(p: &DriveParams) -> f64 {
    RabiRwaFrame::new(p).omega_rr
}

/// Rabi-RWA `⟨σz(t)⟩` for an initial σz = -1 state.
pub fn rabi_rwa_sigma_z(p: &DriveParams, t: f64) -> f64 {
    let f = RabiRwaFrame::new(p);
    let s = bare_splitting(p);
    let (ce, cd) = (p.epsilon / s, p.delta / s);
    let om = f.omega_rr;
    let sin2 = (0.5 * om * t).sin().powi(2);
    // every ratio below has a numerator that vanishes with Ω_RR
    let (ax2, dax, d2, cross) = if om > 0.0 {
        let om2 = om * om;
        (
            f.a_x * f.a_x / (2.0 * om2),
            f.detuning * f.a_x / om2,
            2.0 * f.detuning * f.detuning / om2,
            (p.delta * f.detuning - p.epsilon * f.a_x / 2.0) / (s * om) * (om * t).sin(),
        )
    } else {
        (0.0, 0.0, 0.0, 0.0)
    };
    let (wt_sin, wt_cos) = (p.omega * t).sin_cos();

    -ce * (ce * (1.0 - ax2 * sin2) + cd * dax * sin2)
        - cd * (wt_cos * (cd - (cd * d2 - ce * dax) * sin2) - wt_sin * cross)
}

pub fn rabi_rwa_population(p: &DriveParams, t: f64) -> f64 {
    (0.5 * (1.0 + rabi_rwa_sigma_z(p, t))).clamp(0.0, 1.0)
}

/// Photon number `n = -round(ε/ω)` of the nearest `nω + ε = 0` resonance.
pub fn default_photon_number(p: &DriveParams) -> i32 {
    let n = -(p.epsilon / p.omega).round();
    if n == 0.0 {
        0
    } else {
        n as i32
    }
}

/// RWA-RF evolution for a chosen photon number `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RwaRf {
    pub n: i32,
    /// Effective tunneling `J_n(A/ω) Δ`.
    pub frequency: f64,
    /// Set when `|nω + ε| > 1e-9 ω`: the closed form is being used away
    /// from its resonance condition.
    pub off_resonance: bool,
}

impl RwaRf {
    pub fn new(p: &DriveParams, n: i32) -> Result<Self> {
        let jn = bessel_j_signed(n, p.amplitude / p.omega)?;
        Ok(Self {
            n,
            frequency: jn * p.delta,
            off_resonance: (n as f64 * p.omega + p.epsilon).abs() > 1e-9 * p.omega,
        })
    }

    /// `sin²(J_n(A/ω) Δ t / 2)`
    pub fn population(&self, t: f64) -> f64 {
        (0.5 * self.frequency * t).sin().powi(2)
    }
}

/// One-shot RWA-RF population; the flag reports a violated resonance condition.
pub fn rwa_rf_population(p: &DriveParams, n: i32, t: f64) -> Result<(f64, bool)> {
    let r = RwaRf::new(p, n)?;
    Ok((r.population(t), r.off_resonance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::bessel_j;
    use proptest::prelude::*;

    #[test]
    fn rabi_rwa_starts_down() {
        for (d, e, a, w) in [(1.0, 0.4, 0.7, 1.2), (1.0, -2.0, 1.0, 0.5), (0.3, 0.0, 0.2, 0.3)] {
            let p = DriveParams::new(d, e, a, w).unwrap();
            assert!(rabi_rwa_population(&p, 0.0) < 1e-15);
        }
    }

    #[test]
    fn unbiased_resonance_reduces_to_drive_phase() {
        for a in [0.1, 0.8, 3.0] {
            let p = DriveParams::new(1.0, 0.0, a, 1.0).unwrap();
            for k in 0..100 {
                let t = 0.31 * k as f64;
                let want = 0.5 * (1.0 - t.cos());
                assert!((rabi_rwa_population(&p, t) - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn frame_invariants() {
        let p = DriveParams::new(0.9, -0.6, 1.7, 1.1).unwrap();
        let f = RabiRwaFrame::new(&p);
        assert!((f.u0 * f.u0 + f.v0 * f.v0 - 1.0).abs() < 1e-12);
        assert!((f.a_x.hypot(f.a_z) - p.amplitude).abs() < 1e-10);
        assert!(f.omega_rr >= f.detuning.abs());
    }

    #[test]
    fn rabi_rwa_frequency_examples() {
        let s0 = 1.0f64.hypot(0.5);
        let p = DriveParams::new(1.0, 0.5, 0.0, s0).unwrap();
        assert_eq!(rabi_rwa_frequency(&p), 0.0);
        let p = DriveParams::new(1.0, 0.0, 0.6, 1.0).unwrap();
        assert!((rabi_rwa_frequency(&p) - 0.3).abs() < 1e-15);
    }

    #[test]
    fn rabi_rwa_minimum_over_splitting_sits_above_drive() {
        // Δ/2π = 4.869 GHz, A/2π = 4.100 GHz, ω/2π = 6.1 GHz; sweep Ξ₀ via ε
        let (d, a, w) = (4.869, 4.100, 6.1);
        let best = (0..=20_000)
            .map(|i| d + 0.001 + i as f64 * 1e-4)
            .map(|s0: f64| {
                let p = DriveParams::new(d, (s0 * s0 - d * d).sqrt(), a, w).unwrap();
                (s0, rabi_rwa_frequency(&p))
            })
            .min_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        assert!((best.0 - 6.5).abs() < 0.05, "minimum at {}", best.0);
    }

    #[test]
    fn cdt_at_bessel_zeros() {
        let zeros = [2.404825557695773, 5.520078110286311, 8.653727912911013];
        for z in zeros {
            let w = 1.3;
            let p = DriveParams::new(1.0, 0.0, z * w, w).unwrap();
            for k in 0..500 {
                let (pu, off) = rwa_rf_population(&p, 0, 0.5 * k as f64).unwrap();
                assert!(pu < 1e-20, "{pu}");
                assert!(!off);
            }
        }
        assert_eq!(rwa_rf_population(&DriveParams::new(1.0, 0.0, 1.0, 1.0).unwrap(), 0, 0.0).unwrap().0, 0.0);
    }

    #[test]
    fn one_photon_period() {
        // ε = -ω, n = 1, A = ω: oscillation frequency J₁(1)Δ
        let p = DriveParams::new(1.0, -1.0, 1.0, 1.0).unwrap();
        let rf = RwaRf::new(&p, 1).unwrap();
        assert!(!rf.off_resonance);
        // period of sin²(Ωt/2) is 2π/Ω: find successive zeros by bisection
        let f = |t: f64| (0.5 * rf.frequency * t).sin();
        let (mut lo, mut hi) = (1.0, 20.0);
        assert!(f(lo).signum() != f(hi).signum());
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(lo).signum() == f(mid).signum() {
                lo = mid
            } else {
                hi = mid
            }
        }
        let measured = std::f64::consts::TAU / lo;
        assert!((measured - bessel_j(1, 1.0).unwrap()).abs() < 1e-6);
    }

    #[test]
    fn photon_number_and_mismatch_flag() {
        let p = DriveParams::new(1.0, 0.6, 0.1, 0.1).unwrap();
        assert_eq!(default_photon_number(&p), -6);
        assert!(!RwaRf::new(&p, -6).unwrap().off_resonance);
        assert!(RwaRf::new(&p, -5).unwrap().off_resonance);
        let p = DriveParams::new(1.0, 0.3, 1.0, 2.0).unwrap();
        assert_eq!(default_photon_number(&p), 0);
        assert!(RwaRf::new(&p, 0).unwrap().off_resonance);
    }

    proptest! {
        #[test]
        fn rabi_rwa_is_a_probability(
            d in 0.1f64..3.0, e in -3.0f64..3.0, a in 0.0f64..3.0, w in 0.1f64..3.0, t in 0.0f64..100.0,
        ) {
            let p = DriveParams::new(d, e, a, w).unwrap();
            let s = rabi_rwa_sigma_z(&p, t);
            prop_assert!((-1.0 - 1e-12..=1.0 + 1e-12).contains(&s));
        }

        #[test]
        fn rwa_rf_independent_of_bias_sign(
            a in 0.0f64..5.0, w in 0.2f64..3.0, n in 1i32..4, t in 0.0f64..50.0,
        ) {
            // n ω = -ε holds for (n, ε) and (-n, -ε)
            let p = DriveParams::new(1.0, -(n as f64) * w, a, w).unwrap();
            let q = DriveParams::new(1.0, n as f64 * w, a, w).unwrap();
            let (x, off_x) = rwa_rf_population(&p, n, t).unwrap();
            let (y, off_y) = rwa_rf_population(&q, -n, t).unwrap();
            prop_assert!(!off_x && !off_y);
            prop_assert!((x - y).abs() < 1e-15);
        }
    }
}
