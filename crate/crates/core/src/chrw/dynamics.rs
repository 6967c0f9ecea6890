//! Closed-form CHRW dynamics for a system prepared in σz = -1.

use num_complex::Complex64;

use super::ChrwSolution;
use crate::{DriveParams, SpinState};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Amplitudes `(c₁, c₂)` on the `τz = -1` and `τz = +1` eigenstates of the
/// renormalized frame; `c₁(0) = -u`, `c₂(0) = -v`.
pub fn chrw_amplitudes(s: &ChrwSolution, p: &DriveParams, t: f64) -> (Complex64, Complex64) {
    let half = 0.5 * s.rabi_freq * t;
    let cos = half.cos();
    // sin(Ω_R t/2)/Ω_R, regular at Ω_R = 0
    let sin_over = if s.rabi_freq > 0.0 {
        half.sin() / s.rabi_freq
    } else {
        0.5 * t
    };
    let d = s.detuning_tilde * sin_over;
    let a = s.a_tilde * sin_over;
    let phase = Complex64::from_polar(1.0, 0.5 * p.omega * t);
    let c1 = phase * (-s.u * Complex64::new(cos, d) + I * (s.v * a));
    let c2 = phase.conj() * (-s.v * Complex64::new(cos, -d) + I * (s.u * a));
    (c1, c2)
}

/// `⟨σz(t)⟩` in the lab frame, expanded in the renormalized-frame amplitudes.
///
/// The middle (`ξζ`) term carries `+2uv(|c₁|²-|c₂|²)`: this is what the
/// back-rotation `U† e^{S} σz e^{-S} U` produces, and it is what agrees with
/// [`state_at`] and with direct integration of `H_CHRW`.
pub fn sigma_z_expectation(s: &ChrwSolution, p: &DriveParams, t: f64) -> f64 {
    let (c1, c2) = chrw_amplitudes(s, p, t);
    let theta = s.theta(p, t);
    let (u, v) = (s.u, s.v);
    let x2 = s.x_norm * s.x_norm;
    let one_minus_cos = 1.0 - theta.cos();

    let diff = c1.norm_sqr() - c2.norm_sqr();
    let cross = c2.conj() * c1;
    let re_sum = 2.0 * cross.re; // c₂*c₁ + c₁*c₂
    let im_term = 2.0 * cross.im; // i (c₂*c₁ - c₁*c₂)
    let vu = v * v - u * u;

    let z_part = 1.0 - s.zeta * s.zeta / x2 * one_minus_cos;
    let x_part = s.xi * s.zeta / x2 * one_minus_cos;
    let y_part = s.zeta / s.x_norm * theta.sin();

    z_part * (vu * diff - 2.0 * u * v * re_sum) + x_part * (2.0 * u * v * diff + vu * re_sum) + y_part * im_term
}

/// `P_up(t) = (⟨σz⟩ + 1)/2`, clamped to `[0, 1]` against rounding.
pub fn population_up(s: &ChrwSolution, p: &DriveParams, t: f64) -> f64 {
    (0.5 * (1.0 + sigma_z_expectation(s, p, t))).clamp(0.0, 1.0)
}

/// Lab-frame state `|Ψ(t)⟩ = e^{-S(t)} U |Ψ̃(t)⟩`, built from the matrices
/// rather than the expanded expectation value.
pub fn state_at(s: &ChrwSolution, p: &DriveParams, t: f64) -> SpinState {
    let (c1, c2) = chrw_amplitudes(s, p, t);
    // U = u σz - v σx acting on (c₂, c₁)
    let up = s.u * c2 - s.v * c1;
    let down = -s.v * c2 - s.u * c1;
    // e^{-S} = cos(Θ/2) + i sin(Θ/2) (ξσz + ζσx)/X
    let half = 0.5 * s.theta(p, t);
    let (sn, cs) = half.sin_cos();
    let nz = s.xi / s.x_norm;
    let nx = s.zeta / s.x_norm;
    let isn = I * sn;
    SpinState {
        up: (cs + isn * nz) * up + isn * nx * down,
        down: isn * nx * up + (cs - isn * nz) * down,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chrw::solve;
    use proptest::prelude::*;

    fn solved(d: f64, e: f64, a: f64, w: f64) -> (ChrwSolution, DriveParams) {
        let p = DriveParams::new(d, e, a, w).unwrap();
        (solve(&p).unwrap(), p)
    }

    #[test]
    fn initial_amplitudes() {
        let (s, p) = solved(1.0, 0.4, 1.3, 1.2924);
        let (c1, c2) = chrw_amplitudes(&s, &p, 0.0);
        assert_eq!(c1, Complex64::new(-s.u, 0.0));
        assert_eq!(c2, Complex64::new(-s.v, 0.0));
        assert!(population_up(&s, &p, 0.0) < 1e-15);
        assert_eq!(state_at(&s, &p, 0.0).population_up(), 0.0);
    }

    #[test]
    fn swap_at_renormalized_resonance() {
        // tune ω onto Ξ̃: Ξ̃ depends on ω only weakly, so iterate
        let p0 = DriveParams::new(1.0, 0.5, 0.3, 1.0).unwrap();
        let mut p = p0;
        for _ in 0..60 {
            let s = solve(&p).unwrap();
            p = p.with_omega(s.xi_big_tilde);
        }
        let s = solve(&p).unwrap();
        assert!(s.detuning_tilde.abs() < 1e-12, "{}", s.detuning_tilde);
        let t = std::f64::consts::PI / s.rabi_freq;
        let (c1, c2) = chrw_amplitudes(&s, &p, t);
        assert!((c1.norm_sqr() - s.v * s.v).abs() < 1e-10);
        assert!((c2.norm_sqr() - s.u * s.u).abs() < 1e-10);
    }

    #[test]
    fn zero_drive_matches_static_closed_form() {
        for (d, e, w) in [(1.0, 0.0, 1.0), (1.0, 0.7, 0.4), (0.6, -1.2, 2.0)] {
            let (s, p) = solved(d, e, 0.0, w);
            let xi0 = p.bare_splitting();
            for k in 0..200 {
                let t = 0.37 * k as f64;
                let want = (d / xi0).powi(2) * (0.5 * xi0 * t).sin().powi(2);
                assert!((population_up(&s, &p, t) - want).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn zero_rabi_frequency_is_regular() {
        let (s, p) = solved(1.0, 0.0, 0.0, 1.0);
        assert_eq!(s.rabi_freq, 0.0);
        let (c1, c2) = chrw_amplitudes(&s, &p, 3.0);
        assert!((c1.norm_sqr() + c2.norm_sqr() - 1.0).abs() < 1e-12);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn amplitudes_stay_normalized(
            d in 0.2f64..2.0, e in -2.0f64..2.0, ratio in 0.0f64..1.0, w in 0.3f64..3.0,
            t in 0.0f64..200.0,
        ) {
            let (s, p) = solved(d, e, ratio * w, w);
            let (c1, c2) = chrw_amplitudes(&s, &p, t);
            prop_assert!((c1.norm_sqr() + c2.norm_sqr() - 1.0).abs() < 1e-12);
            let pu = population_up(&s, &p, t);
            prop_assert!((0.0..=1.0).contains(&pu));
        }

        #[test]
        fn expanded_form_matches_matrix_form(
            d in 0.2f64..2.0, e in -2.0f64..2.0, ratio in 0.0f64..1.5, w in 0.3f64..3.0,
            t in 0.0f64..100.0,
        ) {
            let (s, p) = solved(d, e, ratio * w, w);
            let psi = state_at(&s, &p, t);
            prop_assert!((psi.norm_sqr() - 1.0).abs() < 1e-12);
            let direct = psi.sigma_z();
            prop_assert!((direct - sigma_z_expectation(&s, &p, t)).abs() < 1e-12);
        }
    }
}
