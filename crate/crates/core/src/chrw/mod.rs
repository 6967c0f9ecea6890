//! Counter-rotating-hybridized rotating-wave (CHRW) treatment.
//!
//! The unitary `exp(S)` with `S = -i (A/2ω) sin(ωt) (ξσz + ζσx)` maps the
//! driven Hamiltonian onto a zero-photon part with renormalized tunneling
//! `Δ̃` and bias `ε̃`, a one-photon part, and higher harmonics. Choosing
//! `(ξ, ζ)` so that the one-photon part has pure rotating-wave form (see
//! [`residuals`]) and discarding the higher harmonics leaves
//!
//! ```text
//! H_CHRW = (Ξ̃/2) τz + (Ã/2) (τ₊ e^{-iωt} + τ₋ e^{iωt})
//! ```
//!
//! in the eigenbasis of the zero-photon part. Everything downstream
//! (populations, Rabi frequencies, shifts) follows in closed form.

mod dynamics;
mod rabi;
mod solver;

pub use dynamics::{chrw_amplitudes, population_up, sigma_z_expectation, state_at};
pub use rabi::{
    bloch_siegert_shift_2nd, generalized_rabi_frequency, rabi_frequency_2nd, rabi_r0,
    resonance_shift_numeric, second_order_bs_reference, ResonanceShift,
};
pub use solver::{solve, solve_self_consistent, weak_drive_limit, SolverConfig};

use crate::special::bessel_j_all;
use crate::{DriveParams, Error, Result};

/// Self-consistent transformation parameters together with every derived,
/// renormalized quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChrwSolution {
    pub xi: f64,
    pub zeta: f64,
    /// `X = sqrt(ξ² + ζ²)`
    pub x_norm: f64,
    /// `Z = (A/ω) X`
    pub z_arg: f64,
    pub delta_tilde: f64,
    pub epsilon_tilde: f64,
    pub j_c: f64,
    /// `Ξ̃ = sqrt(Δ̃² + ε̃²)`
    pub xi_big_tilde: f64,
    pub a_tilde: f64,
    pub u: f64,
    pub v: f64,
    /// `δ̃ = Ξ̃ - ω`
    pub detuning_tilde: f64,
    /// `Ω_R = sqrt(δ̃² + Ã²)`
    pub rabi_freq: f64,
    /// `max(|r_ξ|, |r_ζ|)` at the returned point.
    pub residual_norm: f64,
}

impl ChrwSolution {
    /// Assemble all derived quantities at `(xi, zeta)`.
    pub fn at(p: &DriveParams, xi: f64, zeta: f64) -> Result<Self> {
        let r = renormalize(p, xi, zeta)?;
        let (r_xi, r_zeta) = residuals_from(p, xi, zeta, &r)?;
        let ratio = r.epsilon_tilde / r.xi_big_tilde;
        let u = (0.5 - 0.5 * ratio).max(0.0).sqrt();
        let v = (0.5 + 0.5 * ratio).max(0.0).sqrt();
        let detuning_tilde = r.xi_big_tilde - p.omega;
        Ok(Self {
            xi,
            zeta,
            x_norm: r.x_norm,
            z_arg: r.z_arg,
            delta_tilde: r.delta_tilde,
            epsilon_tilde: r.epsilon_tilde,
            j_c: r.j_c,
            xi_big_tilde: r.xi_big_tilde,
            a_tilde: r.a_tilde,
            u,
            v,
            detuning_tilde,
            rabi_freq: detuning_tilde.hypot(r.a_tilde),
            residual_norm: r_xi.abs().max(r_zeta.abs()),
        })
    }

    /// Phase `Θ(t) = Z sin(ωt)` of the transformation.
    pub fn theta(&self, p: &DriveParams, t: f64) -> f64 {
        self.z_arg * (p.omega * t).sin()
    }

    /// `Δξ - εζ`, the combination that sets the effective coupling.
    pub fn coupling(&self, p: &DriveParams) -> f64 {
        p.delta * self.xi - p.epsilon * self.zeta
    }
}

/// Renormalized zero-photon quantities at a trial `(ξ, ζ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Renormalized {
    pub delta_tilde: f64,
    pub epsilon_tilde: f64,
    pub j_c: f64,
    pub xi_big_tilde: f64,
    /// `Ã = 2 ((Δξ - εζ)/X) J₁(Z)`
    pub a_tilde: f64,
    pub x_norm: f64,
    pub z_arg: f64,
    j1_over_z: f64,
}

pub fn renormalize(p: &DriveParams, xi: f64, zeta: f64) -> Result<Renormalized> {
    let x_norm = xi.hypot(zeta);
    if !(x_norm > 0.0) || !x_norm.is_finite() {
        return Err(Error::Domain(format!(
            "transformation parameters must not both vanish (xi = {xi}, zeta = {zeta})"
        )));
    }
    let z_arg = p.amplitude / p.omega * x_norm;
    let j = bessel_j_all(2, z_arg)?;
    let x2 = x_norm * x_norm;
    let coupling = p.delta * xi - p.epsilon * zeta;
    let shift = (1.0 - j[0]) * coupling / x2;
    let delta_tilde = p.delta - xi * shift;
    let epsilon_tilde = p.epsilon + zeta * shift;
    let j1_over_z = if z_arg > 0.0 { j[1] / z_arg } else { 0.5 };
    Ok(Renormalized {
        delta_tilde,
        epsilon_tilde,
        j_c: (1.0 - j[0] - j[2]) / x2,
        xi_big_tilde: delta_tilde.hypot(epsilon_tilde),
        a_tilde: 2.0 * coupling / x_norm * j[1],
        x_norm,
        z_arg,
        j1_over_z,
    })
}

/// Residuals of the two self-consistency conditions: vanishing
/// counter-rotating coefficient (`r_xi`) and vanishing `cos(ωt) τz` term
/// (`r_zeta`).
pub fn residuals(p: &DriveParams, xi: f64, zeta: f64) -> Result<(f64, f64)> {
    let r = renormalize(p, xi, zeta)?;
    residuals_from(p, xi, zeta, &r)
}

/// `r_xi / A` and `r_zeta`. The first condition is O(A) as a whole, so the
/// solver works with the scaled form, which stays regular as `A → 0`.
pub(crate) fn scaled_residuals(p: &DriveParams, xi: f64, zeta: f64) -> Result<(f64, f64)> {
    let r = renormalize(p, xi, zeta)?;
    let (bracket, r_zeta) = brackets(xi, zeta, &r)?;
    // J₁(Z)/A = (J₁(Z)/Z)(X/ω)
    let coupling = p.delta * xi - p.epsilon * zeta;
    let scaled = 0.5 * bracket - coupling / p.omega * r.j1_over_z;
    Ok((scaled, r_zeta))
}

fn residuals_from(p: &DriveParams, xi: f64, zeta: f64, r: &Renormalized) -> Result<(f64, f64)> {
    let (bracket, r_zeta) = brackets(xi, zeta, r)?;
    let r_xi = 0.5 * p.amplitude * bracket - 0.5 * r.a_tilde;
    Ok((r_xi, r_zeta))
}

/// `[(Δ̃/Ξ̃)(1-ξ-ζ²J_c) + (ε̃/Ξ̃)ζ(1-ξJ_c)]` and `r_zeta`.
fn brackets(xi: f64, zeta: f64, r: &Renormalized) -> Result<(f64, f64)> {
    if !(r.xi_big_tilde > 0.0) {
        return Err(Error::Domain("renormalized splitting vanishes".into()));
    }
    let a = 1.0 - xi - zeta * zeta * r.j_c;
    let b = zeta * (1.0 - xi * r.j_c);
    let bracket = (r.delta_tilde * a + r.epsilon_tilde * b) / r.xi_big_tilde;
    let r_zeta = r.epsilon_tilde * a - r.delta_tilde * b;
    Ok((bracket, r_zeta))
}

/// Renormalized drive in its bracket form,
/// `A [(Δ̃/Ξ̃)(1-ξ-ζ²J_c) + (ε̃/Ξ̃)ζ(1-ξJ_c)]`. Equal to the Bessel form
/// [`Renormalized::a_tilde`] only at a self-consistent point.
pub fn a_tilde_bracket_form(p: &DriveParams, xi: f64, zeta: f64) -> Result<f64> {
    let r = renormalize(p, xi, zeta)?;
    Ok(p.amplitude * brackets(xi, zeta, &r)?.0)
}
