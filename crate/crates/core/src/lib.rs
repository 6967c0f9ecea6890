//! Driven two-level system dynamics beyond the rotating-wave approximation.
//!
//! The model is a biased qubit under a sinusoidal drive,
//!
//! ```text
//! H(t) = -(Δ/2) σx - ((ε + A cos ωt)/2) σz        (ħ = 1)
//! ```
//!
//! treated with the counter-rotating-hybridized rotating-wave (CHRW) method:
//! a two-parameter unitary transformation whose parameters `(ξ, ζ)` are fixed
//! self-consistently so that the transformed Hamiltonian takes RWA form with a
//! renormalized splitting `Ξ̃` and drive `Ã`.
//!
//! Modules:
//! - [`model`]: parameter sets, spin states, time grids, the lab-frame Hamiltonian.
//! - [`special`]: integer-order Bessel functions `J_n(x)`.
//! - [`chrw`]: the self-consistent solve, closed-form dynamics, Rabi frequencies
//!   and Bloch-Siegert shifts.
//! - [`baselines`]: Rabi-RWA and RWA-in-rotating-frame closed forms.
//! - [`exact`]: adaptive Runge-Kutta integration of the Schrödinger equation.
//! - [`spectrum`]: Fourier spectra, peak extraction and frequency-comb labelling.
//!
//! All frequencies are angular frequencies.

// `!(x > 0.0)` is used on purpose: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod baselines;
pub mod chrw;
mod error;
pub mod exact;
pub mod model;
pub mod spectrum;
pub mod special;

pub use error::{Error, Result};
pub use model::{bare_splitting, hamiltonian_at, DriveParams, Matrix2, SpinState, TimeSeries};
