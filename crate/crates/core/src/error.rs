use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("self-consistent solve did not converge after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("integrator step size underflow at t = {t}")]
    StepUnderflow { t: f64 },

    #[error("requested tolerance cannot be achieved: {0}")]
    ToleranceUnachievable(String),

    #[error("series too short for a spectrum: {len} samples, need at least {min}")]
    SeriesTooShort { len: usize, min: usize },

    #[error("no interior minimum of the Rabi frequency in [{lo}, {hi}]")]
    NoMinimum { lo: f64, hi: f64 },
}
