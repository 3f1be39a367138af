//! Error type shared across the crate.

use crate::C64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("invalid potential: sampler returned non-finite value at x = {x}")]
    InvalidPotential { x: f64 },

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("reflection coefficient denominator |a({k})| = {magnitude:.3e} below 1e-12")]
    NearZeroDenominator { k: C64, magnitude: f64 },

    #[error("inconsistent eigenfunction at kappa = {kappa}: component ratios disagree by {rel:.3e} (likely spurious eigenvalue)")]
    InconsistentEigenfunction { kappa: C64, rel: f64 },

    #[error("corrupt scattering data: failed check `{check}`: {detail}")]
    CorruptScatteringData { check: &'static str, detail: String },

    #[error("contour construction failure on arc `{label}`: {detail}")]
    ContourConstruction { label: String, detail: String },

    #[error("singular factorization: 1 - r(k)·r̃(k) vanishes at k = {k}")]
    SingularFactorization { k: C64 },

    #[error("delta function undefined: 1 + r·r̃ = {value:.3e} ≤ 0 at support point {z}")]
    DeltaUndefined { z: C64, value: f64 },

    #[error("cannot encircle eigenvalue {kappa}: too close to the continuous spectrum")]
    CannotEncircle { kappa: C64 },

    #[error("collocation solver failure: {0}")]
    SolverFailure(String),

    #[error("instability detected in FSM march at t = {t:.6}")]
    InstabilityDetected { t: f64 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
