//! Work statistics of a two-level system measured in the energy basis of
//! `H(0) = (ν/2)σ₁` before and after one driving period.
//!
//! The inverse temperature `β = ħω/k_BT` is measured in units of the
//! *driving* frequency, so the thermal weights are `e^{∓βν/2}/Z`.

mod scan;
mod stats;

pub use scan::{work_scan, WorkScan, REFINE_STEPS};
pub use stats::{
    small_amplitude_work, transition_probabilities, unitary_from_params, work_statistics,
    work_statistics_from_params, WorkStatistics,
};

use rabi_core::CoreError;
use rabi_floquet::FloquetError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WorkError {
    #[error("invalid inverse temperature beta = {0}")]
    InvalidBeta(f64),
    #[error("small-amplitude work has a pole at omega = omega0 = {0}")]
    Pole(f64),
    #[error("scan needs at least 3 frequencies, got {0}")]
    ScanTooShort(usize),
    #[error(transparent)]
    Floquet(#[from] FloquetError),
    #[error(transparent)]
    Core(#[from] CoreError),
}
