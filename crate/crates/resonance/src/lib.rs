//! Resonance frequencies `ω_res⁽ⁿ⁾ ≈ ω₀/(2n−1)`: the `det Ξ = 0` criterion,
//! bracketed root finding, and the stored small-amplitude power series.

mod root;
mod tables;
mod xi;

pub use root::{
    circular_resonance, resonance_frequency, resonance_series_eval, xi_det_at, BRACKET, ROOT_RTOL,
};
pub use tables::{omega11_closed_form, omega20_closed_form, Coeff, ResonanceTable};
pub use xi::{xi_matrix, XiMatrix};

use rabi_core::CoreError;
use rabi_floquet::FloquetError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ResonanceError {
    #[error("det Xi has no sign change in [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("order {order} exceeds the stored table for n = {n} (complete through {max})")]
    OrderBeyondTable { n: usize, order: usize, max: usize },
    #[error("resonance index n = {0} not supported here")]
    UnsupportedIndex(usize),
    #[error(transparent)]
    Floquet(#[from] FloquetError),
    #[error(transparent)]
    Core(#[from] CoreError),
}
