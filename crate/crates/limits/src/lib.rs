//! Limiting cases of the elliptically driven Rabi problem.
//!
//! * circular polarization (`F = G`): closed-form propagator and quasienergy;
//! * adiabatic limit `ω → 0`: the spin follows the field, with first and
//!   second order corrections and the quasienergy expansion `E0 + ωE1 + ω²E2`;
//! * small amplitudes: the Fourier–Taylor (FT) series and its quasienergy;
//! * vanishing level splitting `ω₀ = 0`: the Bessel solution for linear
//!   polarization and its near-linear and near-circular corrections.

mod adiabatic;
mod circular;
mod ft;
mod lomo;

pub use adiabatic::{
    adiabatic_quasienergy, adiabatic_spin, adiabatic_spin_terms, e2_reference_point,
    AdiabaticQuasienergy, E2_FIT_OMEGAS,
};
pub use circular::{circular_monodromy, circular_propagator, circular_quasienergy, rabi_frequency};
pub use ft::{
    ft_build, ft_evaluate, ft_leading_split, ft_quasienergy, ft_quasienergy_series, FTSeries,
    FT_GUARD, FT_TAIL_TOL,
};
pub use lomo::{
    near_circular_solution, near_linear_Y, near_linear_solution, zero_field_fourier,
    zero_field_solution,
};

use rabi_core::CoreError;
use rabi_numint::NumintError;
use rabi_specfun::SpecfunError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LimitsError {
    #[error("not circular: f = {f}, g = {g}")]
    NotCircular { f: f64, g: f64 },
    #[error("field vanishes at t = {0}")]
    VanishingField(f64),
    #[error("driving frequency {omega} within the guard band of resonance m = {m}")]
    Resonance { m: usize, omega: f64 },
    #[error("FT tail estimate {0} exceeds tolerance")]
    TailTooLarge(f64),
    #[error("pole of the closed form: {0}")]
    Pole(&'static str),
    #[error("inconsistent parameters: {0}")]
    Inconsistent(&'static str),
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Numint(#[from] NumintError),
}
