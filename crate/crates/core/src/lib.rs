//! Shared domain types for the elliptically driven Rabi problem.
//!
//! The classical spin `S = (x, y, z)` obeys `S' = h(τ) × S` with the
//! dimensionless field `h(τ) = (ν, g cos τ, f sin τ)`, where `τ = ω t`,
//! `ν = ω₀/ω`, `f = F/ω` and `g = G/ω`.  The half-period propagator
//! `R(π, 0)` is fixed by two numbers `(r, α)`; so are the full-period
//! monodromy and the quasienergy.

mod error;
mod monodromy;
mod params;
mod quasienergy;
mod rotation;
mod spin;

pub use error::CoreError;
pub use monodromy::{
    fit_full_monodromy, full_monodromy_from_params, half_monodromy_from_params,
    monodromy_params_from_half, MonodromyParams,
};
pub use params::{field_at, to_dimensionless, DimensionlessParams, DriveParams};
pub use quasienergy::{
    fold_unit, physical_quasienergy, quasienergy_branches, quasienergy_from_r, QuasienergySplit,
};
pub use rotation::{generator, Rotation3, TOL_ORTHO};
pub use spin::SpinVector;

pub use nalgebra::{Matrix3, Vector3};

/// Normalizes an angle to `[0, period)`.
pub fn wrap_angle(a: f64, period: f64) -> f64 {
    let w = a.rem_euclid(period);
    if w >= period {
        0.0
    } else {
        w
    }
}
