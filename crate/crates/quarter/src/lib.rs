//! Quarter-period solution in the variable `u = sin²(τ/2)`.
//!
//! For `z(0) = 0` the components `x(τ) = X(u)` and `y(τ) = Y(u)` satisfy
//! third-order linear ODEs in `u` with polynomial coefficients. Their power
//! series converge for `|u| < 1`; on `τ ∈ [0, π/2]` we have `u ≤ 1/2`.

mod coeffs;
mod solve;
mod taylor;

pub use coeffs::{ode_coeffs_X, ode_coeffs_Y, ThirdOrderODE};
pub use solve::{
    evaluate_component, solve_quarter, solve_quarter_recurrence, Component, QuarterSolution,
    DEFAULT_ORDER, MAX_ORDER,
};
pub use taylor::{eta_seeds, tau_taylor, u_series_from_tau, xi_seeds, TauTaylor};

use rabi_pseries::PseriesError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuarterError {
    #[error("initial spin must have z(0) = 0, got {0}")]
    NonzeroZ(f64),
    #[error("Y-equation degenerate: f²g + fν + gν² = 0")]
    DegenerateY,
    #[error("tau = {0} outside the quarter period [0, π/2]")]
    OutsideQuarter(f64),
    #[error(transparent)]
    Series(#[from] PseriesError),
}
