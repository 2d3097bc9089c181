//! Floquet analysis on top of the quarter-period series: local Fourier
//! series, symmetry-extended propagators, the periodic solution, the
//! quasienergy with its geometric/dynamical split, and the manifold of
//! vanishing quasienergy.

mod fourier;
mod periodic;
mod propagator;
mod quad;
mod quasi;
mod zero;

pub use fourier::{cos_sum, power_cos_weights, sin_sum, u_series_to_fourier, z_fourier};
pub use periodic::{
    alpha_periodic, periodic_solution, r_parameter, solution_from_angle, PeriodicSolution,
    DEFAULT_HARMONICS, DEGENERATE_TOL,
};
pub use propagator::{
    extend_trajectory, half_monodromy, quarter_monodromy, BasisFourier, QuarterPropagator,
};
pub use quad::{mean as period_mean, nodes as quadrature_nodes};
pub use quasi::{quasienergy, quasienergy_numeric, quasienergy_with_order, QuasienergyResult};
pub use zero::{
    basis_secular_slopes, degenerate_solutions, zero_curve_G_estimate, zero_curve_omega_estimate,
    zero_curve_point, zero_quasienergy_G, zero_quasienergy_omega, DegenerateSolutions,
    ZeroCurvePoint, ON_MANIFOLD_TOL,
};

use rabi_core::CoreError;
use rabi_numint::NumintError;
use rabi_quarter::QuarterError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FloquetError {
    #[error("requested {m} harmonics from a series of order {n}")]
    TruncationTooHigh { m: usize, n: usize },
    #[error("periodicity condition degenerate: every initial angle is periodic")]
    DegenerateAlpha,
    #[error("no sign change of the root function in [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("not on the zero-quasienergy manifold: |z0| = {0}")]
    OffManifold(f64),
    #[error(transparent)]
    Quarter(#[from] QuarterError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Numint(#[from] NumintError),
}
