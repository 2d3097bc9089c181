//! Truncated univariate power series and polynomials with real
//! coefficients, plus a recurrence engine that solves linear third-order
//! ODEs `Σ pₙ(u) C⁽ⁿ⁾(u) = 0` with polynomial coefficients by power series.

mod poly;
mod recurrence;
mod series;

pub use poly::Polynomial;
pub use recurrence::{ode_residual, recurrence_bandwidth, recurrence_from_poly_ode};
pub use series::{
    series_compose, series_evaluate, series_multiply, series_revert, EvalOptions, PowerSeries,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PseriesError {
    #[error("inner series has nonzero constant term {0}")]
    NonzeroConstant(f64),
    #[error("series has zero linear coefficient; not invertible")]
    ZeroLinear,
    #[error("evaluation point u = {0} outside |u| <= 1/2")]
    OutsideRadius(f64),
    #[error("leading ODE coefficient is identically zero")]
    ZeroLeading,
    #[error("indicial degeneracy: zero multiplier on the highest index at m = {m}")]
    IndicialDegeneracy { m: usize },
    #[error("insufficient seeds: need {needed}, got {got}")]
    InsufficientSeeds { needed: usize, got: usize },
}
