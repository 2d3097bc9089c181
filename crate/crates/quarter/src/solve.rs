use std::f64::consts::FRAC_PI_2;

use rabi_core::{DimensionlessParams, SpinVector};
use rabi_pseries::{
    ode_residual, recurrence_from_poly_ode, series_evaluate, EvalOptions, PowerSeries,
};

use crate::taylor::{tau_taylor, u_series_from_tau, v_of_u};
use crate::{eta_seeds, ode_coeffs_X, ode_coeffs_Y, xi_seeds, QuarterError, ThirdOrderODE};

pub const DEFAULT_ORDER: usize = 40;
pub const MAX_ORDER: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    X,
    Y,
}

/// `u`-series of `x` and `y` on the first quarter period.
#[derive(Debug, Clone, PartialEq)]
pub struct QuarterSolution {
    pub params: DimensionlessParams,
    pub x0: f64,
    pub y0: f64,
    pub order: usize,
    /// `ξ`-series for the initial conditions `(1, 0, 0)` and `(0, 1, 0)`.
    pub xi_basis: [PowerSeries; 2],
    /// `η`-series for the same two initial conditions.
    pub eta_basis: [PowerSeries; 2],
    pub xi: PowerSeries,
    pub eta: PowerSeries,
    /// Largest ODE residual coefficient relative to the largest series
    /// coefficient, over both basis runs.
    pub residual_x: f64,
    /// As `residual_x` for the Y-equation; `None` when that equation is degenerate.
    pub residual_y: Option<f64>,
}

fn relative_residual(ode: &ThirdOrderODE, s: &PowerSeries) -> f64 {
    let big = s
        .coeffs()
        .iter()
        .fold(0.0f64, |a, c| a.max(c.abs()))
        .max(1e-300);
    let pbig = ode
        .p
        .iter()
        .flat_map(|p| p.coeffs().iter())
        .fold(0.0f64, |a, c| a.max(c.abs()))
        .max(1e-300);
    ode_residual(&ode.p, s)
        .iter()
        .fold(0.0f64, |a, r| a.max(r.abs()))
        / (big * pbig)
}

fn basis(
    d: &DimensionlessParams,
    n: usize,
    v: &PowerSeries,
) -> ([PowerSeries; 2], [PowerSeries; 2]) {
    let run = |s0: SpinVector| {
        let t = tau_taylor(d, s0, 2 * n + 2).expect("z(0) = 0");
        (u_series_from_tau(&t.x, v, n), u_series_from_tau(&t.y, v, n))
    };
    let (x1, y1) = run(SpinVector::new(1.0, 0.0, 0.0));
    let (x2, y2) = run(SpinVector::new(0.0, 1.0, 0.0));
    ([x1, x2], [y1, y2])
}

fn tail_small(s: &PowerSeries) -> bool {
    let n = s.order();
    (s.coeff(n) * 0.5f64.powi(n as i32)).abs() < 1e-12
}

/// Builds the quarter-period series for `S(0) = (x0, y0, 0)`.
///
/// The `u`-coefficients come from the τ-Taylor series composed with
/// `τ² = 4 arcsin²√u`; they satisfy the X- and Y-equations (residuals are
/// recorded). With `order = None` the order starts at [`DEFAULT_ORDER`] and
/// doubles until the last retained term at `u = 1/2` is below `1e−12`.
pub fn solve_quarter(
    d: &DimensionlessParams,
    x0: f64,
    y0: f64,
    order: Option<usize>,
) -> Result<QuarterSolution, QuarterError> {
    let mut n = order.unwrap_or(DEFAULT_ORDER).max(3);
    let (xi_basis, eta_basis) = loop {
        let v = v_of_u(n);
        let (xb, yb) = basis(d, n, &v);
        let done = order.is_some() || n >= MAX_ORDER || xb.iter().chain(yb.iter()).all(tail_small);
        if done {
            break (xb, yb);
        }
        n = (2 * n).min(MAX_ORDER);
    };
    let combine = |b: &[PowerSeries; 2]| b[0].scale(x0).add(&b[1].scale(y0));
    let ox = ode_coeffs_X(d);
    let residual_x = xi_basis
        .iter()
        .map(|s| relative_residual(&ox, s))
        .fold(0.0, f64::max);
    let residual_y = match ode_coeffs_Y(d) {
        Ok(oy) => Some(
            eta_basis
                .iter()
                .map(|s| relative_residual(&oy, s))
                .fold(0.0, f64::max),
        ),
        Err(QuarterError::DegenerateY) => None,
        Err(e) => return Err(e),
    };
    Ok(QuarterSolution {
        params: *d,
        x0,
        y0,
        order: n,
        xi: combine(&xi_basis),
        eta: combine(&eta_basis),
        xi_basis,
        eta_basis,
        residual_x,
        residual_y,
    })
}

/// Runs the forward recurrences of the X- and Y-equations from the seeds.
///
/// The forward recurrence amplifies rounding errors geometrically, so it
/// is only reliable to moderate orders; [`solve_quarter`] does not use it.
pub fn solve_quarter_recurrence(
    d: &DimensionlessParams,
    x0: f64,
    y0: f64,
    order: usize,
) -> Result<(PowerSeries, PowerSeries), QuarterError> {
    let xs = recurrence_from_poly_ode(&ode_coeffs_X(d).p, &xi_seeds(d, x0, y0), order)?;
    let ys = recurrence_from_poly_ode(&ode_coeffs_Y(d)?.p, &eta_seeds(d, x0, y0), order)?;
    Ok((xs, ys))
}

fn quarter_u(tau: f64) -> Result<f64, QuarterError> {
    if !(-1e-12..=FRAC_PI_2 + 1e-12).contains(&tau) {
        return Err(QuarterError::OutsideQuarter(tau));
    }
    Ok((0.5 * tau.clamp(0.0, FRAC_PI_2)).sin().powi(2))
}

/// `x(τ)` or `y(τ)` for `τ ∈ [0, π/2]`.
pub fn evaluate_component(
    qs: &QuarterSolution,
    which: Component,
    tau: f64,
) -> Result<f64, QuarterError> {
    let u = quarter_u(tau)?;
    let s = match which {
        Component::X => &qs.xi,
        Component::Y => &qs.eta,
    };
    Ok(series_evaluate(s, u, EvalOptions::default())?.0)
}

impl QuarterSolution {
    /// Component of basis solution `j` (0: `S(0) = e₁`, 1: `S(0) = e₂`).
    pub fn basis_value(&self, j: usize, which: Component, tau: f64) -> Result<f64, QuarterError> {
        let u = quarter_u(tau)?;
        let s = match which {
            Component::X => &self.xi_basis[j],
            Component::Y => &self.eta_basis[j],
        };
        Ok(series_evaluate(s, u, EvalOptions::default())?.0)
    }
}
