use rabi_core::{field_at, DimensionlessParams, Rotation3, SpinVector};

use crate::dopri::{integrate, DenseSolution, IntegrationStats};
use crate::{check_tol, NumintError, DEFAULT_TOL};

/// Sampled solution of `S′ = h(τ) × S` with dense output between samples.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub taus: Vec<f64>,
    pub states: Vec<SpinVector>,
    pub stats: IntegrationStats,
    dense: DenseSolution<3>,
}

impl Trajectory {
    /// Interpolated state anywhere on the integration interval.
    pub fn at(&self, tau: f64) -> SpinVector {
        SpinVector::from_array(self.dense.eval(tau))
    }

    pub fn last(&self) -> SpinVector {
        SpinVector::from_array(self.dense.y1)
    }

    /// Largest deviation of `‖S(τ)‖` from `‖S(0)‖` over the samples.
    pub fn norm_drift(&self) -> f64 {
        let n0 = self.states[0].norm();
        self.states
            .iter()
            .map(|s| (s.norm() - n0).abs())
            .fold(0.0, f64::max)
    }
}

fn cross_rhs(d: DimensionlessParams) -> impl Fn(f64, &[f64; 3]) -> [f64; 3] {
    move |t, s| {
        let h = field_at(&d, t);
        [
            h[1] * s[2] - h[2] * s[1],
            h[2] * s[0] - h[0] * s[2],
            h[0] * s[1] - h[1] * s[0],
        ]
    }
}

fn solve(
    d: &DimensionlessParams,
    s0: SpinVector,
    tau_end: f64,
    tol: f64,
) -> Result<DenseSolution<3>, NumintError> {
    check_tol(tol)?;
    integrate(cross_rhs(*d), 0.0, s0.to_array(), tau_end, tol)
}

/// Integrates from `τ = 0` to `tau_end` (negative allowed) and samples at
/// every accepted step.
pub fn integrate_classical(
    d: &DimensionlessParams,
    s0: SpinVector,
    tau_end: f64,
    tol: f64,
) -> Result<Trajectory, NumintError> {
    let dense = solve(d, s0, tau_end, tol)?;
    let (taus, states) = dense
        .nodes()
        .into_iter()
        .map(|(t, y)| (t, SpinVector::from_array(y)))
        .unzip();
    Ok(Trajectory {
        taus,
        states,
        stats: dense.stats,
        dense,
    })
}

/// Integrates from `τ = 0` and samples at the given monotone times (all of
/// the same sign as the integration direction).
pub fn integrate_classical_at(
    d: &DimensionlessParams,
    s0: SpinVector,
    taus: &[f64],
    tol: f64,
) -> Result<Trajectory, NumintError> {
    let end = taus
        .iter()
        .copied()
        .fold(0.0f64, |a, t| if t.abs() > a.abs() { t } else { a });
    let dense = solve(d, s0, end, tol)?;
    let states = taus
        .iter()
        .map(|&t| SpinVector::from_array(dense.eval(t)))
        .collect();
    Ok(Trajectory {
        taus: taus.to_vec(),
        states,
        stats: dense.stats,
        dense,
    })
}

/// Propagator `R(tau_to, tau_from)`, integrating all three basis columns at once.
pub fn propagator(
    d: &DimensionlessParams,
    tau_from: f64,
    tau_to: f64,
    tol: f64,
) -> Result<Rotation3, NumintError> {
    check_tol(tol)?;
    let f = cross_rhs(*d);
    let rhs = move |t: f64, y: &[f64; 9]| {
        let mut out = [0.0; 9];
        for c in 0..3 {
            let col = [y[c], y[3 + c], y[6 + c]];
            let v = f(t, &col);
            out[c] = v[0];
            out[3 + c] = v[1];
            out[6 + c] = v[2];
        }
        out
    };
    let id = [1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0];
    let sol = integrate(rhs, tau_from, id, tau_to, tol)?;
    let y = sol.y1;
    Ok(Rotation3::from_rows([
        [y[0], y[1], y[2]],
        [y[3], y[4], y[5]],
        [y[6], y[7], y[8]],
    ]))
}

/// `R(τ, 0)` at the default tolerance.
pub fn monodromy_numeric(d: &DimensionlessParams, tau: f64) -> Result<Rotation3, NumintError> {
    propagator(d, 0.0, tau, DEFAULT_TOL)
}

pub fn monodromy_numeric_tol(
    d: &DimensionlessParams,
    tau: f64,
    tol: f64,
) -> Result<Rotation3, NumintError> {
    propagator(d, 0.0, tau, tol)
}
