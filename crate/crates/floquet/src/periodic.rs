use std::f64::consts::PI;

use rabi_core::{monodromy_params_from_half, wrap_angle, DimensionlessParams, SpinVector};
use serde::{Deserialize, Serialize};

use crate::fourier::{cos_sum, sin_sum, u_series_to_fourier, z_fourier};
use crate::propagator::QuarterPropagator;
use crate::{quad, FloquetError};

/// Default number of retained harmonics.
pub const DEFAULT_HARMONICS: usize = 12;

/// Threshold below which both periodicity conditions count as vanishing.
pub const DEGENERATE_TOL: f64 = 1e-12;

/// `r` within this distance of 0 or 1 makes `R(2π, 0)` the identity.
const TRIVIAL_R_TOL: f64 = 1e-6;

/// Fourier representation of a solution with `z(0) = 0`:
/// `x = Σ x_μ cos μτ`, `y = Σ y_μ cos μτ`, `z = z₀τ + Σ z_μ sin μτ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeriodicSolution {
    /// Initial angle: `S(0) = (cos α, sin α, 0)`.
    pub alpha: f64,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    /// Sine coefficients; `z[0]` is unused and zero.
    pub z: Vec<f64>,
    pub z0: f64,
    pub harmonics: usize,
}

impl PeriodicSolution {
    pub fn eval(&self, tau: f64) -> SpinVector {
        SpinVector::new(
            cos_sum(&self.x, tau),
            cos_sum(&self.y, tau),
            self.z0 * tau + sin_sum(&self.z, tau),
        )
    }

    /// Largest coefficient that violates the even/odd harmonic pattern.
    pub fn parity_defect(&self) -> f64 {
        let odd = |v: &[f64]| {
            v.iter()
                .skip(1)
                .step_by(2)
                .fold(0.0f64, |a, c| a.max(c.abs()))
        };
        let even = |v: &[f64]| v.iter().step_by(2).fold(0.0f64, |a, c| a.max(c.abs()));
        odd(&self.x).max(even(&self.y)).max(even(&self.z))
    }
}

/// Means over `[0, π]` of `y` for the two basis solutions.
pub(crate) fn basis_y_means(p: &QuarterPropagator) -> [f64; 2] {
    let mut m = [0.0; 2];
    for (t, w) in quad::nodes(0.0, PI) {
        let r = p.rotation(t);
        m[0] += w * r.at(2, 1);
        m[1] += w * r.at(2, 2);
    }
    [m[0] / PI, m[1] / PI]
}

pub(crate) fn alpha_from(p: &QuarterPropagator) -> Result<f64, FloquetError> {
    let [a, b] = basis_y_means(p);
    if a.abs() < DEGENERATE_TOL && b.abs() < DEGENERATE_TOL {
        // The mean condition is void, but a nontrivial monodromy still has a
        // unique fixed axis (cos α, sin α, 0).
        let m = monodromy_params_from_half(&p.half_monodromy());
        if m.r > TRIVIAL_R_TOL && m.r < 1.0 - TRIVIAL_R_TOL {
            return Ok(wrap_angle(m.alpha, PI));
        }
        return Err(FloquetError::DegenerateAlpha);
    }
    Ok(wrap_angle(-a.atan2(b), PI))
}

/// Initial angle `α ∈ [0, π)` of the periodic solution.
///
/// A periodic solution starting at `(cos α, sin α, 0)` has vanishing mean of
/// `y` over `[0, π]`; by linearity this fixes `α` modulo `π`. Where the
/// condition is void for every `α` (e.g. `ν = 2`, `f = g = 1`), `α` is read
/// from the half-period monodromy unless that monodromy is trivial.
pub fn alpha_periodic(d: &DimensionlessParams) -> Result<f64, FloquetError> {
    alpha_from(&QuarterPropagator::new(d)?)
}

/// `r = |R(π/2, 0)₂₃|`.
pub fn r_parameter(d: &DimensionlessParams) -> Result<f64, FloquetError> {
    let q = QuarterPropagator::new(d)?.quarter_monodromy();
    Ok(q.at(2, 3).abs().min(1.0))
}

/// Fourier data of the solution starting at angle `alpha`, keeping at least
/// [`DEFAULT_HARMONICS`] harmonics and dropping only coefficients below `1e−10`.
pub fn solution_from_angle(
    p: &QuarterPropagator,
    alpha: f64,
) -> Result<PeriodicSolution, FloquetError> {
    let q = &p.quarter;
    let (ca, sa) = (alpha.cos(), alpha.sin());
    let xi = q.xi_basis[0].scale(ca).add(&q.xi_basis[1].scale(sa));
    let eta = q.eta_basis[0].scale(ca).add(&q.eta_basis[1].scale(sa));
    let n = q.order;
    let x = u_series_to_fourier(&xi, n)?;
    let y = u_series_to_fourier(&eta, n)?;
    let (z0, z) = z_fourier(&x, &y, &p.params);
    let big = |mu: usize| x[mu].abs().max(y[mu].abs()).max(z[mu].abs());
    let mut m = n;
    while m > DEFAULT_HARMONICS && big(m) < 1e-10 {
        m -= 1;
    }
    Ok(PeriodicSolution {
        alpha,
        x: x[..=m].to_vec(),
        y: y[..=m].to_vec(),
        z: z[..=m].to_vec(),
        z0,
        harmonics: m,
    })
}

/// The (up to sign) unique periodic solution.
pub fn periodic_solution(d: &DimensionlessParams) -> Result<PeriodicSolution, FloquetError> {
    let p = QuarterPropagator::new(d)?;
    let alpha = alpha_from(&p)?;
    solution_from_angle(&p, alpha)
}
