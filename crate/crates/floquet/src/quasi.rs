use std::f64::consts::PI;

use rabi_core::{
    field_at, monodromy_params_from_half, quasienergy_from_r, DimensionlessParams,
    QuasienergySplit, SpinVector,
};
use rabi_numint::monodromy_numeric;
use serde::{Deserialize, Serialize};

use crate::periodic::alpha_from;
use crate::propagator::QuarterPropagator;
use crate::zero::degenerate_from;
use crate::{quad, FloquetError};

/// Quasienergy of the spin-½ problem and of the classical problem, with
/// the geometric/dynamical split of the former.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuasienergyResult {
    pub r: f64,
    /// Initial angle of the periodic solution; `None` on the degenerate manifold.
    pub alpha: Option<f64>,
    /// `arcsin(r)/π ∈ [0, 1/2]`.
    pub eps_qu: f64,
    /// `2 ε_qu mod 1`.
    pub eps_cl: f64,
    /// Unreduced time average over the periodic solution.
    pub eps_average: f64,
    pub split: QuasienergySplit,
}

/// Time averages over one period of the solution `S(τ) = R(τ)·s0`:
/// returns `(ε, ε_d)` with
/// `ε = ⟨½(σν + (g cos τ·y + f sin τ·z)/(1 + σx))⟩` and `ε_d = ⟨½ h·S⟩`.
///
/// `σ = ±1` is chosen to keep `1 + σx` away from zero; `σ = −1` is the
/// `σ = +1` form after a half-turn about the z-axis (`ν, g ↦ −ν, −g`).
/// With `z(0) = 0` both integrands are even in `τ`, so `[0, π]` suffices.
pub(crate) fn time_averages(p: &QuarterPropagator, s0: SpinVector) -> (f64, f64) {
    let d = &p.params;
    let pts: Vec<(f64, f64, SpinVector)> = quad::nodes(0.0, PI)
        .into_iter()
        .map(|(t, w)| (t, w, p.rotation(t).apply(s0)))
        .collect();
    let xmin = pts.iter().fold(f64::INFINITY, |a, q| a.min(q.2.x));
    let xmax = pts.iter().fold(f64::NEG_INFINITY, |a, q| a.max(q.2.x));
    let sigma = if 1.0 + xmin >= 1.0 - xmax { 1.0 } else { -1.0 };
    let mut eps = 0.0;
    let mut eps_d = 0.0;
    for (t, w, s) in pts {
        let (st, ct) = t.sin_cos();
        let ratio = (d.g * ct * s.y + d.f * st * s.z) / (1.0 + sigma * s.x);
        eps += w * 0.5 * (sigma * d.nu + ratio);
        let h = field_at(d, t);
        eps_d += w * 0.5 * (h[0] * s.x + h[1] * s.y + h[2] * s.z);
    }
    (eps / PI, eps_d / PI)
}

/// Reduces a time-averaged quasienergy to `[0, 1/2]`; when the reduction
/// reflects (`ε ↦ 1 − ε`) the dynamical part changes sign with it.
fn fold_with_dynamical(eps: f64, eps_d: f64) -> (f64, f64) {
    let w = eps.rem_euclid(1.0);
    if w > 0.5 {
        (1.0 - w, -eps_d)
    } else {
        (w, eps_d)
    }
}

pub(crate) fn quasienergy_from(p: &QuarterPropagator) -> Result<QuasienergyResult, FloquetError> {
    let r = p.quarter_monodromy().at(2, 3).abs().min(1.0);
    let (eps_qu, eps_cl) = quasienergy_from_r(r)?;
    match alpha_from(p) {
        Ok(alpha) => {
            let (eps, eps_d) = time_averages(p, SpinVector::new(alpha.cos(), alpha.sin(), 0.0));
            let (_, eps_d) = fold_with_dynamical(eps, eps_d);
            Ok(QuasienergyResult {
                r,
                alpha: Some(alpha),
                eps_qu,
                eps_cl,
                eps_average: eps,
                split: QuasienergySplit::from_dynamical(eps_qu, eps_d),
            })
        }
        Err(FloquetError::DegenerateAlpha) => {
            let deg = degenerate_from(p)?;
            Ok(QuasienergyResult {
                r,
                alpha: None,
                eps_qu: 0.0,
                eps_cl: 0.0,
                eps_average: 0.0,
                split: QuasienergySplit::from_dynamical(0.0, deg.eps_d),
            })
        }
        Err(e) => Err(e),
    }
}

/// Quasienergy from `r`, cross-checked time average and geometric/dynamical split.
pub fn quasienergy(d: &DimensionlessParams) -> Result<QuasienergyResult, FloquetError> {
    quasienergy_from(&QuarterPropagator::new(d)?)
}

/// [`quasienergy`] with a fixed series order (`None` selects it adaptively).
pub fn quasienergy_with_order(
    d: &DimensionlessParams,
    order: Option<usize>,
) -> Result<QuasienergyResult, FloquetError> {
    quasienergy_from(&QuarterPropagator::with_order(d, order)?)
}

/// `ε_qu` from a numerically integrated half-period propagator.
pub fn quasienergy_numeric(d: &DimensionlessParams) -> Result<f64, FloquetError> {
    let half = monodromy_numeric(d, PI)?;
    let m = monodromy_params_from_half(&half);
    Ok(quasienergy_from_r(m.r)?.0)
}
