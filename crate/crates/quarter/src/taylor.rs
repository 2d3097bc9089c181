use rabi_core::{DimensionlessParams, SpinVector};
use rabi_pseries::{series_compose, series_revert, PowerSeries};

use crate::QuarterError;

/// τ-Taylor coefficients of `x`, `y`, `z` about `τ = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct TauTaylor {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub z: Vec<f64>,
}

/// Term-wise recursion of `S′ = h(τ) × S` with `cos τ`, `sin τ` expanded.
pub fn tau_taylor(
    d: &DimensionlessParams,
    s0: SpinVector,
    order: usize,
) -> Result<TauTaylor, QuarterError> {
    if s0.z != 0.0 {
        return Err(QuarterError::NonzeroZ(s0.z));
    }
    let n = order + 1;
    let mut cosc = vec![0.0; n];
    let mut sinc = vec![0.0; n];
    let mut fact = 1.0;
    for k in 0..n {
        if k > 0 {
            fact *= k as f64;
        }
        match k % 4 {
            0 => cosc[k] = 1.0 / fact,
            1 => sinc[k] = 1.0 / fact,
            2 => cosc[k] = -1.0 / fact,
            _ => sinc[k] = -1.0 / fact,
        }
    }
    let (mut x, mut y, mut z) = (vec![0.0; n], vec![0.0; n], vec![0.0; n]);
    x[0] = s0.x;
    y[0] = s0.y;
    let conv = |a: &[f64], b: &[f64], k: usize| -> f64 { (0..=k).map(|i| a[i] * b[k - i]).sum() };
    for k in 0..order {
        let dx = d.g * conv(&cosc, &z, k) - d.f * conv(&sinc, &y, k);
        let dy = d.f * conv(&sinc, &x, k) - d.nu * z[k];
        let dz = d.nu * y[k] - d.g * conv(&cosc, &x, k);
        let s = 1.0 / (k + 1) as f64;
        x[k + 1] = dx * s;
        y[k + 1] = dy * s;
        z[k + 1] = dz * s;
    }
    Ok(TauTaylor { x, y, z })
}

/// `v(u) = 4 arcsin²√u`, the inverse of `u(v) = sin²(√v/2)`, to order `n`.
pub(crate) fn v_of_u(n: usize) -> PowerSeries {
    let mut fact = 1.0;
    let u_of_v = PowerSeries::from_fn(n, |k| {
        if k == 0 {
            return 0.0;
        }
        fact *= ((2 * k - 1) * (2 * k)) as f64;
        let sgn = if k % 2 == 1 { 1.0 } else { -1.0 };
        sgn / (2.0 * fact)
    });
    series_revert(&u_of_v).expect("u(v) has unit-scale linear term")
}

/// Converts an even τ-series `Σ a₂ₖ τ²ᵏ` to a `u`-series of order `n`,
/// given `v(u)` of at least that order.
pub fn u_series_from_tau(even_tau: &[f64], v: &PowerSeries, n: usize) -> PowerSeries {
    let a = PowerSeries::from_fn(n, |k| even_tau.get(2 * k).copied().unwrap_or(0.0));
    series_compose(&a, &v.truncate(n)).expect("v(0) = 0")
}

fn seeds(d: &DimensionlessParams, x0: f64, y0: f64, count: usize, pick_y: bool) -> Vec<f64> {
    // two extra orders guard the truncation
    let n = count + 1;
    let t = tau_taylor(d, SpinVector::new(x0, y0, 0.0), 2 * n + 4).expect("z(0) = 0");
    let src = if pick_y { &t.y } else { &t.x };
    let s = u_series_from_tau(src, &v_of_u(n + 2), n + 2);
    s.coeffs()[..count].to_vec()
}

/// First five `u`-coefficients `ξ₀…ξ₄` of `X(u)`.
pub fn xi_seeds(d: &DimensionlessParams, x0: f64, y0: f64) -> Vec<f64> {
    seeds(d, x0, y0, 5, false)
}

/// First eight `u`-coefficients `η₀…η₇` of `Y(u)`.
pub fn eta_seeds(d: &DimensionlessParams, x0: f64, y0: f64) -> Vec<f64> {
    seeds(d, x0, y0, 8, true)
}
