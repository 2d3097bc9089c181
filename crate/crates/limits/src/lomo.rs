use rabi_core::{DriveParams, SpinVector};
use rabi_specfun::bessel_J;

use crate::LimitsError;

fn bessel_terms(x: f64) -> u32 {
    x.abs().ceil() as u32 + 30
}

/// Exact solution for `ω₀ = F = 0`: `(cos(g sin τ), 0, −sin(g sin τ))`.
pub fn zero_field_solution(g: f64, tau: f64) -> SpinVector {
    let a = g * tau.sin();
    SpinVector::new(a.cos(), 0.0, -a.sin())
}

/// The same solution from its Jacobi–Anger (Bessel–Fourier) expansion.
pub fn zero_field_fourier(g: f64, tau: f64) -> SpinVector {
    let mut x = bessel_J(0, g);
    let mut z = 0.0;
    for m in 1..=bessel_terms(g) {
        x += 2.0 * bessel_J(2 * m, g) * (2.0 * m as f64 * tau).cos();
    }
    for m in 0..=bessel_terms(g) {
        z -= 2.0 * bessel_J(2 * m + 1, g) * ((2 * m + 1) as f64 * tau).sin();
    }
    SpinVector::new(x, 0.0, z)
}

/// First-order-in-`F` y-component for `ω₀ = 0` near linear polarization:
/// `(F/ω) Σₘ (J_{2m+2}(g) − J_{2m}(g))/(2m+1) · cos((2m+1)ωt)`, `g = G/ω`.
///
/// `p.omega0` is assumed to vanish and is not read.
#[allow(non_snake_case)]
pub fn near_linear_Y(p: &DriveParams, t: f64) -> f64 {
    let g = p.G / p.omega;
    let wt = p.omega * t;
    let sum: f64 = (0..=bessel_terms(g))
        .map(|m| {
            let k = (2 * m + 1) as f64;
            (bessel_J(2 * m + 2, g) - bessel_J(2 * m, g)) / k * (k * wt).cos()
        })
        .sum();
    p.F / p.omega * sum
}

/// Near-linear approximation: the `F = 0` Bessel solution for `x` and `z`
/// with [`near_linear_Y`] as the `y`-component.
pub fn near_linear_solution(p: &DriveParams, t: f64) -> SpinVector {
    let mut s = zero_field_solution(p.G / p.omega, p.omega * t);
    s.y = near_linear_Y(p, t);
    s
}

/// First-order-in-`δ = F − G` correction to the circular `ω₀ = 0` solution
/// `(1, −(F/ω) cos ωt, −(F/ω) sin ωt)`; not normalized.
///
/// `delta` must equal `p.F − p.G`.
pub fn near_circular_solution(
    p: &DriveParams,
    delta: f64,
    t: f64,
) -> Result<SpinVector, LimitsError> {
    let (f, w) = (p.F, p.omega);
    if (p.F - p.G - delta).abs() > 1e-12 * f.max(1.0) {
        return Err(LimitsError::Inconsistent("delta must equal F − G"));
    }
    let q = f * f - 3.0 * w * w;
    if q.abs() <= 1e-12 * (f * f).max(3.0 * w * w) {
        return Err(LimitsError::Pole("F² = 3ω²"));
    }
    if f == 0.0 {
        return Err(LimitsError::Pole("F = 0"));
    }
    let wt = w * t;
    let third = delta * f * f / (4.0 * w * q);
    let x = 1.0 + 3.0 * delta * f / (2.0 * q) * (2.0 * wt).cos();
    let y = (-f / w + 3.0 * delta * f * f / (4.0 * w * q)) * wt.cos() - third * (3.0 * wt).cos();
    let z = (-f / w + delta / f * (1.0 / w - 3.0 * f * f / (4.0 * w * q))) * wt.sin()
        - third * (3.0 * wt).sin();
    Ok(SpinVector::new(x, y, z))
}
