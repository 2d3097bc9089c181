use std::f64::consts::PI;

use rabi_core::{field_at, wrap_angle, DimensionlessParams, DriveParams, SpinVector};
use serde::{Deserialize, Serialize};

use crate::periodic::{solution_from_angle, PeriodicSolution};
use crate::propagator::QuarterPropagator;
use crate::{quad, FloquetError};

/// Largest `|z₀|` accepted as "on the zero-quasienergy manifold".
pub const ON_MANIFOLD_TOL: f64 = 1e-8;

/// A point on the manifold of vanishing quasienergy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroCurvePoint {
    pub omega0: f64,
    #[serde(rename = "F")]
    pub f: f64,
    #[serde(rename = "G")]
    pub g: f64,
    pub omega: f64,
    pub alpha: f64,
    pub beta: f64,
    pub eps_d: f64,
}

/// The three orthogonal periodic solutions at a point of vanishing quasienergy.
#[derive(Debug, Clone)]
pub struct DegenerateSolutions {
    pub beta: f64,
    pub alpha: f64,
    /// `ε_d = ½ ⟨h·S⁽¹⁾⟩ ≥ 0`.
    pub eps_d: f64,
    /// Initial vectors of `S⁽¹⁾`, `S⁽²⁾` and `S⁽³⁾ = S⁽¹⁾ × S⁽²⁾`.
    pub initial: [SpinVector; 3],
    /// Fourier data of `S⁽¹⁾` and `S⁽²⁾`.
    pub fourier: [PeriodicSolution; 2],
    propagator: QuarterPropagator,
}

impl DegenerateSolutions {
    /// `S⁽ʲ⁺¹⁾(τ)`.
    pub fn solution(&self, j: usize, tau: f64) -> SpinVector {
        self.propagator.rotation(tau).apply(self.initial[j])
    }

    /// `⟨h·S⁽ʲ⁺¹⁾⟩` over one period.
    pub fn mean_energy(&self, j: usize) -> f64 {
        let d = self.propagator.params;
        quad::mean(0.0, 2.0 * PI, |t| {
            let h = field_at(&d, t);
            let s = self.solution(j, t);
            h[0] * s.x + h[1] * s.y + h[2] * s.z
        })
    }
}

/// Signed `R(π/2, 0)₂₃`: smooth in the parameters, with `|·| = r`.
pub(crate) fn signed_r(d: &DimensionlessParams) -> Result<f64, FloquetError> {
    Ok(QuarterPropagator::new(d)?.quarter_monodromy().at(2, 3))
}

/// Secular slopes `z₀` of the two basis solutions; both vanish exactly
/// when the quasienergy does.
pub fn basis_secular_slopes(d: &DimensionlessParams) -> Result<[f64; 2], FloquetError> {
    Ok(QuarterPropagator::new(d)?.basis_z0())
}

pub(crate) fn degenerate_from(p: &QuarterPropagator) -> Result<DegenerateSolutions, FloquetError> {
    let z0 = p.basis_z0();
    let off = z0[0].abs().max(z0[1].abs());
    if off > ON_MANIFOLD_TOL {
        return Err(FloquetError::OffManifold(off));
    }
    let d = p.params;
    // Dⱼ = ⟨h·S⁽ʲ⁾⟩ = ν x₀ + (g/2) y₁ + (f/2) z₁ for the basis solutions
    let mut dd = [0.0; 2];
    for (t, w) in quad::nodes(0.0, 2.0 * PI) {
        let r = p.rotation(t);
        let h = field_at(&d, t);
        for (j, dj) in dd.iter_mut().enumerate() {
            *dj += w * (h[0] * r.at(1, j + 1) + h[1] * r.at(2, j + 1) + h[2] * r.at(3, j + 1));
        }
    }
    let dd = [dd[0] / (2.0 * PI), dd[1] / (2.0 * PI)];
    let mut beta = (-dd[0]).atan2(dd[1]);
    if beta > PI / 2.0 {
        beta -= PI;
    } else if beta <= -PI / 2.0 {
        beta += PI;
    }
    let mut alpha = beta + PI / 2.0;
    if dd[0] * alpha.cos() + dd[1] * alpha.sin() < 0.0 {
        alpha = beta - PI / 2.0;
    }
    let s1 = SpinVector::new(alpha.cos(), alpha.sin(), 0.0);
    let s2 = SpinVector::new(beta.cos(), beta.sin(), 0.0);
    Ok(DegenerateSolutions {
        beta,
        alpha,
        eps_d: 0.5 * dd[0].hypot(dd[1]),
        initial: [s1, s2, s1.cross(s2)],
        fourier: [
            solution_from_angle(p, alpha)?,
            solution_from_angle(p, beta)?,
        ],
        propagator: p.clone(),
    })
}

/// Distinguished periodic solutions at a point of vanishing quasienergy.
pub fn degenerate_solutions(d: &DimensionlessParams) -> Result<DegenerateSolutions, FloquetError> {
    degenerate_from(&QuarterPropagator::new(d)?)
}

/// Series estimate of `G` on the zero curve through the circular point.
///
/// For `ω₀ = F = 1` this is the quintic in `ω − 1`; otherwise the linear
/// term about `ω₁ = (F² + ω₀²)/(2ω₀)`.
#[allow(non_snake_case)]
pub fn zero_curve_G_estimate(omega0: f64, F: f64, omega: f64) -> f64 {
    if omega0 == 1.0 && F == 1.0 {
        let e = omega - 1.0;
        let c = [
            1.0,
            2.0,
            -5.0 / 6.0,
            49.0 / 36.0,
            -577.0 / 240.0,
            58357.0 / 12960.0,
        ];
        return c.iter().rev().fold(0.0, |a, &k| a * e + k);
    }
    let (f2, w0) = (F * F, omega0);
    let w1 = (f2 + w0 * w0) / (2.0 * w0);
    let num = -60.0 * f2 * f2 + 50.0 * f2 * f2 * w0 - 100.0 * f2 * w0 * w0 + 71.0 * f2 * w0.powi(3)
        - 25.0 * w0.powi(4);
    let den = F
        * (30.0 * f2 * f2
            + 20.0 * f2 * w0
            + 67.0 * f2 * w0 * w0
            + 10.0 * w0.powi(3)
            + 65.0 * w0.powi(4));
    F - 6.0 * num / den * (omega - w1)
}

/// Sign changes of `f` on `n` subintervals of `[lo, hi]`, nearest to `center` first.
fn find_bracket(
    f: &dyn Fn(f64) -> Result<f64, FloquetError>,
    lo: f64,
    hi: f64,
    center: f64,
) -> Result<Option<(f64, f64, f64, f64)>, FloquetError> {
    const N: usize = 48;
    let xs: Vec<f64> = (0..=N)
        .map(|k| lo + (hi - lo) * k as f64 / N as f64)
        .collect();
    let mut vals = Vec::with_capacity(xs.len());
    for &x in &xs {
        vals.push(f(x)?);
    }
    let mut best: Option<(f64, f64, f64, f64)> = None;
    for k in 0..N {
        if vals[k] == 0.0 {
            return Ok(Some((xs[k], xs[k], 0.0, 0.0)));
        }
        if vals[k].signum() != vals[k + 1].signum() {
            let mid = 0.5 * (xs[k] + xs[k + 1]);
            let better =
                best.is_none_or(|b| (mid - center).abs() < (0.5 * (b.0 + b.1) - center).abs());
            if better {
                best = Some((xs[k], xs[k + 1], vals[k], vals[k + 1]));
            }
        }
    }
    Ok(best)
}

/// Root of `f` near `estimate`: scans `[0.7, 1.3]·estimate`, widened once by 1.5,
/// then bisects to `tol`.
fn root_near(
    f: &dyn Fn(f64) -> Result<f64, FloquetError>,
    estimate: f64,
    floor: f64,
    tol: f64,
) -> Result<f64, FloquetError> {
    let mut lo = (0.7 * estimate).max(floor);
    let mut hi = 1.3 * estimate;
    let mut found = find_bracket(f, lo, hi, estimate)?;
    if found.is_none() {
        let half = 0.45 * estimate;
        lo = (estimate - half).max(floor);
        hi = estimate + half;
        found = find_bracket(f, lo, hi, estimate)?;
    }
    let (mut a, mut b, mut fa, _) = found.ok_or(FloquetError::NoSignChange { lo, hi })?;
    while (b - a).abs() > tol {
        let m = 0.5 * (a + b);
        let fm = f(m)?;
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

/// `G` on the zero-quasienergy manifold for given `ω₀`, `F`, `ω`.
#[allow(non_snake_case)]
pub fn zero_quasienergy_G(omega0: f64, F: f64, omega: f64) -> Result<f64, FloquetError> {
    let est = zero_curve_G_estimate(omega0, F, omega);
    let f = |g: f64| {
        let d = DriveParams::new(omega0, F, g, omega)?.dimensionless();
        signed_r(&d)
    };
    root_near(&f, est.max(1e-6), 0.0, 1e-12)
}

/// Largest zero of the quasienergy in `ω` for given `ω₀`, `F`, `G`.
#[allow(non_snake_case)]
pub fn zero_quasienergy_omega(omega0: f64, F: f64, G: f64) -> Result<f64, FloquetError> {
    let est = zero_curve_omega_estimate(omega0, F, G);
    let f = |w: f64| {
        let d = DriveParams::new(omega0, F, G, w)?.dimensionless();
        signed_r(&d)
    };
    root_near(&f, est, 1e-3, 1e-12)
}

/// Inverts [`zero_curve_G_estimate`] for `ω` by bisection on `[0.5, 1.5]·ω₁`.
#[allow(non_snake_case)]
pub fn zero_curve_omega_estimate(omega0: f64, F: f64, G: f64) -> f64 {
    let w1 = (F * F + omega0 * omega0) / (2.0 * omega0);
    let h = |w: f64| zero_curve_G_estimate(omega0, F, w) - G;
    let (mut a, mut b) = (0.5 * w1, 1.5 * w1);
    if h(a).signum() == h(b).signum() {
        return w1;
    }
    for _ in 0..100 {
        let m = 0.5 * (a + b);
        if h(m).signum() == h(a).signum() {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Full description of a point on the zero curve.
#[allow(non_snake_case)]
pub fn zero_curve_point(
    omega0: f64,
    F: f64,
    G: f64,
    omega: f64,
) -> Result<ZeroCurvePoint, FloquetError> {
    let d = DriveParams::new(omega0, F, G, omega)?.dimensionless();
    let s = degenerate_solutions(&d)?;
    Ok(ZeroCurvePoint {
        omega0,
        f: F,
        g: G,
        omega,
        alpha: wrap_angle(s.alpha, PI),
        beta: s.beta,
        eps_d: s.eps_d,
    })
}
