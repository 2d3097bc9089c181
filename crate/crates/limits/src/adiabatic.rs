use std::f64::consts::{PI, SQRT_2};

use rabi_core::{DimensionlessParams, DriveParams, SpinVector};
use rabi_numint::monodromy_numeric_tol;
use rabi_specfun::{complete_elliptic_E, complete_elliptic_Pi};

use crate::LimitsError;

/// Driving frequencies used for the numerical second-order coefficient.
pub const E2_FIT_OMEGAS: [f64; 3] = [0.04, 0.02, 0.01];

const FIT_TOL: f64 = 1e-12;

/// Quasienergy expansion `𝓔 ≈ E0 + ω E1 + ω² E2` for `ω → 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdiabaticQuasienergy {
    pub e0: f64,
    pub e1: f64,
    /// Extrapolated from the numerically integrated quasienergy.
    pub e2: f64,
}

fn field(p: &DriveParams, phi: f64) -> SpinVector {
    SpinVector::new(p.omega0, p.G * phi.cos(), p.F * phi.sin())
}

fn check_field(p: &DriveParams) -> Result<(), LimitsError> {
    if p.omega0 > 0.0 || (p.F > 0.0 && p.G > 0.0) {
        Ok(())
    } else {
        // h = 0 at ωt = 0 (G = 0) or ωt = π/2 (F = 0)
        let t = if p.G == 0.0 { 0.0 } else { 0.5 * PI / p.omega };
        Err(LimitsError::VanishingField(t))
    }
}

/// `S⁽⁰⁾`, `S⁽¹⁾` and `S⁽²⁾` at phase `φ = ωt`.
pub fn adiabatic_spin_terms(p: &DriveParams, phi: f64) -> Result<[SpinVector; 3], LimitsError> {
    check_field(p)?;
    let (w0, f, g) = (p.omega0, p.F, p.G);
    let (s, c) = phi.sin_cos();
    let h = field(p, phi);
    let d = (g * g - f * f) * (2.0 * phi).cos() + f * f + g * g + 2.0 * w0 * w0;
    let s0 = h * (1.0 / h.norm());
    let s1 = SpinVector::new(-f * g, f * w0 * c, g * w0 * s) * (2.0 * SQRT_2 / d.powf(1.5));

    let (f2, g2, w2) = (f * f, g * g, w0 * w0);
    let x0 = -6.0 * SQRT_2 * w0 * (f2 * f2 + w2 * (f2 + g2) + g2 * g2);
    let x2 = 2.0 * SQRT_2 * w0 * (f2 - g2) * (2.0 * f2 + 2.0 * g2 + w2);
    let x4 = 2.0 * SQRT_2 * w0 * (f2 - g2).powi(2);
    let y1 =
        SQRT_2 * g * (-6.0 * f2 * f2 + f2 * (2.0 * g2 - 7.0 * w2) + 11.0 * g2 * w2 + 8.0 * w2 * w2);
    let y3 = 3.0 * SQRT_2 * g * (f - g) * (f + g) * (2.0 * f2 + w2);
    let z1 =
        SQRT_2 * f * (f2 * (2.0 * g2 + 11.0 * w2) - 6.0 * g2 * g2 - 7.0 * g2 * w2 + 8.0 * w2 * w2);
    let z3 = 3.0 * SQRT_2 * f * (f2 - g2) * (2.0 * g2 + w2);
    let s2 = SpinVector::new(
        x0 + x2 * (2.0 * phi).cos() + x4 * (4.0 * phi).cos(),
        y1 * c + y3 * (3.0 * phi).cos(),
        z1 * s + z3 * (3.0 * phi).sin(),
    ) * d.powf(-3.5);
    Ok([s0, s1, s2])
}

/// Adiabatic approximation `S⁽⁰⁾ + ωS⁽¹⁾ + ω²S⁽²⁾` truncated at `order`
/// (0, 1 or 2; higher orders are clamped to 2), at physical time `t`.
pub fn adiabatic_spin(p: &DriveParams, order: usize, t: f64) -> Result<SpinVector, LimitsError> {
    let [s0, s1, s2] = adiabatic_spin_terms(p, p.omega * t)?;
    let w = p.omega;
    Ok(match order {
        0 => s0,
        1 => s0 + s1 * w,
        _ => s0 + s1 * w + s2 * (w * w),
    })
}

/// `E0` from the complete elliptic integral of the second kind.
fn e0(p: &DriveParams) -> Result<f64, LimitsError> {
    let (f2, g2, w2) = (p.F * p.F, p.G * p.G, p.omega0 * p.omega0);
    // choose the representation whose prefactor does not vanish
    let (a, b) = if g2 + w2 >= f2 + w2 {
        (g2, f2)
    } else {
        (f2, g2)
    };
    Ok((a + w2).sqrt() / PI * complete_elliptic_E((a - b) / (a + w2))?)
}

/// `E1`, the geometric (Berry phase) term. Zero for linear polarization.
fn e1(p: &DriveParams) -> Result<f64, LimitsError> {
    let (f, g, w0) = (p.F, p.G, p.omega0);
    if g == 0.0 || f == 0.0 {
        return Ok(0.0);
    }
    let r = (g * g + w0 * w0).sqrt();
    let n = 1.0 - f * f / (g * g);
    let m = (g * g - f * f) / (r * r);
    Ok(0.5 - f * w0 * complete_elliptic_Pi(n, m)? / (PI * g * r))
}

/// Quasienergy on the branch `n ω ± 𝓔` closest to `target`.
fn branch_near(p: &DriveParams, target: f64) -> Result<f64, LimitsError> {
    let d: DimensionlessParams = p.dimensionless();
    let half = monodromy_numeric_tol(&d, PI, FIT_TOL)?;
    let eps = half.at(1, 3).hypot(half.at(2, 3)).atan2(half.at(3, 3)) / (2.0 * PI);
    let t = target / p.omega;
    let n = t.round();
    let best = [n - 1.0, n, n + 1.0]
        .into_iter()
        .flat_map(|k| [k + eps, k - eps])
        .min_by(|a, b| (a - t).abs().total_cmp(&(b - t).abs()))
        .expect("nonempty");
    Ok(best * p.omega)
}

/// Value at zero of the interpolating polynomial through `(x, y)` (Neville).
fn extrapolate_to_zero(x: &[f64], y: &[f64]) -> f64 {
    let mut p = y.to_vec();
    let n = x.len();
    for k in 1..n {
        for i in 0..n - k {
            p[i] = (x[i + k] * p[i] - x[i] * p[i + 1]) / (x[i + k] - x[i]);
        }
    }
    p[0]
}

/// `E0` and `E1` in closed form; `E2` from `(𝓔(ω) − E0 − ωE1)/ω²` at
/// [`E2_FIT_OMEGAS`], extrapolated to `ω = 0`.
///
/// `p.omega` is ignored.
pub fn adiabatic_quasienergy(p: &DriveParams) -> Result<AdiabaticQuasienergy, LimitsError> {
    check_field(p)?;
    let e0 = e0(p)?;
    let e1 = e1(p)?;
    let mut q = Vec::with_capacity(E2_FIT_OMEGAS.len());
    for &w in &E2_FIT_OMEGAS {
        let pw = p.with_omega(w)?;
        let e = branch_near(&pw, e0 + w * e1)?;
        q.push((e - e0 - w * e1) / (w * w));
    }
    let e2 = extrapolate_to_zero(&E2_FIT_OMEGAS, &q);
    Ok(AdiabaticQuasienergy { e0, e1, e2 })
}

/// Closed-form second-order coefficient printed for `ω₀ = 1, F = 3, G = 2`:
/// `57 − 16147/(200√2) + (1/π)[(4777 Γ(¼)² + 21036 Γ(¾)²)/(240√(10π)) − 171 Π(−5/4 | −1)/√5]`.
pub fn e2_reference_point() -> Result<f64, LimitsError> {
    const GAMMA_QUARTER: f64 = 3.625_609_908_221_908;
    const GAMMA_THREE_QUARTERS: f64 = 1.225_416_702_465_178;
    let bracket = (4777.0 * GAMMA_QUARTER.powi(2) + 21036.0 * GAMMA_THREE_QUARTERS.powi(2))
        / (240.0 * (10.0 * PI).sqrt())
        - 171.0 * complete_elliptic_Pi(-1.25, -1.0)? / 5f64.sqrt();
    Ok(57.0 - 16147.0 / (200.0 * SQRT_2) + bracket / PI)
}
