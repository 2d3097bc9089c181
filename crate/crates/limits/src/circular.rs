use std::f64::consts::PI;

use rabi_core::{fold_unit, DimensionlessParams, Rotation3, SpinVector};

use crate::LimitsError;

const CIRCULAR_TOL: f64 = 1e-12;

fn check(d: &DimensionlessParams) -> Result<(), LimitsError> {
    if d.is_circular(CIRCULAR_TOL) {
        Ok(())
    } else {
        Err(LimitsError::NotCircular { f: d.f, g: d.g })
    }
}

/// Dimensionless Rabi frequency `Ω = √(f² + (1 − ν)²)`.
pub fn rabi_frequency(d: &DimensionlessParams) -> f64 {
    d.f.hypot(1.0 - d.nu)
}

/// Closed-form propagator `R(τ, 0)` for circular polarization.
pub fn circular_propagator(d: &DimensionlessParams, tau: f64) -> Result<Rotation3, LimitsError> {
    check(d)?;
    let f = d.f;
    let m = d.nu - 1.0;
    let om = rabi_frequency(d);
    let (st, ct) = tau.sin_cos();
    if om == 0.0 {
        // f = 0, ν = 1: plain precession about e1
        return Ok(Rotation3::from_columns([
            SpinVector::new(1.0, 0.0, 0.0),
            SpinVector::new(0.0, ct, st),
            SpinVector::new(0.0, -st, ct),
        ]));
    }
    let (so, co) = (tau * om).sin_cos();
    let half = (0.5 * tau * om).sin().powi(2);
    let q = om * om;
    let c1 = SpinVector::new(
        f * f * co + m * m,
        f * (2.0 * m * ct * half + om * st * so),
        f * (2.0 * m * st * half - om * ct * so),
    );
    let c2 = SpinVector::new(
        -f * m * (co - 1.0),
        ct * (f * f + m * m * co) - m * om * st * so,
        st * (f * f + m * m * co) + m * om * ct * so,
    );
    let c3 = SpinVector::new(
        f * om * so,
        -om * (m * ct * so + om * st * co),
        om * (om * ct * co - m * st * so),
    );
    let s = 1.0 / q;
    Ok(Rotation3::from_columns([c1 * s, c2 * s, c3 * s]))
}

/// `R(2π, 0)` for circular polarization.
pub fn circular_monodromy(d: &DimensionlessParams) -> Result<Rotation3, LimitsError> {
    circular_propagator(d, 2.0 * PI)
}

/// `ε_qu = (1 ± Ω)/2` folded to `[0, 1/2]`.
pub fn circular_quasienergy(d: &DimensionlessParams) -> Result<f64, LimitsError> {
    check(d)?;
    Ok(fold_unit(0.5 * (1.0 + rabi_frequency(d))))
}
