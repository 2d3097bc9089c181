use std::f64::consts::FRAC_PI_2;

use crate::carlson::{carlson_rd, carlson_rf, carlson_rj};
use crate::SpecfunError;

fn check_m(m: f64) -> Result<(), SpecfunError> {
    if !m.is_finite() {
        return Err(SpecfunError::NonFinite);
    }
    if m > 1.0 {
        return Err(SpecfunError::ParameterAboveOne(m));
    }
    Ok(())
}

/// `K(m) = ∫₀^{π/2} dθ / √(1 − m sin²θ)`; infinite at `m = 1`.
#[allow(non_snake_case)]
pub fn complete_elliptic_K(m: f64) -> Result<f64, SpecfunError> {
    check_m(m)?;
    if m == 1.0 {
        return Ok(f64::INFINITY);
    }
    if m == 0.0 {
        return Ok(FRAC_PI_2);
    }
    Ok(carlson_rf(0.0, 1.0 - m, 1.0))
}

/// `E(m) = ∫₀^{π/2} √(1 − m sin²θ) dθ` for `m ≤ 1`.
#[allow(non_snake_case)]
pub fn complete_elliptic_E(m: f64) -> Result<f64, SpecfunError> {
    check_m(m)?;
    if m == 1.0 {
        return Ok(1.0);
    }
    if m == 0.0 {
        return Ok(FRAC_PI_2);
    }
    let y = 1.0 - m;
    Ok(carlson_rf(0.0, y, 1.0) - m / 3.0 * carlson_rd(0.0, y, 1.0))
}

/// `Π(n|m) = ∫₀^{π/2} dθ / ((1 − n sin²θ) √(1 − m sin²θ))` for `n < 1`, `m ≤ 1`.
#[allow(non_snake_case)]
pub fn complete_elliptic_Pi(n: f64, m: f64) -> Result<f64, SpecfunError> {
    check_m(m)?;
    if !n.is_finite() {
        return Err(SpecfunError::NonFinite);
    }
    if n >= 1.0 {
        return Err(SpecfunError::CharacteristicAtLeastOne(n));
    }
    if m == 1.0 {
        return Ok(f64::INFINITY);
    }
    let y = 1.0 - m;
    let k = carlson_rf(0.0, y, 1.0);
    if n == 0.0 {
        return Ok(k);
    }
    Ok(k + n / 3.0 * carlson_rj(0.0, y, 1.0, 1.0 - n))
}
