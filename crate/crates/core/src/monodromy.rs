use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::{wrap_angle, CoreError, Rotation3};

/// The pair `(r, α)` fixing the half- and full-period monodromy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MonodromyParams {
    pub r: f64,
    pub alpha: f64,
}

impl MonodromyParams {
    /// Validates `r ∈ [0, 1]` and wraps `alpha` into `[0, 2π)`.
    pub fn new(r: f64, alpha: f64) -> Result<Self, CoreError> {
        if !(0.0..=1.0).contains(&r) {
            return Err(CoreError::Domain {
                name: "r",
                value: r,
                domain: "[0, 1]",
            });
        }
        if !alpha.is_finite() {
            return Err(CoreError::InvalidParameter {
                name: "alpha",
                value: alpha,
                reason: "must be finite",
            });
        }
        Ok(Self {
            r,
            alpha: wrap_angle(alpha, 2.0 * PI),
        })
    }

    /// Fixed vector `(cos α, sin α, 0)` of the full monodromy.
    pub fn fixed_vector(&self) -> crate::SpinVector {
        crate::SpinVector::new(self.alpha.cos(), self.alpha.sin(), 0.0)
    }
}

/// Half-period propagator `R(π, 0)` in terms of `(r, α)`.
pub fn half_monodromy_from_params(m: &MonodromyParams) -> Rotation3 {
    let r = m.r;
    let r2 = r * r;
    let q = 1.0 - r2;
    let k = 2.0 * r * q.max(0.0).sqrt();
    let (sa, ca) = m.alpha.sin_cos();
    let (s2a, c2a) = (2.0 * m.alpha).sin_cos();
    Rotation3::from_rows([
        [r2 + q * c2a, q * s2a, k * sa],
        [-q * s2a, q * c2a - r2, k * ca],
        [k * sa, -k * ca, 1.0 - 2.0 * r2],
    ])
}

/// Full-period monodromy `R(2π, 0) = (T⁽¹⁾ R(π, 0))²`.
pub fn full_monodromy_from_params(m: &MonodromyParams) -> Rotation3 {
    let a = Rotation3::t1() * half_monodromy_from_params(m);
    a * a
}

/// Reads `(r, α)` back from a half-period propagator.
///
/// `r = sin θ` with `2θ = atan2(√(R₁₃² + R₂₃²), R₃₃)`, which stays accurate
/// near `r = 0` and `r = 1` where `arccos` of `R₃₃` would not.
pub fn monodromy_params_from_half(h: &Rotation3) -> MonodromyParams {
    let (r13, r23, r33) = (h.at(1, 3), h.at(2, 3), h.at(3, 3));
    let rho = r13.hypot(r23);
    let theta = 0.5 * rho.atan2(r33);
    let r = theta.sin().clamp(0.0, 1.0);
    let alpha = if rho > 1e-12 {
        r13.atan2(r23)
    } else {
        0.5 * h.at(1, 2).atan2(h.at(1, 1))
    };
    MonodromyParams {
        r,
        alpha: wrap_angle(alpha, 2.0 * PI),
    }
}

/// Fits a full-period monodromy to the `(r, α)` form.
///
/// The full monodromy only fixes `4 arcsin r` up to reflection, so two
/// parameter pairs `(r, α)` and `(√(1−r²), α+π)` reproduce it; both are
/// returned, the one with `r ≤ 1/√2` first.
pub fn fit_full_monodromy(full: &Rotation3) -> [MonodromyParams; 2] {
    let (r13, r23, r33) = (full.at(1, 3), full.at(2, 3), full.at(3, 3));
    let rho = r13.hypot(r23);
    let phi = rho.atan2(r33);
    let alpha = if rho > 1e-12 {
        (-r13).atan2(r23)
    } else {
        let c2 = (phi / 2.0).cos().powi(2);
        0.5 * full.at(1, 2).atan2(full.at(1, 1) - c2)
    };
    let a = MonodromyParams {
        r: (phi / 4.0).sin(),
        alpha: wrap_angle(alpha, 2.0 * PI),
    };
    let b = MonodromyParams {
        r: ((2.0 * PI - phi) / 4.0).sin(),
        alpha: wrap_angle(alpha + PI, 2.0 * PI),
    };
    [a, b]
}
