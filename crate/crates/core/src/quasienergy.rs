use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::CoreError;

/// Quasienergy split into geometric and dynamical parts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuasienergySplit {
    pub total: f64,
    pub geometric: f64,
    pub dynamical: f64,
}

impl QuasienergySplit {
    /// Builds the split from the total and its dynamical part.
    pub fn from_dynamical(total: f64, dynamical: f64) -> Self {
        Self {
            total,
            geometric: total - dynamical,
            dynamical,
        }
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            total: self.total * s,
            geometric: self.geometric * s,
            dynamical: self.dynamical * s,
        }
    }

    pub fn defect(&self) -> f64 {
        (self.total - self.geometric - self.dynamical).abs()
    }
}

/// Reduces a dimensionless quasienergy mod 1 and reflects it into `[0, 1/2]`.
pub fn fold_unit(e: f64) -> f64 {
    let w = e.rem_euclid(1.0);
    if w > 0.5 {
        1.0 - w
    } else {
        w
    }
}

/// `ε_qu = arcsin(r)/π ∈ [0, 1/2]` and the classical `ε_cl = 2 ε_qu` (mod 1).
pub fn quasienergy_from_r(r: f64) -> Result<(f64, f64), CoreError> {
    if !(0.0..=1.0).contains(&r) {
        return Err(CoreError::Domain {
            name: "r",
            value: r,
            domain: "[0, 1]",
        });
    }
    let eq = r.asin() / PI;
    Ok((eq, (2.0 * eq).rem_euclid(1.0)))
}

/// `𝓔 = ω ε_qu` on the branch `0 ≤ 𝓔 ≤ ω/2`.
pub fn physical_quasienergy(eps_qu: f64, omega: f64) -> f64 {
    omega * fold_unit(eps_qu)
}

/// All branches `n ω ± 𝓔` with `n_min ≤ n ≤ n_max`, sorted ascending.
pub fn quasienergy_branches(e: f64, omega: f64, n_min: i32, n_max: i32) -> Vec<f64> {
    let mut v: Vec<f64> = (n_min..=n_max)
        .flat_map(|n| [n as f64 * omega + e, n as f64 * omega - e])
        .collect();
    v.sort_by(|a, b| a.total_cmp(b));
    v.dedup_by(|a, b| (*a - *b).abs() < 1e-15);
    v
}
