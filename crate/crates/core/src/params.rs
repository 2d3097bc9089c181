use serde::{Deserialize, Serialize};

use crate::CoreError;

/// Physical drive parameters with `ħ = 1`.
///
/// `omega0` is the level splitting, `F` and `G` are the semi-axes of the
/// polarization ellipse (z- and y-drive amplitudes) and `omega` is the
/// driving frequency.
#[allow(non_snake_case)]
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DriveParams {
    pub omega0: f64,
    pub F: f64,
    pub G: f64,
    pub omega: f64,
}

fn check_nonneg(name: &'static str, v: f64) -> Result<(), CoreError> {
    if !v.is_finite() || v < 0.0 {
        return Err(CoreError::InvalidParameter {
            name,
            value: v,
            reason: "must be finite and non-negative",
        });
    }
    Ok(())
}

impl DriveParams {
    #[allow(non_snake_case)]
    pub fn new(omega0: f64, F: f64, G: f64, omega: f64) -> Result<Self, CoreError> {
        check_nonneg("omega0", omega0)?;
        check_nonneg("F", F)?;
        check_nonneg("G", G)?;
        if !omega.is_finite() || omega <= 0.0 {
            return Err(CoreError::InvalidParameter {
                name: "omega",
                value: omega,
                reason: "must be finite and positive",
            });
        }
        Ok(Self {
            omega0,
            F,
            G,
            omega,
        })
    }

    /// Same amplitudes, different driving frequency.
    pub fn with_omega(&self, omega: f64) -> Result<Self, CoreError> {
        Self::new(self.omega0, self.F, self.G, omega)
    }

    pub fn dimensionless(&self) -> DimensionlessParams {
        to_dimensionless(self)
    }
}

/// Dimensionless parameters `ν = ω₀/ω`, `f = F/ω`, `g = G/ω`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionlessParams {
    pub nu: f64,
    pub f: f64,
    pub g: f64,
}

impl DimensionlessParams {
    pub fn new(nu: f64, f: f64, g: f64) -> Result<Self, CoreError> {
        check_nonneg("nu", nu)?;
        check_nonneg("f", f)?;
        check_nonneg("g", g)?;
        Ok(Self { nu, f, g })
    }

    /// Physical parameters at driving frequency `omega`.
    pub fn to_drive(&self, omega: f64) -> Result<DriveParams, CoreError> {
        DriveParams::new(self.nu * omega, self.f * omega, self.g * omega, omega)
    }

    pub fn field(&self, tau: f64) -> [f64; 3] {
        field_at(self, tau)
    }

    pub fn is_circular(&self, tol: f64) -> bool {
        (self.f - self.g).abs() <= tol
    }
}

pub fn to_dimensionless(p: &DriveParams) -> DimensionlessParams {
    DimensionlessParams {
        nu: p.omega0 / p.omega,
        f: p.F / p.omega,
        g: p.G / p.omega,
    }
}

/// The dimensionless field `h(τ) = (ν, g cos τ, f sin τ)`.
pub fn field_at(d: &DimensionlessParams, tau: f64) -> [f64; 3] {
    [d.nu, d.g * tau.cos(), d.f * tau.sin()]
}
