use num_complex::Complex64;
use rabi_core::{wrap_angle, DimensionlessParams, MonodromyParams, SpinVector};

use crate::dopri::{integrate, DenseSolution, IntegrationStats};
use crate::{check_tol, NumintError, DEFAULT_TOL};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Two-level state `(ψ₁, ψ₂)` in the `σ₃` eigenbasis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumState {
    pub psi1: Complex64,
    pub psi2: Complex64,
}

impl QuantumState {
    pub fn new(psi1: Complex64, psi2: Complex64) -> Self {
        Self { psi1, psi2 }
    }

    pub fn norm(&self) -> f64 {
        (self.psi1.norm_sqr() + self.psi2.norm_sqr()).sqrt()
    }

    fn to_real(self) -> [f64; 4] {
        [self.psi1.re, self.psi1.im, self.psi2.re, self.psi2.im]
    }

    fn from_real(y: [f64; 4]) -> Self {
        Self::new(Complex64::new(y[0], y[1]), Complex64::new(y[2], y[3]))
    }
}

/// A 2×2 complex matrix, row-major.
pub type Unitary2 = [[Complex64; 2]; 2];

#[derive(Debug, Clone)]
pub struct QuantumTrajectory {
    pub taus: Vec<f64>,
    pub states: Vec<QuantumState>,
    pub stats: IntegrationStats,
    dense: DenseSolution<4>,
}

impl QuantumTrajectory {
    pub fn at(&self, tau: f64) -> QuantumState {
        QuantumState::from_real(self.dense.eval(tau))
    }

    pub fn last(&self) -> QuantumState {
        QuantumState::from_real(self.dense.y1)
    }
}

/// `dψ/dτ = −i H ψ` with `H = ½(ν σ₁ + g cos τ σ₂ + f sin τ σ₃)`.
fn schrodinger_rhs(d: DimensionlessParams) -> impl Fn(f64, &[f64; 4]) -> [f64; 4] {
    move |t, y| {
        let p1 = Complex64::new(y[0], y[1]);
        let p2 = Complex64::new(y[2], y[3]);
        let (s, c) = t.sin_cos();
        let h11 = Complex64::from(0.5 * d.f * s);
        let h12 = Complex64::new(0.5 * d.nu, -0.5 * d.g * c);
        let h21 = h12.conj();
        let d1 = -I * (h11 * p1 + h12 * p2);
        let d2 = -I * (h21 * p1 - h11 * p2);
        [d1.re, d1.im, d2.re, d2.im]
    }
}

fn check_norm(psi: &QuantumState) -> Result<(), NumintError> {
    let n = psi.norm();
    if (n - 1.0).abs() > 1e-9 {
        return Err(NumintError::NotNormalized(n));
    }
    Ok(())
}

pub fn integrate_schrodinger(
    d: &DimensionlessParams,
    psi0: QuantumState,
    tau_end: f64,
    tol: f64,
) -> Result<QuantumTrajectory, NumintError> {
    check_tol(tol)?;
    check_norm(&psi0)?;
    let dense = integrate(schrodinger_rhs(*d), 0.0, psi0.to_real(), tau_end, tol)?;
    let (taus, states) = dense
        .nodes()
        .into_iter()
        .map(|(t, y)| (t, QuantumState::from_real(y)))
        .unzip();
    Ok(QuantumTrajectory {
        taus,
        states,
        stats: dense.stats,
        dense,
    })
}

/// Schrödinger evolution sampled at the given times.
pub fn integrate_schrodinger_at(
    d: &DimensionlessParams,
    psi0: QuantumState,
    taus: &[f64],
    tol: f64,
) -> Result<QuantumTrajectory, NumintError> {
    let end = taus
        .iter()
        .copied()
        .fold(0.0f64, |a, t| if t.abs() > a.abs() { t } else { a });
    let mut tr = integrate_schrodinger(d, psi0, end, tol)?;
    tr.states = taus.iter().map(|&t| tr.at(t)).collect();
    tr.taus = taus.to_vec();
    Ok(tr)
}

/// Bloch vector `(⟨σ₁⟩, ⟨σ₂⟩, ⟨σ₃⟩)`.
pub fn projector_bloch(psi: &QuantumState) -> SpinVector {
    let c = psi.psi1.conj() * psi.psi2;
    SpinVector::new(
        2.0 * c.re,
        2.0 * c.im,
        psi.psi1.norm_sqr() - psi.psi2.norm_sqr(),
    )
}

/// Propagator `U(τ, 0)` of the Schrödinger equation.
pub fn quantum_monodromy(d: &DimensionlessParams, tau: f64) -> Result<Unitary2, NumintError> {
    let one = Complex64::from(1.0);
    let zero = Complex64::from(0.0);
    let c1 = integrate_schrodinger(d, QuantumState::new(one, zero), tau, DEFAULT_TOL)?.last();
    let c2 = integrate_schrodinger(d, QuantumState::new(zero, one), tau, DEFAULT_TOL)?.last();
    Ok([[c1.psi1, c2.psi1], [c1.psi2, c2.psi2]])
}

/// Reads `(r, α)` from a full-period propagator of the form
/// `U₁₁ = 1 − 2r²`, `U₂₁ = 2i r √(1−r²) e^{iα}`.
pub fn fit_quantum_monodromy(u: &Unitary2) -> MonodromyParams {
    let a = 0.5 * (u[0][0].re + u[1][1].re);
    let b = 0.5 * (u[1][0] - u[0][1].conj());
    let rho = b.norm();
    // 2 arcsin r = atan2(|U₂₁|, U₁₁)
    let r = (0.5 * rho.atan2(a)).sin().clamp(0.0, 1.0);
    let alpha = (-I * b).arg();
    MonodromyParams {
        r,
        alpha: wrap_angle(alpha, 2.0 * std::f64::consts::PI),
    }
}
