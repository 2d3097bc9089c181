use std::f64::consts::PI;

use num_complex::Complex64;
use rabi_core::{monodromy_params_from_half, DimensionlessParams, DriveParams, MonodromyParams};
use rabi_floquet::QuarterPropagator;
use serde::Serialize;

use crate::WorkError;

type Matrix2 = [[Complex64; 2]; 2];

/// Joint probabilities `p_{ij}` of measuring level `i` at `τ = 0` and `j` at
/// `τ = 2π`; level 1 is the upper eigenvalue `+ν/2` of `H(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WorkStatistics {
    pub p11: f64,
    pub p12: f64,
    pub p21: f64,
    pub p22: f64,
    /// Mean work `p₂₁ − p₁₂` in units of `ω₀`.
    pub mean: f64,
    pub beta: f64,
}

impl WorkStatistics {
    /// Work values `−1, 0, +1` (units of `ω₀`) with their probabilities.
    pub fn distribution(&self) -> [(f64, f64); 3] {
        [
            (-1.0, self.p12),
            (0.0, self.p11 + self.p22),
            (1.0, self.p21),
        ]
    }

    pub fn total_probability(&self) -> f64 {
        self.p11 + self.p12 + self.p21 + self.p22
    }
}

/// Full-period propagator in the `(r, α)` form
/// `U₁₁ = U₂₂ = 1 − 2r²`, `U₁₂ = 2ir√(1−r²)e^{−iα}`, `U₂₁ = 2ir√(1−r²)e^{iα}`.
pub fn unitary_from_params(m: &MonodromyParams) -> Matrix2 {
    let r = m.r;
    let d = Complex64::from(1.0 - 2.0 * r * r);
    let k = 2.0 * r * (1.0 - r * r).max(0.0).sqrt();
    let i = Complex64::i();
    [
        [d, i * k * Complex64::from_polar(1.0, -m.alpha)],
        [i * k * Complex64::from_polar(1.0, m.alpha), d],
    ]
}

/// `Tr(P_j U P_i U*) = |⟨e_j|U|e_i⟩|²` with `e_{1,2} = (1, ±1)/√2`.
pub fn transition_probabilities(u: &Matrix2) -> [[f64; 2]; 2] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let e = [[s, s], [s, -s]];
    let mut t = [[0.0; 2]; 2];
    for i in 0..2 {
        let ui = [
            u[0][0] * e[i][0] + u[0][1] * e[i][1],
            u[1][0] * e[i][0] + u[1][1] * e[i][1],
        ];
        for j in 0..2 {
            t[i][j] = (ui[0] * e[j][0] + ui[1] * e[j][1]).norm_sqr();
        }
    }
    t
}

fn check_beta(beta: f64) -> Result<(), WorkError> {
    if beta.is_finite() && beta >= 0.0 {
        Ok(())
    } else {
        Err(WorkError::InvalidBeta(beta))
    }
}

/// Statistics for given monodromy parameters and `ν`.
pub fn work_statistics_from_params(
    m: &MonodromyParams,
    nu: f64,
    beta: f64,
) -> Result<WorkStatistics, WorkError> {
    check_beta(beta)?;
    let t = transition_probabilities(&unitary_from_params(m));
    // e^{∓βν/2}/Z written without overflow
    let x = beta * nu;
    let w1 = 1.0 / (1.0 + x.exp());
    let w2 = 1.0 / (1.0 + (-x).exp());
    let (p11, p12, p21, p22) = (w1 * t[0][0], w1 * t[0][1], w2 * t[1][0], w2 * t[1][1]);
    Ok(WorkStatistics {
        p11,
        p12,
        p21,
        p22,
        mean: p21 - p12,
        beta,
    })
}

/// Work statistics with `(r, α)` from the series half-period propagator.
pub fn work_statistics(d: &DimensionlessParams, beta: f64) -> Result<WorkStatistics, WorkError> {
    check_beta(beta)?;
    let half = QuarterPropagator::new(d)?.half_monodromy();
    work_statistics_from_params(&monodromy_params_from_half(&half), d.nu, beta)
}

/// Lowest-order mean work
/// `ω₀/(ω²−ω₀²)² · sin²(πω₀/ω) · tanh(βν/2) · (Fω + Gω₀)²`.
pub fn small_amplitude_work(p: &DriveParams, beta: f64) -> Result<f64, WorkError> {
    check_beta(beta)?;
    let (w, w0) = (p.omega, p.omega0);
    let d = w * w - w0 * w0;
    if d.abs() <= 1e-12 * w0 * w0 {
        return Err(WorkError::Pole(w0));
    }
    let nu = w0 / w;
    let s = (PI * nu).sin();
    let a = p.F * w + p.G * w0;
    Ok(w0 / (d * d) * s * s * (0.5 * beta * nu).tanh() * a * a)
}
