use std::f64::consts::{FRAC_PI_2, PI};

use rabi_core::{DimensionlessParams, Rotation3, SpinVector};
use rabi_pseries::{series_evaluate, EvalOptions};
use rabi_quarter::{solve_quarter, QuarterSolution};

use crate::fourier::{sin_sum, u_series_to_fourier, z_fourier};
use crate::FloquetError;

/// Local Fourier data of one basis solution (exact for the truncated series).
#[derive(Debug, Clone, PartialEq)]
pub struct BasisFourier {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub z0: f64,
    pub z: Vec<f64>,
}

/// Propagator `R(τ, 0)` built from the quarter-period series and the
/// reflection symmetries of the equation of motion.
#[derive(Debug, Clone)]
pub struct QuarterPropagator {
    pub params: DimensionlessParams,
    pub quarter: QuarterSolution,
    pub basis: [BasisFourier; 2],
    quarter_mono: Rotation3,
    half: Rotation3,
    full: Rotation3,
}

fn alternating_cos(a: &[f64]) -> f64 {
    // Σ a_μ cos(μπ/2) = a₀ − a₂ + a₄ − …
    a.iter()
        .enumerate()
        .step_by(2)
        .map(|(mu, c)| if mu % 4 == 0 { *c } else { -c })
        .sum()
}

fn alternating_sin(b: &[f64]) -> f64 {
    // Σ b_μ sin(μπ/2) = b₁ − b₃ + b₅ − …
    b.iter()
        .enumerate()
        .skip(1)
        .step_by(2)
        .map(|(mu, c)| if mu % 4 == 1 { *c } else { -c })
        .sum()
}

/// `R(π, 0) = T⁽¹³⁾ qᵀ T⁽¹³⁾ q` from the quarter-period monodromy `q`.
pub fn half_monodromy(q: &Rotation3) -> Rotation3 {
    let t = Rotation3::t13();
    t * q.transpose() * t * *q
}

impl QuarterPropagator {
    pub fn new(d: &DimensionlessParams) -> Result<Self, FloquetError> {
        Self::with_order(d, None)
    }

    pub fn with_order(d: &DimensionlessParams, order: Option<usize>) -> Result<Self, FloquetError> {
        let quarter = solve_quarter(d, 1.0, 0.0, order)?;
        let n = quarter.order;
        let mk = |j: usize| -> Result<BasisFourier, FloquetError> {
            let x = u_series_to_fourier(&quarter.xi_basis[j], n)?;
            let y = u_series_to_fourier(&quarter.eta_basis[j], n)?;
            let (z0, z) = z_fourier(&x, &y, d);
            Ok(BasisFourier { x, y, z0, z })
        };
        let basis = [mk(0)?, mk(1)?];
        let col = |b: &BasisFourier| {
            SpinVector::new(
                alternating_cos(&b.x),
                alternating_cos(&b.y),
                b.z0 * FRAC_PI_2 + alternating_sin(&b.z),
            )
        };
        let (c1, c2) = (col(&basis[0]), col(&basis[1]));
        let quarter_mono = Rotation3::from_columns([c1, c2, c1.cross(c2)]);
        let half = half_monodromy(&quarter_mono);
        let a = Rotation3::t1() * half;
        Ok(Self {
            params: *d,
            quarter,
            basis,
            quarter_mono,
            half,
            full: a * a,
        })
    }

    /// `R(π/2, 0)` from the alternating Fourier sums.
    pub fn quarter_monodromy(&self) -> Rotation3 {
        self.quarter_mono
    }

    pub fn half_monodromy(&self) -> Rotation3 {
        self.half
    }

    pub fn full_monodromy(&self) -> Rotation3 {
        self.full
    }

    /// `z₀` of the two basis solutions (the secular slope of `z`).
    pub fn basis_z0(&self) -> [f64; 2] {
        [self.basis[0].z0, self.basis[1].z0]
    }

    /// `R(τ, 0)` for `τ ∈ [0, π/2]` straight from the series.
    pub fn quarter_rotation(&self, tau: f64) -> Rotation3 {
        let tau = tau.clamp(0.0, FRAC_PI_2);
        let u = (0.5 * tau).sin().powi(2);
        let ev = |s| {
            series_evaluate(s, u, EvalOptions::default())
                .expect("u ≤ 1/2")
                .0
        };
        let col = |j: usize| {
            SpinVector::new(
                ev(&self.quarter.xi_basis[j]),
                ev(&self.quarter.eta_basis[j]),
                self.basis[j].z0 * tau + sin_sum(&self.basis[j].z, tau),
            )
        };
        let (c1, c2) = (col(0), col(1));
        Rotation3::from_columns([c1, c2, c1.cross(c2)])
    }

    /// `R(τ, 0)` for any real `τ`.
    pub fn rotation(&self, tau: f64) -> Rotation3 {
        if tau < 0.0 {
            let t3 = Rotation3::t3();
            return t3 * self.rotation(-tau) * t3;
        }
        let k = (tau / (2.0 * PI)).floor();
        let t = tau - 2.0 * PI * k;
        let base = if t <= FRAC_PI_2 {
            self.quarter_rotation(t)
        } else if t <= PI {
            let t13 = Rotation3::t13();
            t13 * self.quarter_rotation(PI - t) * t13 * self.half
        } else {
            let t1 = Rotation3::t1();
            t1 * self.rotation(t - PI) * t1 * self.half
        };
        if k >= 1.0 {
            base * self.full.powi(k as u32)
        } else {
            base
        }
    }
}

/// `R(π/2, 0)` from the quarter-period series.
pub fn quarter_monodromy(d: &DimensionlessParams) -> Result<Rotation3, FloquetError> {
    Ok(QuarterPropagator::new(d)?.quarter_monodromy())
}

/// `R(τ, 0)` for any `τ` via the quarter-period series and symmetries.
pub fn extend_trajectory(p: &QuarterPropagator, tau: f64) -> Rotation3 {
    p.rotation(tau)
}
