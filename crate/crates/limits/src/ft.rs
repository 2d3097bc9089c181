use std::f64::consts::PI;

use rabi_core::{DriveParams, QuasienergySplit, SpinVector};

use crate::LimitsError;

/// Relative guard band `|ω − ω₀/(2m−1)| < FT_GUARD·ω₀` around the resonances.
pub const FT_GUARD: f64 = 1e-6;
/// Largest acceptable magnitude of the highest retained order.
pub const FT_TAIL_TOL: f64 = 1e-6;

const AVERAGE_NODES: usize = 512;

/// Fourier–Taylor series of the (unnormalized) periodic solution
///
/// `X = Σₙ Σₘ R_{n,m} cos 2mωt`, `Y = Σₙ Σₘ S_{n,m} cos (2m+1)ωt`,
/// `Z = Σₙ Σₘ T_{n,m} sin (2m+1)ωt`, with `0 ≤ m ≤ n ≤ N`.
#[derive(Debug, Clone, PartialEq)]
pub struct FTSeries {
    pub params: DriveParams,
    pub order: usize,
    pub r: Vec<Vec<f64>>,
    pub s: Vec<Vec<f64>>,
    pub t: Vec<Vec<f64>>,
    /// Sum of the magnitudes of the highest-order coefficients.
    pub tail: f64,
}

fn at(v: &[f64], m: usize) -> f64 {
    v.get(m).copied().unwrap_or(0.0)
}

/// Builds the triangular coefficient arrays up to order `n`.
pub fn ft_build(p: &DriveParams, n: usize) -> Result<FTSeries, LimitsError> {
    let (w, w0, f, g) = (p.omega, p.omega0, p.F, p.G);
    for m in 1..=n + 1 {
        if (w - w0 / (2 * m - 1) as f64).abs() < FT_GUARD * w0 {
            return Err(LimitsError::Resonance { m, omega: w });
        }
    }
    let den0 = (w - w0) * (w + w0);
    let mut r = vec![vec![1.0]];
    let mut s = vec![vec![-(f * w + g * w0) / den0]];
    let mut t = vec![vec![-(f * w0 + g * w) / den0]];
    for k in 1..=n {
        let (sp, tp) = (&s[k - 1], &t[k - 1]);
        let mut rk = vec![0.0; k + 1];
        for (m, rkm) in rk.iter_mut().enumerate().skip(1) {
            *rkm = (f * at(sp, m - 1) - f * at(sp, m) - g * at(tp, m - 1) - g * at(tp, m))
                / (4.0 * m as f64 * w);
        }
        let mut sk = vec![0.0; k + 1];
        let mut tk = vec![0.0; k + 1];
        for m in 0..=k {
            let q = (2 * m + 1) as f64 * w;
            let den = 2.0 * (q * q - w0 * w0);
            let (a, b) = (rk[m], at(&rk, m + 1));
            sk[m] = ((-g * w0 - f * q) * a + (-g * w0 + f * q) * b) / den;
            tk[m] = ((-g * q - f * w0) * a + (-g * q + f * w0) * b) / den;
        }
        r.push(rk);
        s.push(sk);
        t.push(tk);
    }
    let tail = r[n]
        .iter()
        .skip(usize::from(n == 0))
        .map(|a| a.abs())
        .sum::<f64>()
        + s[n].iter().map(|a| a.abs()).sum::<f64>()
        + t[n].iter().map(|a| a.abs()).sum::<f64>();
    Ok(FTSeries {
        params: *p,
        order: n,
        r,
        s,
        t,
        tail,
    })
}

impl FTSeries {
    fn sum(&self, time: f64) -> SpinVector {
        let wt = self.params.omega * time;
        let mut v = SpinVector::new(0.0, 0.0, 0.0);
        for k in 0..=self.order {
            for m in 0..=k {
                let odd = (2 * m + 1) as f64 * wt;
                v.x += self.r[k][m] * (2.0 * m as f64 * wt).cos();
                v.y += self.s[k][m] * odd.cos();
                v.z += self.t[k][m] * odd.sin();
            }
        }
        v
    }

    fn check_tail(&self) -> Result<(), LimitsError> {
        if self.tail.is_finite() && self.tail < FT_TAIL_TOL {
            Ok(())
        } else {
            Err(LimitsError::TailTooLarge(self.tail))
        }
    }
}

/// `(X, Y, Z)` at physical time `t`; not normalized (the mean of `X` is 1).
pub fn ft_evaluate(s: &FTSeries, t: f64) -> Result<SpinVector, LimitsError> {
    s.check_tail()?;
    Ok(s.sum(t))
}

/// Quasienergy `𝓔 = ⟨½(ω₀ + (G cos ωt·Y + F sin ωt·Z)/(R + X))⟩` of the FT
/// solution (`R = ‖(X, Y, Z)‖`), split into the dynamical part
/// `⟨(ω₀X + G cos ωt·Y + F sin ωt·Z)/(2R)⟩` and the geometric remainder.
pub fn ft_quasienergy(s: &FTSeries) -> Result<QuasienergySplit, LimitsError> {
    s.check_tail()?;
    let p = &s.params;
    let period = 2.0 * PI / p.omega;
    let (mut e, mut ed) = (0.0, 0.0);
    for i in 0..AVERAGE_NODES {
        let t = period * i as f64 / AVERAGE_NODES as f64;
        let v = s.sum(t);
        let r = v.norm();
        let (sn, cs) = (p.omega * t).sin_cos();
        let hy = p.G * cs * v.y + p.F * sn * v.z;
        e += 0.5 * (p.omega0 + hy / (r + v.x));
        ed += 0.5 * (p.omega0 * v.x + hy) / r;
    }
    let k = AVERAGE_NODES as f64;
    Ok(QuasienergySplit::from_dynamical(e / k, ed / k))
}

/// Small-amplitude series of the quasienergy through fourth order in the amplitudes.
pub fn ft_quasienergy_series(p: &DriveParams) -> f64 {
    let (w, w0, f, g) = (p.omega, p.omega0, p.F, p.G);
    let d = w * w - w0 * w0;
    let (f2, g2) = (f * f, g * g);
    let second = (2.0 * f * g * w + (f2 + g2) * w0) / (8.0 * d);
    let fourth = (4.0 * f * g * (f2 + g2) * w.powi(3)
        + (f2 * f2 + 22.0 * f2 * g2 + g2 * g2) * w * w * w0
        + 12.0 * f * g * (f2 + g2) * w * w0 * w0
        + (3.0 * f2 * f2 + 2.0 * f2 * g2 + 3.0 * g2 * g2) * w0.powi(3))
        / (128.0 * d.powi(3));
    0.5 * w0 - second + fourth
}

/// Leading-order split: geometric part from the area of the lowest-order
/// ellipse, dynamical part from its mean energy.
pub fn ft_leading_split(p: &DriveParams) -> QuasienergySplit {
    let (w, w0, f, g) = (p.omega, p.omega0, p.F, p.G);
    let d = w * w - w0 * w0;
    let geometric = w * (g * w + f * w0) * (f * w + g * w0) / (4.0 * d * d);
    let dynamical = 0.5 * w0
        + (-4.0 * f * g * w.powi(3) - 3.0 * (f * f + g * g) * w * w * w0
            + (f * f + g * g) * w0.powi(3))
            / (8.0 * d * d);
    QuasienergySplit {
        total: geometric + dynamical,
        geometric,
        dynamical,
    }
}
