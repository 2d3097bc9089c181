use rabi_core::DriveParams;
use rayon::prelude::*;
use serde::Serialize;

use crate::{work_statistics, WorkError, WorkStatistics};

/// Successive parabolic refinements of the grid maximum.
pub const REFINE_STEPS: usize = 6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WorkScan {
    pub omegas: Vec<f64>,
    pub stats: Vec<WorkStatistics>,
    /// Mean work in physical units (`ω₀ · (p₂₁ − p₁₂)`).
    pub work: Vec<f64>,
    pub argmax: f64,
    pub max: f64,
}

fn mean_work(p: &DriveParams, omega: f64, beta: f64) -> Result<f64, WorkError> {
    let q = p.with_omega(omega)?;
    Ok(p.omega0 * work_statistics(&q.dimensionless(), beta)?.mean)
}

/// Vertex of the parabola through `(x−h, a)`, `(x, b)`, `(x+h, c)`.
fn vertex(x: f64, h: f64, a: f64, b: f64, c: f64) -> f64 {
    let den = a - 2.0 * b + c;
    if den >= 0.0 {
        return x;
    }
    x + 0.5 * h * (a - c) / den
}

/// Mean work over the sorted grid `omegas` (the value of `p.omega` is ignored),
/// with the grid maximum refined by repeated three-point parabolic fits.
pub fn work_scan(p: &DriveParams, omegas: &[f64], beta: f64) -> Result<WorkScan, WorkError> {
    if omegas.len() < 3 {
        return Err(WorkError::ScanTooShort(omegas.len()));
    }
    let stats = omegas
        .par_iter()
        .map(|&w| work_statistics(&p.with_omega(w)?.dimensionless(), beta))
        .collect::<Result<Vec<_>, WorkError>>()?;
    let work: Vec<f64> = stats.iter().map(|s| p.omega0 * s.mean).collect();
    let i = work
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i.clamp(1, omegas.len() - 2))
        .expect("nonempty");
    let mut h = 0.5 * (omegas[i + 1] - omegas[i - 1]);
    let mut x = vertex(omegas[i], h, work[i - 1], work[i], work[i + 1]);
    let (lo, hi) = (omegas[i - 1], omegas[i + 1]);
    x = x.clamp(lo, hi);
    for _ in 0..REFINE_STEPS {
        h *= 0.25;
        let f = |w: f64| mean_work(p, w, beta);
        x = vertex(x, h, f(x - h)?, f(x)?, f(x + h)?).clamp(x - 2.0 * h, x + 2.0 * h);
    }
    let max = mean_work(p, x, beta)?;
    Ok(WorkScan {
        omegas: omegas.to_vec(),
        stats,
        work,
        argmax: x,
        max,
    })
}
