use rabi_core::DimensionlessParams;
use rabi_pseries::PowerSeries;

use crate::FloquetError;

/// Cosine coefficients of `sin²ⁿ(τ/2) = (1 − cos τ)ⁿ / 2ⁿ`, as rows `n = 0..=N`.
///
/// Row `n` holds `2⁻²ⁿ C(2n, n)` at `μ = 0` and
/// `(−1)^μ 2¹⁻²ⁿ C(2n, n−μ)` for `1 ≤ μ ≤ n`.
pub fn power_cos_weights(n_max: usize) -> Vec<Vec<f64>> {
    let mut rows = Vec::with_capacity(n_max + 1);
    let mut w = 1.0; // C(2n, n) / 4ⁿ
    for n in 0..=n_max {
        if n > 0 {
            w *= (2 * n - 1) as f64 / (2 * n) as f64;
        }
        let mut row = vec![w];
        let mut ratio = 1.0; // C(2n, n−μ) / C(2n, n)
        for mu in 1..=n {
            ratio *= (n - mu + 1) as f64 / (n + mu) as f64;
            let sign = if mu % 2 == 1 { -1.0 } else { 1.0 };
            row.push(sign * 2.0 * w * ratio);
        }
        rows.push(row);
    }
    rows
}

/// Cosine coefficients `x_μ`, `μ = 0..=M`, of `Σ cₙ uⁿ` with `u = sin²(τ/2)`.
///
/// The result represents the truncated polynomial exactly when `M = N`; it
/// matches the spin component only where the series converges.
pub fn u_series_to_fourier(c: &PowerSeries, m: usize) -> Result<Vec<f64>, FloquetError> {
    let n = c.order();
    if m > n {
        return Err(FloquetError::TruncationTooHigh { m, n });
    }
    let rows = power_cos_weights(n);
    let mut out = vec![0.0; m + 1];
    for (k, row) in rows.iter().enumerate() {
        let ck = c.coeff(k);
        if ck == 0.0 {
            continue;
        }
        for (mu, w) in row.iter().enumerate().take(m + 1) {
            out[mu] += ck * w;
        }
    }
    Ok(out)
}

/// Sine coefficients of `z(τ) = z₀ τ + Σ_{μ≥1} z_μ sin μτ` from `z′ = ν y − g cos τ x`.
///
/// Returns `(z₀, z)` with `z[0] = 0` and `z.len() = M + 1`.
pub fn z_fourier(xf: &[f64], yf: &[f64], d: &DimensionlessParams) -> (f64, Vec<f64>) {
    let m = xf.len().min(yf.len()).saturating_sub(1);
    let x = |k: usize| xf.get(k).copied().unwrap_or(0.0);
    let y = |k: usize| yf.get(k).copied().unwrap_or(0.0);
    let z0 = d.nu * y(0) - 0.5 * d.g * x(1);
    let mut z = vec![0.0; m + 1];
    if m >= 1 {
        z[1] = d.nu * y(1) - d.g * x(0) - 0.5 * d.g * x(2);
    }
    for (mu, zm) in z.iter_mut().enumerate().skip(2) {
        *zm = (d.nu * y(mu) - 0.5 * d.g * (x(mu - 1) + x(mu + 1))) / mu as f64;
    }
    (z0, z)
}

/// `Σ a_μ cos μτ`.
pub fn cos_sum(a: &[f64], tau: f64) -> f64 {
    a.iter()
        .enumerate()
        .map(|(mu, c)| c * (mu as f64 * tau).cos())
        .sum()
}

/// `Σ b_μ sin μτ`.
pub fn sin_sum(b: &[f64], tau: f64) -> f64 {
    b.iter()
        .enumerate()
        .skip(1)
        .map(|(mu, c)| c * (mu as f64 * tau).sin())
        .sum()
}
