use crate::{Polynomial, PowerSeries, PseriesError};

/// Rising product `(t+1)(t+2)…(t+j)`: the factor picked up by `u^t` in the
/// `j`-th derivative.
fn falling(t: usize, j: usize) -> f64 {
    (1..=j).map(|q| (t + q) as f64).product()
}

/// Band structure of the recurrence for `Σ pⱼ(u) C⁽ʲ⁾(u) = 0`.
///
/// Returns `(shift, seeds_needed)`: the `u^m` coefficient of the ODE
/// involves `c_k` for `m − w ≤ k ≤ m + shift`, and `seeds_needed` leading
/// coefficients must be supplied before the forward solve can start.
pub fn recurrence_bandwidth(p: &[Polynomial; 4]) -> Result<(usize, usize), PseriesError> {
    let mut hi: Option<isize> = None;
    let mut lo: Option<isize> = None;
    for (j, pj) in p.iter().enumerate() {
        for (i, &a) in pj.coeffs().iter().enumerate() {
            if a != 0.0 {
                let d = j as isize - i as isize;
                hi = Some(hi.map_or(d, |h| h.max(d)));
                lo = Some(lo.map_or(d, |l| l.min(d)));
            }
        }
    }
    match (hi, lo) {
        (Some(s), Some(l)) if s >= 0 => {
            let s = s as usize;
            let width = (s as isize - l).max(0) as usize;
            Ok((s, s.max(width)))
        }
        _ => Err(PseriesError::ZeroLeading),
    }
}

/// Collects the `u^m` coefficient of `Σ pⱼ C⁽ʲ⁾`, split into the multiplier
/// of `c_target` and the sum of all other (already known) contributions.
fn row(p: &[Polynomial; 4], c: &[f64], m: usize, target: usize) -> (f64, f64) {
    let mut mult = 0.0;
    let mut rest = 0.0;
    for (j, pj) in p.iter().enumerate() {
        for (i, &a) in pj.coeffs().iter().enumerate() {
            if a == 0.0 || i > m {
                continue;
            }
            let t = m - i;
            let k = t + j;
            let w = a * falling(t, j);
            if k == target {
                mult += w;
            } else {
                rest += w * c[k];
            }
        }
    }
    (mult, rest)
}

/// Power-series solution of `Σ_{j=0}^{3} pⱼ(u) C⁽ʲ⁾(u) = 0` to order `n`.
///
/// `seeds` fixes the leading coefficients; every further `c_k` is solved
/// from the `u^{k−shift}` coefficient of the ODE.
pub fn recurrence_from_poly_ode(
    p: &[Polynomial; 4],
    seeds: &[f64],
    n: usize,
) -> Result<PowerSeries, PseriesError> {
    let (shift, needed) = recurrence_bandwidth(p)?;
    let needed = needed.min(n + 1);
    if seeds.len() < needed {
        return Err(PseriesError::InsufficientSeeds {
            needed,
            got: seeds.len(),
        });
    }
    let start = seeds.len().min(n + 1);
    let mut c = vec![0.0; n + 1];
    c[..start].copy_from_slice(&seeds[..start]);
    for k in start..=n {
        let m = k - shift;
        let (mult, rest) = row(p, &c, m, k);
        if mult == 0.0 {
            return Err(PseriesError::IndicialDegeneracy { m });
        }
        c[k] = -rest / mult;
    }
    Ok(PowerSeries::new(c))
}

/// Coefficients of `u^m`, `0 ≤ m ≤ N − 3`, of `Σ pⱼ(u) C⁽ʲ⁾(u)` for a
/// truncated series `C` of order `N`.
pub fn ode_residual(p: &[Polynomial; 4], s: &PowerSeries) -> Vec<f64> {
    let c = s.coeffs();
    let n = s.order();
    if n < 3 {
        return Vec::new();
    }
    (0..=n - 3)
        .map(|m| {
            let (mult, rest) = row(p, c, m, usize::MAX);
            debug_assert_eq!(mult, 0.0);
            rest
        })
        .collect()
}
