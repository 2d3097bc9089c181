use rabi_core::DriveParams;

use crate::tables::{omega11_closed_form, omega20_closed_form, to_f64, ResonanceTable};
use crate::{xi_matrix, ResonanceError};

/// Relative bisection tolerance on the root.
pub const ROOT_RTOL: f64 = 1e-12;
/// Initial bracket `[lo, hi]·(series estimate)`; widened once by ×1.5 about the estimate.
pub const BRACKET: (f64, f64) = (0.7, 1.3);

const WIDEN: f64 = 1.5;
const SCAN_CELLS: usize = 24;

/// `ω_res⁽ⁿ⁾` for circular driving `F = G`: exactly `ω₀` for `n = 1`, otherwise
/// `ω₀(√((2n−3)(2n−1)(F²/ω₀² + 1) + 1) − 1)/(4n(n−2) + 3)`.
#[allow(non_snake_case)]
pub fn circular_resonance(n: usize, F: f64, omega0: f64) -> Result<f64, ResonanceError> {
    match n {
        0 => Err(ResonanceError::UnsupportedIndex(n)),
        1 => Ok(omega0),
        _ => {
            let k = n as f64;
            let a = F / omega0;
            let q = (2.0 * k - 3.0) * (2.0 * k - 1.0) * (a * a + 1.0) + 1.0;
            Ok(omega0 * (q.sqrt() - 1.0) / (4.0 * k * (k - 2.0) + 3.0))
        }
    }
}

/// Truncated small-amplitude series for `ω_res⁽ⁿ⁾`.
///
/// `n ≤ 3` uses the stored tables. For `n ≥ 4` only the leading corrections
/// `1/(2n−1) + Ω_{2,0}(a² + b²) + Ω_{1,1}ab` are known (`max_order ≤ 3`),
/// unless `F = G`, where the circular closed form is returned.
#[allow(non_snake_case)]
pub fn resonance_series_eval(
    n: usize,
    F: f64,
    G: f64,
    omega0: f64,
    max_order: usize,
) -> Result<f64, ResonanceError> {
    let (a, b) = (F / omega0, G / omega0);
    match n {
        0 => Err(ResonanceError::UnsupportedIndex(n)),
        1..=3 => Ok(omega0 * ResonanceTable::stored(n)?.eval(a, b, max_order)?),
        _ if F == G => circular_resonance(n, F, omega0),
        _ if max_order <= 3 => {
            let mut s = 1.0 / (2 * n - 1) as f64;
            if max_order >= 2 {
                s += to_f64(omega20_closed_form(n)?) * (a * a + b * b)
                    + to_f64(omega11_closed_form(n)?) * a * b;
            }
            Ok(omega0 * s)
        }
        _ => Err(ResonanceError::OrderBeyondTable {
            n,
            order: max_order,
            max: 3,
        }),
    }
}

/// `det Ξ` at driving frequency `omega`.
#[allow(non_snake_case)]
pub fn xi_det_at(omega0: f64, F: f64, G: f64, omega: f64) -> Result<f64, ResonanceError> {
    let d = DriveParams::new(omega0, F, G, omega)?.dimensionless();
    Ok(xi_matrix(&d)?.det())
}

fn best_estimate(n: usize, f: f64, g: f64, omega0: f64) -> Result<f64, ResonanceError> {
    let order = match n {
        1..=3 => ResonanceTable::stored(n)?.complete_order(),
        _ => 2,
    };
    resonance_series_eval(n, f, g, omega0, order)
}

/// Sign change of `det Ξ` in `[lo, hi]` closest to `target`, found on a uniform grid.
fn scan(
    det: &impl Fn(f64) -> Result<f64, ResonanceError>,
    lo: f64,
    hi: f64,
    target: f64,
) -> Result<Option<(f64, f64, f64)>, ResonanceError> {
    let h = (hi - lo) / SCAN_CELLS as f64;
    let mut prev = (lo, det(lo)?);
    let mut best: Option<(f64, f64, f64)> = None;
    for i in 1..=SCAN_CELLS {
        let x = lo + i as f64 * h;
        let v = det(x)?;
        if prev.1 == 0.0 {
            return Ok(Some((prev.0, prev.0, 0.0)));
        }
        if prev.1.signum() != v.signum() {
            let closer = best.is_none_or(|(a, b, _)| {
                (0.5 * (prev.0 + x) - target).abs() < (0.5 * (a + b) - target).abs()
            });
            if closer {
                best = Some((prev.0, x, prev.1));
            }
        }
        prev = (x, v);
    }
    Ok(best)
}

/// Root of `det Ξ(ω) = 0` near `ω₀/(2n−1)`, bracketed about the series estimate.
///
/// Neighbouring resonances can fall inside the bracket for `n ≥ 3`, so the
/// bracket is scanned and the sign change nearest the estimate is bisected.
#[allow(non_snake_case)]
pub fn resonance_frequency(omega0: f64, F: f64, G: f64, n: usize) -> Result<f64, ResonanceError> {
    let est = best_estimate(n, F, G, omega0)?;
    let det = |w: f64| xi_det_at(omega0, F, G, w);
    let (mut lo, mut hi) = (BRACKET.0 * est, BRACKET.1 * est);
    let mut found = scan(&det, lo, hi, est)?;
    if found.is_none() {
        lo = est - WIDEN * (est - lo);
        hi = est + WIDEN * (hi - est);
        found = scan(&det, lo, hi, est)?;
    }
    let (mut a, mut b, mut fa) = found.ok_or(ResonanceError::NoSignChange { lo, hi })?;
    while b - a > ROOT_RTOL * b {
        let m = 0.5 * (a + b);
        let fm = det(m)?;
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}
