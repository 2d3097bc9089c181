/// Bessel function of the first kind `J_k(x)` for integer `k ≥ 0`.
///
/// Miller's backward recurrence from well above `max(k, |x|)`, normalized
/// with `J₀ + 2 Σ J₂ⱼ = 1`. Accurate to a few ulps relative to the largest
/// `J_j(x)` for all real `x`.
#[allow(non_snake_case)]
pub fn bessel_J(k: u32, x: f64) -> f64 {
    if x == 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    let sign = if x < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
    let ax = x.abs();
    if ax < 1e-6 {
        // two terms of the ascending series
        let h = 0.5 * ax;
        let lead = (1..=k).fold(1.0, |acc, j| acc * h / j as f64);
        return sign * lead * (1.0 - h * h / (k as f64 + 1.0));
    }
    let k = k as usize;
    let top = k.max(ax.ceil() as usize);
    let start = 2 * ((top + 20 + (40.0 * top as f64).sqrt() as usize) / 2);
    const BIG: f64 = 1e250;

    let mut next = 0.0; // J_{j+1}
    let mut cur = 1e-300; // J_j
    let mut norm = 0.0;
    let mut want = 0.0;
    for j in (1..=start).rev() {
        let prev = 2.0 * j as f64 / ax * cur - next; // J_{j-1}
        next = cur;
        cur = prev;
        if cur.abs() > BIG {
            cur /= BIG;
            next /= BIG;
            norm /= BIG;
            want /= BIG;
        }
        let idx = j - 1;
        if idx % 2 == 0 && idx > 0 {
            norm += 2.0 * cur;
        }
        if idx == k {
            want = cur;
        }
    }
    norm += cur;
    sign * want / norm
}
