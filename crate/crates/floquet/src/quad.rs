//! Composite Gauss–Legendre quadrature.

use std::sync::OnceLock;

const ORDER: usize = 16;
const PANELS: usize = 24;

/// Nodes and weights on [−1, 1] by Newton iteration on `P_n`.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

fn rule() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(ORDER))
}

/// Quadrature nodes and weights for `∫_a^b`.
pub fn nodes(a: f64, b: f64) -> Vec<(f64, f64)> {
    let h = (b - a) / PANELS as f64;
    let mut v = Vec::with_capacity(PANELS * ORDER);
    for p in 0..PANELS {
        let c = a + (p as f64 + 0.5) * h;
        for &(x, w) in rule() {
            v.push((c + 0.5 * h * x, 0.5 * h * w));
        }
    }
    v
}

/// Mean of `f` over `[a, b]`.
pub fn mean(a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
    nodes(a, b).into_iter().map(|(t, w)| w * f(t)).sum::<f64>() / (b - a)
}
