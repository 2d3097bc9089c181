//! Dormand–Prince 5(4) with Hairer's 4th-order continuous extension.

use crate::NumintError;

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;
const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

/// Step counters and the largest accepted local error estimate.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct IntegrationStats {
    pub accepted: usize,
    pub rejected: usize,
    pub max_err: f64,
}

#[derive(Debug, Clone)]
struct Segment<const N: usize> {
    t0: f64,
    h: f64,
    rc: [[f64; N]; 5],
}

/// Piecewise dense output over all accepted steps.
#[derive(Debug, Clone)]
pub struct DenseSolution<const N: usize> {
    segs: Vec<Segment<N>>,
    pub t0: f64,
    pub t1: f64,
    pub y0: [f64; N],
    pub y1: [f64; N],
    /// Accepted step endpoints, starting with `t0`.
    pub knots: Vec<f64>,
    pub stats: IntegrationStats,
}

impl<const N: usize> DenseSolution<N> {
    /// Interpolated state at `t`, clamped to the integration interval.
    pub fn eval(&self, t: f64) -> [f64; N] {
        if self.segs.is_empty() || t == self.t0 {
            return self.y0;
        }
        if t == self.t1 {
            return self.y1;
        }
        let dir = (self.t1 - self.t0).signum();
        // first segment whose end is beyond t
        let idx = self
            .segs
            .partition_point(|s| dir * (s.t0 + s.h - t) < 0.0)
            .min(self.segs.len() - 1);
        let s = &self.segs[idx];
        let th = ((t - s.t0) / s.h).clamp(0.0, 1.0);
        let th1 = 1.0 - th;
        std::array::from_fn(|i| {
            s.rc[0][i]
                + th * (s.rc[1][i] + th1 * (s.rc[2][i] + th * (s.rc[3][i] + th1 * s.rc[4][i])))
        })
    }

    /// The accepted-step endpoints with their states.
    pub fn nodes(&self) -> Vec<(f64, [f64; N])> {
        let mut v = vec![(self.t0, self.y0)];
        for s in &self.segs {
            v.push((s.t0 + s.h, std::array::from_fn(|i| s.rc[0][i] + s.rc[1][i])));
        }
        v
    }
}

fn axpy<const N: usize>(y: &[f64; N], h: f64, terms: &[(f64, &[f64; N])]) -> [f64; N] {
    let mut out = *y;
    for (a, k) in terms {
        for i in 0..N {
            out[i] += h * a * k[i];
        }
    }
    out
}

/// Integrates `y′ = rhs(t, y)` from `t0` to `t1` (either direction) with
/// mixed absolute/relative tolerance `tol`.
pub fn integrate<const N: usize>(
    rhs: impl Fn(f64, &[f64; N]) -> [f64; N],
    t0: f64,
    y0: [f64; N],
    t1: f64,
    tol: f64,
) -> Result<DenseSolution<N>, NumintError> {
    let mut sol = DenseSolution {
        segs: Vec::new(),
        t0,
        t1,
        y0,
        y1: y0,
        knots: vec![t0],
        stats: IntegrationStats::default(),
    };
    let span = t1 - t0;
    if span == 0.0 {
        return Ok(sol);
    }
    let dir = span.signum();
    let mut t = t0;
    let mut y = y0;
    let mut k1 = rhs(t, &y);
    let mut h = dir * (0.05 * tol.powf(0.2)).min(span.abs());
    let mut last_rejected = false;

    loop {
        let remaining = t1 - t;
        let last = dir * (remaining - h) <= 0.0;
        if last {
            h = remaining;
        }
        let k2 = rhs(t + C2 * h, &axpy(&y, h, &[(A21, &k1)]));
        let k3 = rhs(t + C3 * h, &axpy(&y, h, &[(A31, &k1), (A32, &k2)]));
        let k4 = rhs(
            t + C4 * h,
            &axpy(&y, h, &[(A41, &k1), (A42, &k2), (A43, &k3)]),
        );
        let k5 = rhs(
            t + C5 * h,
            &axpy(&y, h, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]),
        );
        let k6 = rhs(
            t + h,
            &axpy(
                &y,
                h,
                &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)],
            ),
        );
        let yn = axpy(
            &y,
            h,
            &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)],
        );
        let tn = if last { t1 } else { t + h };
        let k7 = rhs(tn, &yn);

        let mut err = 0.0;
        for i in 0..N {
            let e =
                h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let sc = tol + tol * y[i].abs().max(yn[i].abs());
            err += (e / sc).powi(2);
        }
        let err = (err / N as f64).sqrt();
        if !err.is_finite() {
            return Err(NumintError::NonFinite(t));
        }

        if err <= 1.0 {
            let mut rc = [[0.0; N]; 5];
            for i in 0..N {
                let d = yn[i] - y[i];
                let bspl = h * k1[i] - d;
                rc[0][i] = y[i];
                rc[1][i] = d;
                rc[2][i] = bspl;
                rc[3][i] = d - h * k7[i] - bspl;
                rc[4][i] = h
                    * (D1 * k1[i] + D3 * k3[i] + D4 * k4[i] + D5 * k5[i] + D6 * k6[i] + D7 * k7[i]);
            }
            sol.segs.push(Segment { t0: t, h, rc });
            sol.stats.accepted += 1;
            sol.stats.max_err = sol.stats.max_err.max(err * tol);
            t = tn;
            y = yn;
            k1 = k7;
            sol.knots.push(t);
            if last {
                sol.y1 = y;
                return Ok(sol);
            }
            let mut fac = (0.9 * err.max(1e-10).powf(-0.2)).clamp(0.2, 10.0);
            if last_rejected {
                fac = fac.min(1.0);
            }
            h *= fac;
            last_rejected = false;
        } else {
            sol.stats.rejected += 1;
            h *= (0.9 * err.powf(-0.2)).max(0.2);
            last_rejected = true;
        }
        if h.abs() < 1e-14 * t.abs().max(1.0) {
            return Err(NumintError::StepUnderflow(t));
        }
    }
}
