use crate::PseriesError;

/// Truncated power series `Σ_{k=0}^{N} c_k u^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    c: Vec<f64>,
}

/// Evaluation controls for [`series_evaluate`].
#[derive(Debug, Clone, Copy, Default)]
pub struct EvalOptions {
    /// Allow `|u| > 1/2`; the caller takes responsibility for convergence.
    pub allow_outside: bool,
}

impl PowerSeries {
    /// Series from coefficients; an empty vector becomes the zero series of order 0.
    pub fn new(c: Vec<f64>) -> Self {
        if c.is_empty() {
            return Self { c: vec![0.0] };
        }
        Self { c }
    }

    pub fn zeros(order: usize) -> Self {
        Self {
            c: vec![0.0; order + 1],
        }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> f64) -> Self {
        Self {
            c: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.c
    }

    pub fn coeffs_mut(&mut self) -> &mut [f64] {
        &mut self.c
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.c.get(k).copied().unwrap_or(0.0)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_fn(order, |k| self.coeff(k))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.c.iter().map(|a| a * s).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        Self::from_fn(n, |k| self.c[k] + o.c[k])
    }

    /// Term-wise derivative; the order drops by one (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        if self.c.len() == 1 {
            return Self::zeros(0);
        }
        Self::from_fn(self.order() - 1, |k| (k + 1) as f64 * self.c[k + 1])
    }

    /// Plain Horner sum without radius checks.
    pub fn eval_unchecked(&self, u: f64) -> f64 {
        self.c.iter().rev().fold(0.0, |acc, &a| acc * u + a)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Option<Self> {
        let a0 = self.c[0];
        if a0 == 0.0 {
            return None;
        }
        let n = self.order();
        let mut b = vec![0.0; n + 1];
        b[0] = 1.0 / a0;
        for k in 1..=n {
            let s: f64 = (1..=k).map(|j| self.c[j] * b[k - j]).sum();
            b[k] = -s / a0;
        }
        Some(Self { c: b })
    }
}

/// Cauchy product truncated at `min(order(a), order(b))`.
pub fn series_multiply(a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
    let n = a.order().min(b.order());
    PowerSeries::from_fn(n, |k| (0..=k).map(|i| a.c[i] * b.c[k - i]).sum())
}

/// `outer ∘ inner` truncated at `min(order(outer), order(inner))`.
///
/// The inner series must vanish at the origin.
pub fn series_compose(
    outer: &PowerSeries,
    inner: &PowerSeries,
) -> Result<PowerSeries, PseriesError> {
    if inner.c[0] != 0.0 {
        return Err(PseriesError::NonzeroConstant(inner.c[0]));
    }
    let n = outer.order().min(inner.order());
    let inner = inner.truncate(n);
    let mut acc = PowerSeries::zeros(n);
    for &a in outer.c[..=n].iter().rev() {
        acc = series_multiply(&acc, &inner);
        acc.c[0] += a;
    }
    Ok(acc)
}

/// Compositional inverse of a series with `s(0) = 0`, `s'(0) ≠ 0`.
///
/// Uses Lagrange inversion: `[uⁿ] s⁻¹ = (1/n) [uⁿ⁻¹] (u / s(u))ⁿ`.
pub fn series_revert(s: &PowerSeries) -> Result<PowerSeries, PseriesError> {
    if s.c[0] != 0.0 {
        return Err(PseriesError::NonzeroConstant(s.c[0]));
    }
    let n = s.order();
    if n == 0 || s.c[1] == 0.0 {
        return Err(PseriesError::ZeroLinear);
    }
    // s(u)/u, kept at order n - 1
    let quot = PowerSeries::from_fn(n - 1, |k| s.c[k + 1]);
    let phi = quot.reciprocal().ok_or(PseriesError::ZeroLinear)?;
    let mut out = PowerSeries::zeros(n);
    let mut pow = PowerSeries::from_fn(n - 1, |k| if k == 0 { 1.0 } else { 0.0 });
    for k in 1..=n {
        pow = series_multiply(&pow, &phi);
        out.c[k] = pow.c[k - 1] / k as f64;
    }
    Ok(out)
}

/// Evaluates the series at `u` and returns `(value, tail_estimate)`.
///
/// The tail estimate is the last retained term, extended geometrically by the
/// ratio of the last two coefficients when that ratio indicates convergence.
pub fn series_evaluate(
    s: &PowerSeries,
    u: f64,
    opts: EvalOptions,
) -> Result<(f64, f64), PseriesError> {
    if !u.is_finite() || (!opts.allow_outside && u.abs() > 0.5) {
        return Err(PseriesError::OutsideRadius(u));
    }
    let v = s.eval_unchecked(u);
    let n = s.order();
    let last = (s.c[n] * u.powi(n as i32)).abs();
    let tail = if n >= 1 && s.c[n - 1] != 0.0 {
        let q = (s.c[n] / s.c[n - 1] * u).abs();
        if q < 1.0 {
            last * q / (1.0 - q)
        } else {
            last
        }
    } else {
        last
    };
    Ok((v, tail))
}
