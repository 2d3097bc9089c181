use num_rational::Ratio;

use crate::ResonanceError;

pub type Coeff = Ratio<i64>;

// (numerator, denominator); a zero denominator marks an entry that is not known.
const X: (i64, i64) = (0, 0);
const O: (i64, i64) = (0, 1);

const N1: [[(i64, i64); 9]; 9] = [
    [
        (1, 1),
        O,
        (1, 16),
        O,
        (1, 1024),
        O,
        (-35, 131072),
        O,
        (103, 8388608),
    ],
    [O, (-1, 8), O, (3, 256), O, (27, 65536), O, (-69, 262144), O],
    [
        (1, 16),
        O,
        (-13, 512),
        O,
        (611, 131072),
        O,
        (433, 2097152),
        O,
        X,
    ],
    [O, (3, 256), O, (-315, 32768), O, (609, 262144), O, X, O],
    [
        (1, 1024),
        O,
        (611, 131072),
        O,
        (-19115, 4194304),
        O,
        X,
        O,
        X,
    ],
    [O, (27, 65536), O, (609, 262144), O, X, O, X, O],
    [(-35, 131072), O, (433, 2097152), O, X, O, X, O, X],
    [O, (-69, 262144), O, X, O, X, O, X, O],
    [(103, 8388608), O, X, O, X, O, X, O, X],
];

const N2: [[(i64, i64); 8]; 8] = [
    [(1, 3), O, (3, 32), O, (-135, 8192), O, (2133, 1048576), O],
    [O, (1, 16), O, (-9, 2048), O, (-3591, 524288), O, X],
    [(3, 32), O, (-21, 4096), O, (6075, 1048576), O, X, O],
    [O, (-9, 2048), O, (4095, 262144), O, X, O, X],
    [(-135, 8192), O, (6075, 1048576), O, X, O, X, O],
    [O, (-3591, 524288), O, X, O, X, O, X],
    [(2133, 1048576), O, X, O, X, O, X, O],
    [O, X, O, X, O, X, O, X],
];

const N3: [[(i64, i64); 5]; 5] = [
    [(1, 5), O, (5, 96), O, (-2125, 221184)],
    [O, (1, 48), O, (-125, 55296), O],
    [(5, 96), O, (-205, 36864), O, X],
    [O, (-125, 55296), O, X, O],
    [(-2125, 221184), O, X, O, X],
];

/// Coefficients `Ω⁽ⁿ⁾_{m,k}` of `ω_res⁽ⁿ⁾/ω₀ = Σ Ω_{m,k} (F/ω₀)^m (G/ω₀)^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResonanceTable {
    pub n: usize,
    entries: Vec<Vec<Option<Coeff>>>,
}

fn convert<const K: usize>(rows: &[[(i64, i64); K]]) -> Vec<Vec<Option<Coeff>>> {
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|&(a, b)| (b != 0).then(|| Ratio::new(a, b)))
                .collect()
        })
        .collect()
}

impl ResonanceTable {
    /// Stored table for `n ∈ {1, 2, 3}`.
    pub fn stored(n: usize) -> Result<Self, ResonanceError> {
        let entries = match n {
            1 => convert(&N1),
            2 => convert(&N2),
            3 => convert(&N3),
            _ => return Err(ResonanceError::UnsupportedIndex(n)),
        };
        Ok(Self { n, entries })
    }

    /// `Ω_{m,k}`, or `None` if not stored.
    pub fn coeff(&self, m: usize, k: usize) -> Option<Coeff> {
        self.entries
            .get(m)
            .and_then(|r| r.get(k))
            .copied()
            .flatten()
    }

    /// Largest total order `M` such that every `Ω_{m,k}` with `m + k ≤ M` is stored.
    pub fn complete_order(&self) -> usize {
        (0..)
            .find(|&s| (0..=s).any(|m| self.coeff(m, s - m).is_none()))
            .map_or(0, |s| s - 1)
    }

    /// `Σ_{m+k=order} Ω_{m,k}`, the coefficient of `(F/ω₀)^order` for `F = G`.
    pub fn anti_diagonal_sum(&self, order: usize) -> Option<Coeff> {
        (0..=order).map(|m| self.coeff(m, order - m)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.entries.len();
        (0..n).all(|m| (0..n).all(|k| self.coeff(m, k) == self.coeff(k, m)))
    }

    /// Truncated double series in `a = F/ω₀`, `b = G/ω₀` through total order `max_order`.
    pub fn eval(&self, a: f64, b: f64, max_order: usize) -> Result<f64, ResonanceError> {
        let max = self.complete_order();
        if max_order > max {
            return Err(ResonanceError::OrderBeyondTable {
                n: self.n,
                order: max_order,
                max,
            });
        }
        let mut sum = 0.0;
        for s in 0..=max_order {
            for m in 0..=s {
                let c = self.coeff(m, s - m).expect("complete through max_order");
                if *c.numer() != 0 {
                    sum += to_f64(c) * a.powi(m as i32) * b.powi((s - m) as i32);
                }
            }
        }
        Ok(sum)
    }
}

pub(crate) fn to_f64(c: Coeff) -> f64 {
    *c.numer() as f64 / *c.denom() as f64
}

/// Conjectured `Ω⁽ⁿ⁾_{2,0} = Ω⁽ⁿ⁾_{0,2} = (2n−1)/(16(n−1)n)` for `n ≥ 2`.
pub fn omega20_closed_form(n: usize) -> Result<Coeff, ResonanceError> {
    if n < 2 {
        return Err(ResonanceError::UnsupportedIndex(n));
    }
    let n = n as i64;
    Ok(Ratio::new(2 * n - 1, 16 * (n - 1) * n))
}

/// `Ω⁽ⁿ⁾_{1,1} = 1/(8(n−1)n)` for `n ≥ 2`.
pub fn omega11_closed_form(n: usize) -> Result<Coeff, ResonanceError> {
    if n < 2 {
        return Err(ResonanceError::UnsupportedIndex(n));
    }
    let n = n as i64;
    Ok(Ratio::new(1, 8 * (n - 1) * n))
}
