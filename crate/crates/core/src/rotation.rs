use std::ops::Mul;

use nalgebra::{Matrix3, Vector3};

use crate::{DimensionlessParams, SpinVector};

/// Orthogonality / eigenvector tolerance.
pub const TOL_ORTHO: f64 = 1e-10;

/// A 3×3 propagator `R(τ, τ₀)` of the classical equation of motion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation3(pub Matrix3<f64>);

impl Rotation3 {
    pub fn identity() -> Self {
        Self(Matrix3::identity())
    }

    pub fn from_rows(r: [[f64; 3]; 3]) -> Self {
        Self(Matrix3::new(
            r[0][0], r[0][1], r[0][2], r[1][0], r[1][1], r[1][2], r[2][0], r[2][1], r[2][2],
        ))
    }

    pub fn from_columns(c: [SpinVector; 3]) -> Self {
        Self(Matrix3::from_columns(&[
            c[0].into(),
            c[1].into(),
            c[2].into(),
        ]))
    }

    /// `T⁽¹⁾ = diag(−1, 1, 1)`.
    pub fn t1() -> Self {
        Self(Matrix3::from_diagonal(&Vector3::new(-1.0, 1.0, 1.0)))
    }

    /// `T⁽³⁾ = diag(1, 1, −1)`.
    pub fn t3() -> Self {
        Self(Matrix3::from_diagonal(&Vector3::new(1.0, 1.0, -1.0)))
    }

    /// `T⁽¹³⁾ = diag(−1, 1, −1)`.
    pub fn t13() -> Self {
        Self(Matrix3::from_diagonal(&Vector3::new(-1.0, 1.0, -1.0)))
    }

    /// Entry with 1-based indices, matching the usual matrix notation.
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.0[(i - 1, j - 1)]
    }

    pub fn column(&self, j: usize) -> SpinVector {
        SpinVector::new(self.0[(0, j)], self.0[(1, j)], self.0[(2, j)])
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn apply(&self, s: SpinVector) -> SpinVector {
        (self.0 * Vector3::from(s)).into()
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut out = Self::identity();
        for _ in 0..n {
            out = out * *self;
        }
        out
    }

    pub fn det(&self) -> f64 {
        self.0.determinant()
    }

    pub fn trace(&self) -> f64 {
        self.0.trace()
    }

    /// `max |R Rᵀ − 1|` together with `|det R − 1|`.
    pub fn orthogonality_defect(&self) -> f64 {
        let e = (self.0 * self.0.transpose() - Matrix3::identity()).amax();
        e.max((self.det() - 1.0).abs())
    }

    pub fn is_rotation(&self, tol: f64) -> bool {
        self.orthogonality_defect() <= tol
    }

    pub fn max_abs_diff(&self, o: &Self) -> f64 {
        (self.0 - o.0).amax()
    }
}

impl Mul for Rotation3 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self(self.0 * o.0)
    }
}

/// Generator `H(τ)` with `R′ = H R`, i.e. `H S = h × S`.
pub fn generator(d: &DimensionlessParams, tau: f64) -> Matrix3<f64> {
    let (s, c) = tau.sin_cos();
    let h2 = d.g * c;
    let h3 = d.f * s;
    Matrix3::new(0.0, -h3, h2, h3, 0.0, -d.nu, -h2, d.nu, 0.0)
}
