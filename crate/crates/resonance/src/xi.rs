use std::f64::consts::PI;

use rabi_core::DimensionlessParams;
use rabi_floquet::{quadrature_nodes, QuarterPropagator};

use crate::ResonanceError;

/// Mean Fourier coefficients over `[0, π]` of the x- and y-components of the
/// two basis solutions starting at `e₁` and `e₂`.
///
/// A periodic solution in the `z = 0` plane needs a null vector of this matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiMatrix {
    pub x0x: f64,
    pub x0y: f64,
    pub y0x: f64,
    pub y0y: f64,
}

impl XiMatrix {
    pub fn det(&self) -> f64 {
        self.x0x * self.y0y - self.x0y * self.y0x
    }
}

pub fn xi_matrix(d: &DimensionlessParams) -> Result<XiMatrix, ResonanceError> {
    let p = QuarterPropagator::new(d)?;
    let mut m = [0.0; 4];
    for (t, w) in quadrature_nodes(0.0, PI) {
        let r = p.rotation(t);
        m[0] += w * r.at(1, 1);
        m[1] += w * r.at(1, 2);
        m[2] += w * r.at(2, 1);
        m[3] += w * r.at(2, 2);
    }
    Ok(XiMatrix {
        x0x: m[0] / PI,
        x0y: m[1] / PI,
        y0x: m[2] / PI,
        y0y: m[3] / PI,
    })
}
