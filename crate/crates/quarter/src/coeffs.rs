use rabi_core::DimensionlessParams;
use rabi_pseries::Polynomial;

use crate::QuarterError;

/// `Σ_{j=0}^{3} pⱼ(u) C⁽ʲ⁾(u) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThirdOrderODE {
    pub p: [Polynomial; 4],
}

fn k(a: f64) -> Polynomial {
    Polynomial::constant(a)
}

/// Shorthands `u`, `(u−1)u` and `(1−2u)²`.
fn basics() -> (Polynomial, Polynomial, Polynomial) {
    let u = Polynomial::u();
    let um1u = &(&u - &k(1.0)) * &u;
    let w = &k(1.0) - &u.scale(2.0);
    (u, um1u, &w * &w)
}

/// Coefficients of the ODE satisfied by `X(u) = x(τ)`.
#[allow(non_snake_case)]
pub fn ode_coeffs_X(d: &DimensionlessParams) -> ThirdOrderODE {
    let (nu, f, g) = (d.nu, d.f, d.g);
    let (u, um1u, w2) = basics();
    let one = k(1.0);
    let two_u_m1 = &u.scale(2.0) - &one;
    // 4f²ν(u−1)u, common to several coefficients
    let a = um1u.scale(4.0 * f * f * nu);

    let p3 = &(&u * &(&one - &u)) * &(&(&a + &k(f * g)) - &w2.scale(g * g * nu));
    let p2 = &two_u_m1.scale(-0.5)
        * &(&(&a + &k(3.0 * f * g)) + &(&um1u.scale(-4.0) - &k(3.0)).scale(g * g * nu));
    let p1 = {
        let t1 = (&um1u * &um1u).scale(-16.0 * f.powi(4) * nu);
        let t2 = um1u.scale(-4.0 * f.powi(3) * g);
        let t3 = &a * &(&w2.scale(2.0 * g * g) + &k(nu * nu));
        let t4 = w2.scale(f * g.powi(3));
        let t5 = k(3.0 * f * g * nu * nu);
        let t6 = (&(&(&w2 * &w2).scale(g * g) + &w2.scale(nu * nu)) + &k(2.0)).scale(-g * g * nu);
        &(&(&(&(&t1 + &t2) + &t3) + &t4) + &t5) + &t6
    };
    let p0 = &two_u_m1.scale(-2.0 * (f - g) * (f + g))
        * &(&(&a + &k(3.0 * f * g)) - &w2.scale(g * g * nu));
    ThirdOrderODE {
        p: [p0, p1, p2, p3],
    }
}

/// Coefficients of the ODE satisfied by `Y(u) = y(τ)`, with the common
/// factor `f²g + fν + gν²` divided out.
#[allow(non_snake_case)]
pub fn ode_coeffs_Y(d: &DimensionlessParams) -> Result<ThirdOrderODE, QuarterError> {
    let (nu, f, g) = (d.nu, d.f, d.g);
    let common = f * f * g + f * nu + g * nu * nu;
    if common == 0.0 {
        return Err(QuarterError::DegenerateY);
    }
    let (u, um1u, w2) = basics();
    let one = k(1.0);
    let two_u_m1 = &u.scale(2.0) - &one;
    let b = um1u.scale(4.0 * f * f * g);
    let m8 = &um1u.scale(-8.0) - &k(3.0);

    let q3 = &(&um1u * &two_u_m1.powi(3)) * &(&b - &k(f * nu + g * nu * nu));
    let q2 = &w2.scale(0.5) * &(&b + &m8.scale(f * nu + g * nu * nu));
    let q1 = {
        let t1 = (&um1u * &um1u).scale(16.0 * f.powi(4) * g);
        let t2 = um1u.scale(-4.0 * f.powi(3) * nu);
        let t3 = &um1u.scale(-4.0 * f * f * g) * &(&w2.scale(g * g) + &k(2.0 * nu * nu));
        let t4 = (&w2.scale(3.0 * g * g) + &k(nu * nu)).scale(f * nu);
        let t5 = w2.scale(g.powi(3) * nu * nu);
        let t6 = k(g * nu.powi(4));
        &(&w2 * &two_u_m1) * &(&(&(&(&(&t1 + &t2) + &t3) + &t4) + &t5) + &t6)
    };
    let q0 = {
        let t1 = um1u.scale(4.0 * f.powi(4) * g);
        let t2 = m8.scale(f.powi(3) * nu);
        let t3 = (&um1u.scale(4.0) - &one).scale(f * f * g * nu * nu);
        let t4 = k(-f * nu.powi(3) - g * nu.powi(4));
        &w2.scale(2.0) * &(&(&(&t1 + &t2) + &t3) + &t4)
    };
    Ok(ThirdOrderODE {
        p: [q0, q1, q2, q3],
    })
}
