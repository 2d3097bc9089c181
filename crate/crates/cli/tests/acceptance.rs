//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::f64::consts::PI;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use rabi_core::*;
use rabi_floquet::*;
use rabi_limits::*;
use rabi_numint::*;
use rabi_resonance::*;
use rabi_work::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg)
    }
}

fn dp(nu: f64, f: f64, g: f64) -> DimensionlessParams {
    DimensionlessParams::new(nu, f, g).unwrap()
}

fn drive(w0: f64, f: f64, g: f64, w: f64) -> DriveParams {
    DriveParams::new(w0, f, g, w).unwrap()
}

fn angle_mod_pi(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(PI);
    d.min(PI - d)
}

fn max_diff(a: SpinVector, b: SpinVector) -> f64 {
    (a - b).to_array().iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// Periodic solution by RK with the sign of the start vector matching `hint`.
fn rk_periodic(p: &DriveParams, hint: SpinVector, ts: &[f64]) -> Vec<SpinVector> {
    let d = p.dimensionless();
    let half = monodromy_numeric_tol(&d, PI, 1e-13).unwrap();
    let a = monodromy_params_from_half(&half).alpha;
    let mut s0 = SpinVector::new(a.cos(), a.sin(), 0.0);
    if s0.dot(hint) < 0.0 {
        s0 = -s0;
    }
    let taus: Vec<f64> = ts.iter().map(|t| p.omega * t).collect();
    integrate_classical_at(&d, s0, &taus, 1e-13).unwrap().states
}

fn period_samples(p: &DriveParams, n: usize) -> Vec<f64> {
    (0..=n)
        .map(|i| 2.0 * PI / p.omega * i as f64 / n as f64)
        .collect()
}

fn symmetry_grid() -> Vec<DimensionlessParams> {
    let v = [0.25, 0.75, 1.5];
    let mut out = Vec::new();
    for &nu in &v {
        for &f in &v {
            for &g in &v {
                out.push(dp(nu, f, g));
            }
        }
    }
    out
}

fn c1_reference_point() -> Outcome {
    let d = dp(1.0, 1.0, 0.5);
    let q = quasienergy(&d).map_err(|e| e.to_string())?;
    let alpha = q.alpha.ok_or("degenerate alpha")?;
    ensure((alpha - 1.40464).abs() <= 1e-4, format!("alpha {alpha}"))?;
    ensure((q.r - 0.387328).abs() <= 1e-5, format!("r {}", q.r))?;
    ensure(
        (q.eps_qu - 0.126602).abs() <= 1e-5,
        format!("eps {}", q.eps_qu),
    )?;
    let full = monodromy_numeric(&d, 2.0 * PI).map_err(|e| e.to_string())?;
    let fit = fit_full_monodromy(&full)[0];
    let eps_fit = quasienergy_from_r(fit.r).map_err(|e| e.to_string())?.0;
    ensure((fit.r - q.r).abs() <= 1e-6, format!("fitted r {}", fit.r))?;
    ensure(
        angle_mod_pi(fit.alpha, alpha) <= 1e-6,
        format!("fitted alpha {}", fit.alpha),
    )?;
    ensure(
        (eps_fit - q.eps_qu).abs() <= 1e-6,
        format!("fitted eps {eps_fit}"),
    )?;
    Ok(format!(
        "alpha={alpha:.6} r={:.7} eps={:.7}; RK fit r={:.7}",
        q.r, q.eps_qu, fit.r
    ))
}

fn c2_fourier() -> Outcome {
    let s = periodic_solution(&dp(1.0, 1.0, 0.5)).map_err(|e| e.to_string())?;
    let checks = [
        ("x0", s.x[0], 0.0240019),
        ("x2", s.x[2], 0.144012),
        ("x4", s.x[4], -0.00263811),
        ("y1", s.y[1], 1.01784),
        ("y3", s.y[3], -0.0319147),
        ("z1", s.z[1], 0.969835),
        ("z3", s.z[3], -0.0224197),
    ];
    let worst = checks.iter().map(|c| (c.1 - c.2).abs()).fold(0.0, f64::max);
    for (name, got, want) in checks {
        ensure(
            (got - want).abs() <= 1e-4,
            format!("{name} = {got}, expected {want}"),
        )?;
    }
    Ok(format!("7 coefficients, max deviation {worst:.1e}"))
}

fn c3_circular() -> Outcome {
    let (mut de, mut dm) = (0.0f64, 0.0f64);
    for f in [0.25, 0.5, 1.0] {
        for nu in [0.5, 1.0, 2.0] {
            let d = dp(nu, f, f);
            let w = rabi_frequency(&d);
            let q = quasienergy(&d).map_err(|e| format!("nu={nu} f={f}: {e}"))?;
            let e = (q.eps_qu - fold_unit((1.0 + w) / 2.0)).abs();
            ensure(
                e <= 1e-7,
                format!(
                    "nu={nu} f={f}: eps {} vs {}",
                    q.eps_qu,
                    fold_unit((1.0 + w) / 2.0)
                ),
            )?;
            let num = monodromy_numeric(&d, 2.0 * PI).map_err(|e| e.to_string())?;
            let closed = circular_monodromy(&d).map_err(|e| e.to_string())?;
            let m = num.max_abs_diff(&closed);
            ensure(
                m <= 1e-8,
                format!("nu={nu} f={f}: monodromy differs by {m}"),
            )?;
            de = de.max(e);
            dm = dm.max(m);
        }
    }
    Ok(format!(
        "9 points, eps dev {de:.1e}, monodromy dev {dm:.1e}"
    ))
}

fn c4_symmetries() -> Outcome {
    let (t1, t3, t13) = (Rotation3::t1(), Rotation3::t3(), Rotation3::t13());
    let mut worst = 0.0f64;
    for d in symmetry_grid() {
        let tag = format!("nu={} f={} g={}", d.nu, d.f, d.g);
        let p = QuarterPropagator::new(&d).map_err(|e| e.to_string())?;
        let rpi = p.half_monodromy();
        let full = p.full_monodromy();
        let mut devs = Vec::new();
        for tau in [0.3, 1.1, 2.5] {
            let rt = p.rotation(tau);
            devs.push(p.rotation(PI + tau).max_abs_diff(&(t1 * rt * t1 * rpi)));
            devs.push(p.rotation(PI - tau).max_abs_diff(&(t13 * rt * t13 * rpi)));
            // composition through an intermediate time, with the RK two-time propagator
            let r21 = propagator(&d, tau, tau + 2.0, 1e-12).map_err(|e| e.to_string())?;
            devs.push(p.rotation(tau + 2.0).max_abs_diff(&(r21 * rt)));
        }
        let m = monodromy_params_from_half(&rpi);
        devs.push(rpi.max_abs_diff(&half_monodromy_from_params(&m)));
        devs.push(full.max_abs_diff(&full_monodromy_from_params(&m)));
        devs.push(full.transpose().max_abs_diff(&(t3 * full * t3)));
        let a = alpha_periodic(&d).map_err(|e| format!("{tag}: {e}"))?;
        let fixed = SpinVector::new(a.cos(), a.sin(), 0.0);
        devs.push(max_diff(full.apply(fixed), fixed));
        let dev = devs.into_iter().fold(0.0, f64::max);
        ensure(dev <= 1e-7, format!("{tag}: deviation {dev}"))?;
        worst = worst.max(dev);
    }
    Ok(format!("27 points, max deviation {worst:.1e}"))
}

fn c5_oracles() -> Outcome {
    let taus: Vec<f64> = (0..=64).map(|i| 2.0 * PI * i as f64 / 64.0).collect();
    let starts = [
        SpinVector::new(1.0, 0.0, 0.0),
        SpinVector::new(0.0, 1.0, 0.0),
        SpinVector::new(0.0, 0.6, 0.8),
    ];
    let (mut worst, mut drift) = (0.0f64, 0.0f64);
    for d in symmetry_grid() {
        let p = QuarterPropagator::new(&d).map_err(|e| e.to_string())?;
        for s0 in starts {
            let rk = integrate_classical_at(&d, s0, &taus, 1e-12).map_err(|e| e.to_string())?;
            for (&t, v) in taus.iter().zip(&rk.states) {
                worst = worst.max(max_diff(p.rotation(t).apply(s0), *v));
                drift = drift.max((v.norm() - 1.0).abs());
            }
        }
    }
    ensure(worst <= 1e-6, format!("trajectory deviation {worst}"))?;
    ensure(drift <= 1e-9, format!("norm drift {drift}"))?;
    Ok(format!("max deviation {worst:.1e}, norm drift {drift:.1e}"))
}

fn c6_zero_quasienergy() -> Outcome {
    let w1 = zero_quasienergy_omega(1.0, 1.0, 0.5).map_err(|e| e.to_string())?;
    ensure((w1 - 0.781665).abs() <= 1e-3, format!("omega1 {w1}"))?;
    let est = zero_curve_omega_estimate(1.0, 1.0, 0.5);
    ensure(
        (est - 0.781023).abs() <= 1e-6,
        format!("series estimate {est}"),
    )?;
    let s = degenerate_solutions(&drive(1.0, 1.0, 0.5, w1).dimensionless())
        .map_err(|e| e.to_string())?;
    ensure(
        (s.beta - -0.489254).abs() <= 1e-3,
        format!("beta {}", s.beta),
    )?;
    ensure(
        (s.eps_d - 0.64787).abs() <= 1e-3,
        format!("eps_d {}", s.eps_d),
    )?;
    // the signed branch crosses zero; the folded 𝓔 is |branch|
    let e = |w: f64| {
        w * quasienergy(&drive(1.0, 1.0, 0.5, w).dimensionless())
            .unwrap()
            .eps_qu
    };
    let h = 1e-4;
    let slope = (e(w1 + h) + e(w1 - h)) / (2.0 * h);
    ensure(
        (slope - s.eps_d).abs() <= 1e-3,
        format!("fd slope {slope} vs eps_d {}", s.eps_d),
    )?;
    Ok(format!(
        "omega1={w1:.6} (series {est:.6}) beta={:.6} eps_d={:.6} fd slope={slope:.6}",
        s.beta, s.eps_d
    ))
}

fn c7_slope_relation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut n = 0;
    let mut worst = 0.0f64;
    while n < 10 {
        let p = drive(
            rng.random_range(0.5..1.5),
            rng.random_range(0.1..1.0),
            rng.random_range(0.1..1.0),
            rng.random_range(0.6..1.6),
        );
        let q = quasienergy(&p.dimensionless()).map_err(|e| e.to_string())?;
        if !(0.02..0.48).contains(&q.eps_qu) {
            continue; // too close to a fold of the branch
        }
        let e = |w: f64| {
            w * quasienergy(&p.with_omega(w).unwrap().dimensionless())
                .unwrap()
                .eps_qu
        };
        let h = 1e-4;
        let fd = (e(p.omega + h) - e(p.omega - h)) / (2.0 * h);
        let dev = (fd - q.split.geometric).abs();
        ensure(
            dev <= 1e-4,
            format!("{p:?}: slope {fd} vs E_g/omega {}", q.split.geometric),
        )?;
        worst = worst.max(dev);
        n += 1;
    }
    Ok(format!("10 seeded points, max deviation {worst:.1e}"))
}

fn c8_resonances() -> Outcome {
    let mut parts = Vec::new();
    for f in [0.05, 0.1] {
        let w = resonance_frequency(1.0, f, f, 1).map_err(|e| e.to_string())?;
        ensure((w - 1.0).abs() <= 1e-8, format!("circular F={f}: {w}"))?;
    }
    for (n, tol) in [(1, 1e-5), (2, 1e-4), (3, 1e-4)] {
        let root = resonance_frequency(1.0, 0.1, 0.05, n).map_err(|e| e.to_string())?;
        let order = ResonanceTable::stored(n)
            .map_err(|e| e.to_string())?
            .complete_order();
        let series = resonance_series_eval(n, 0.1, 0.05, 1.0, order).map_err(|e| e.to_string())?;
        ensure(
            (root - series).abs() <= tol,
            format!("n={n}: root {root} vs series {series}"),
        )?;
        parts.push(format!("n={n}: {root:.9}"));
    }
    let t1 = ResonanceTable::stored(1).map_err(|e| e.to_string())?;
    for m in 1..=8 {
        ensure(
            t1.anti_diagonal_sum(m) == Some(Coeff::from_integer(0)),
            format!("anti-diagonal {m}"),
        )?;
    }
    for n in [2, 3] {
        let t = ResonanceTable::stored(n).map_err(|e| e.to_string())?;
        let (a, b) = (
            omega20_closed_form(n).unwrap(),
            omega11_closed_form(n).unwrap(),
        );
        ensure(
            t.coeff(2, 0) == Some(a) && t.coeff(0, 2) == Some(a) && t.coeff(1, 1) == Some(b),
            format!("closed forms for n={n}"),
        )?;
    }
    Ok(parts.join(", "))
}

fn c9_adiabatic() -> Outcome {
    for (w0, f, g) in [(1.0, 3.0, 2.0), (1.0, 1.0, 1.0), (2.0, 0.5, 0.3)] {
        let n = 4096;
        let quad = (0..n)
            .map(|i| {
                let p = 2.0 * PI * i as f64 / n as f64;
                0.5 * (f * f * p.sin().powi(2) + g * g * p.cos().powi(2) + w0 * w0).sqrt()
            })
            .sum::<f64>()
            / n as f64;
        let a = adiabatic_quasienergy(&drive(w0, f, g, 1.0)).map_err(|e| e.to_string())?;
        ensure(
            (a.e0 - quad).abs() <= 1e-10,
            format!("E0({w0},{f},{g}) = {} vs {quad}", a.e0),
        )?;
    }
    let base = drive(1.0, 3.0, 2.0, 1.0);
    let mut ratios = Vec::new();
    for order in 0..=2 {
        let err = |w: f64| {
            let p = base.with_omega(w).unwrap();
            let ts = period_samples(&p, 48);
            let exact = rk_periodic(&p, adiabatic_spin(&p, 0, 0.0).unwrap(), &ts);
            ts.iter()
                .zip(&exact)
                .map(|(&t, e)| (adiabatic_spin(&p, order, t).unwrap() - *e).norm())
                .fold(0.0, f64::max)
        };
        let ratio = err(1e-2) / err(5e-3);
        let expect = 2f64.powi(order as i32 + 1);
        ensure(
            (ratio / expect - 1.0).abs() <= 0.2,
            format!("order {order}: ratio {ratio}"),
        )?;
        ratios.push(format!("{ratio:.2}"));
    }
    let a = adiabatic_quasienergy(&base).map_err(|e| e.to_string())?;
    ensure(
        (a.e2 - 0.217319).abs() <= 1e-3,
        format!(
            "E0 quadrature and error ratios ({}) pass, but fitted E2 = {:.6} vs expected 0.217319",
            ratios.join(", "),
            a.e2
        ),
    )?;
    Ok(format!("E2={:.6}, ratios {}", a.e2, ratios.join(", ")))
}

fn c10_fourier_taylor() -> Outcome {
    for (w0, f, g, w) in [
        (0.3, 0.05, 0.05, 1.0),
        (1.0, 0.2, 0.1, 0.4),
        (0.5, 0.0, 0.3, 2.0),
    ] {
        let s = ft_build(&drive(w0, f, g, w), 0).map_err(|e| e.to_string())?;
        let den = w * w - w0 * w0;
        let (s00, t00) = (-(f * w + g * w0) / den, -(f * w0 + g * w) / den);
        ensure(
            (s.s[0][0] - s00).abs() <= 4.0 * f64::EPSILON * s00.abs(),
            format!("S00 {}", s.s[0][0]),
        )?;
        ensure(
            (s.t[0][0] - t00).abs() <= 4.0 * f64::EPSILON * t00.abs(),
            format!("T00 {}", s.t[0][0]),
        )?;
    }
    let p = drive(0.3, 0.05, 0.05, 1.0);
    let s = ft_build(&p, 4).map_err(|e| e.to_string())?;
    let ts = period_samples(&p, 40);
    let exact = rk_periodic(&p, SpinVector::new(1.0, 0.0, 0.0), &ts);
    let traj = ts
        .iter()
        .zip(&exact)
        .map(|(&t, e)| max_diff(ft_evaluate(&s, t).unwrap().normalized(), *e))
        .fold(0.0, f64::max);
    ensure(traj <= 1e-4, format!("FT vs RK {traj}"))?;
    let e = ft_quasienergy(&s).map_err(|e| e.to_string())?;
    let pipe = quasienergy(&p.dimensionless()).map_err(|e| e.to_string())?;
    let qd = (fold_unit(e.total / p.omega) - pipe.eps_qu).abs();
    ensure(qd <= 1e-6, format!("FT quasienergy vs pipeline {qd}"))?;
    let split_err = |k: f64| {
        let p = drive(0.3, 0.1 * k, 0.05 * k, 1.0);
        let e = ft_quasienergy(&ft_build(&p, 4).unwrap()).unwrap();
        let lead = ft_leading_split(&p);
        (e.dynamical - lead.dynamical, e.geometric - lead.geometric)
    };
    let (a, b) = (split_err(1.0), split_err(0.5));
    let (rd, rg) = (a.0 / b.0, a.1 / b.1);
    ensure(
        (rd / 16.0 - 1.0).abs() <= 0.2 && (rg / 16.0 - 1.0).abs() <= 0.2,
        format!("split ratios {rd}, {rg}"),
    )?;
    Ok(format!(
        "trajectory dev {traj:.1e}, quasienergy dev {qd:.1e}, split ratios {rd:.2}/{rg:.2}"
    ))
}

fn c11_zero_splitting() -> Outcome {
    let p = drive(0.0, 0.0, 1.0, 1.0);
    let taus: Vec<f64> = (0..=64).map(|i| 2.0 * PI * i as f64 / 64.0).collect();
    let rk = integrate_classical_at(
        &p.dimensionless(),
        SpinVector::new(1.0, 0.0, 0.0),
        &taus,
        1e-13,
    )
    .map_err(|e| e.to_string())?;
    let bessel = taus
        .iter()
        .zip(&rk.states)
        .map(|(&t, v)| max_diff(zero_field_fourier(1.0, t), *v))
        .fold(0.0, f64::max);
    ensure(bessel <= 1e-10, format!("Bessel vs RK {bessel}"))?;

    let p = drive(0.0, 0.25, 1.0, 1.0);
    let ts = period_samples(&p, 64);
    let approx: Vec<SpinVector> = ts.iter().map(|&t| near_linear_solution(&p, t)).collect();
    let exact = rk_periodic(&p, approx[0], &ts);
    let lin = approx
        .iter()
        .zip(&exact)
        .map(|(a, e)| max_diff(*a, *e))
        .fold(0.0, f64::max);
    ensure(lin <= 0.02, format!("near-linear {lin}"))?;

    let p = drive(0.0, 1.0, 0.75, 1.0);
    let ts = period_samples(&p, 64);
    let approx: Vec<SpinVector> = ts
        .iter()
        .map(|&t| near_circular_solution(&p, 0.25, t).unwrap().normalized())
        .collect();
    let exact = rk_periodic(&p, approx[0], &ts);
    let circ = approx
        .iter()
        .zip(&exact)
        .map(|(a, e)| max_diff(*a, *e))
        .fold(0.0, f64::max);
    ensure(circ <= 0.05, format!("near-circular {circ}"))?;
    Ok(format!(
        "Bessel {bessel:.1e}, near-linear {lin:.4}, near-circular {circ:.4}"
    ))
}

fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

fn c12_work() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let (mut norm, mut routes) = (0.0f64, 0.0f64);
    for _ in 0..20 {
        let d = dp(
            rng.random_range(0.2..2.0),
            rng.random_range(0.0..1.5),
            rng.random_range(0.0..1.5),
        );
        let beta = rng.random_range(0.0..20.0);
        let s = work_statistics(&d, beta).map_err(|e| e.to_string())?;
        let m = monodromy_params_from_half(&QuarterPropagator::new(&d).unwrap().half_monodromy());
        let r2 = m.r * m.r;
        let closed = 4.0 * r2 * (1.0 - r2) * m.alpha.sin().powi(2) * (0.5 * beta * d.nu).tanh();
        norm = norm.max((s.total_probability() - 1.0).abs());
        routes = routes.max((s.mean - closed).abs());
    }
    ensure(norm <= 1e-10, format!("normalization {norm}"))?;
    ensure(routes <= 1e-10, format!("two routes {routes}"))?;

    let strong = work_scan(&drive(1.0, 0.5, 0.1, 1.0), &grid(0.8, 1.1, 61), 10.0)
        .map_err(|e| e.to_string())?;
    ensure(
        (strong.argmax - 0.941843).abs() <= 1e-3,
        format!("argmax {}", strong.argmax),
    )?;

    let p = drive(1.0, 0.05, 0.01, 1.0);
    let omegas: Vec<f64> = grid(0.6, 1.5, 91)
        .into_iter()
        .filter(|w| (w - 1.0).abs() > 1e-9)
        .collect();
    let weak = work_scan(&p, &omegas, 10.0).map_err(|e| e.to_string())?;
    let limit: Vec<f64> = omegas
        .iter()
        .map(|&w| small_amplitude_work(&p.with_omega(w).unwrap(), 10.0).unwrap())
        .collect();
    let top = limit.iter().cloned().fold(0.0, f64::max);
    let rel = weak
        .work
        .iter()
        .zip(&limit)
        .map(|(a, b)| (a - b).abs() / top)
        .fold(0.0, f64::max);
    ensure(
        rel <= 0.02,
        format!(
            "small-amplitude curve off by {:.2}% of its maximum",
            100.0 * rel
        ),
    )?;
    let fine = grid(0.84, 0.88, 4001);
    let small_argmax = fine
        .iter()
        .map(|&w| {
            (
                w,
                small_amplitude_work(&p.with_omega(w).unwrap(), 10.0).unwrap(),
            )
        })
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap()
        .0;
    ensure(
        (small_argmax - 0.857295).abs() <= 1e-3,
        format!("small-amplitude argmax {small_argmax}"),
    )?;
    ensure(
        (weak.argmax - 0.857295).abs() <= 1e-3,
        format!("full argmax at small amplitude {}", weak.argmax),
    )?;
    Ok(format!(
        "argmax {:.6}, small-amplitude argmax {:.6} (full {:.6}), curve dev {:.2}%",
        strong.argmax,
        small_argmax,
        weak.argmax,
        100.0 * rel
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("reference point (two routes)", c1_reference_point),
        ("Fourier coefficients", c2_fourier),
        ("circular oracle", c3_circular),
        ("symmetry suite", c4_symmetries),
        ("series vs RK trajectories", c5_oracles),
        ("zero quasienergy", c6_zero_quasienergy),
        ("slope relation", c7_slope_relation),
        ("resonances", c8_resonances),
        ("adiabatic limit", c9_adiabatic),
        ("Fourier-Taylor series", c10_fourier_taylor),
        ("vanishing level splitting", c11_zero_splitting),
        ("work statistics", c12_work),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
