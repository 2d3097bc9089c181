use std::f64::consts::PI;

use rabi_core::{
    fold_unit, monodromy_params_from_half, quasienergy_branches, DriveParams, SpinVector,
};
use rabi_floquet::{
    periodic_solution, quasienergy_numeric, quasienergy_with_order, zero_curve_G_estimate,
    zero_curve_omega_estimate, zero_curve_point, zero_quasienergy_G, zero_quasienergy_omega,
    QuarterPropagator,
};
use rabi_limits as limits;
use rabi_numint::{integrate_classical_at, monodromy_numeric_tol};
use rabi_resonance::{resonance_frequency, resonance_series_eval, ResonanceTable};
use rabi_work::{small_amplitude_work, work_scan};
use rayon::prelude::*;

use crate::config::{Command, LimitKind, ParamSpec, RunConfig};
use crate::output::Table;
use crate::CliError;

const FT_DEFAULT_ORDER: usize = 4;

fn par_map<T: Sync, U: Send>(
    items: &[T],
    f: impl Fn(&T) -> Result<U, CliError> + Sync + Send,
) -> Result<Vec<U>, CliError> {
    items.par_iter().map(f).collect()
}

fn single(name: &str, s: &ParamSpec) -> Result<f64, CliError> {
    s.single()
        .ok_or_else(|| CliError::Validation(format!("--{name} must be a single value here")))
}

fn drive(omega0: f64, f: f64, g: f64, omega: f64) -> Result<DriveParams, CliError> {
    DriveParams::new(omega0, f, g, omega).map_err(|e| CliError::Validation(e.to_string()))
}

/// Row-major product `ω₀ × F × G × ω`.
fn grid(cfg: &RunConfig) -> Result<Vec<DriveParams>, CliError> {
    let mut out = Vec::new();
    for w0 in cfg.omega0()?.values() {
        for f in cfg.f()?.values() {
            for g in cfg.g()?.values() {
                for w in cfg.omega()?.values() {
                    out.push(drive(w0, f, g, w)?);
                }
            }
        }
    }
    Ok(out)
}

pub fn run_command(cfg: &RunConfig) -> Result<Table, CliError> {
    match &cfg.command {
        Command::Quasienergy { branches } => quasienergy(cfg, *branches),
        Command::Trajectory {
            periodic,
            s0,
            samples,
        } => trajectory(cfg, *periodic, s0.as_deref(), *samples),
        Command::Resonance { n } => resonance(cfg, n),
        Command::ZeroCurve => zero_curve(cfg),
        Command::Work => work(cfg),
        Command::Limits { kind, samples } => limits_cmd(cfg, *kind, *samples),
    }
}

fn quasienergy(cfg: &RunConfig, branches: Option<u32>) -> Result<Table, CliError> {
    let mut cols = vec![
        "omega0", "F", "G", "omega", "nu", "f", "g", "r", "alpha", "eps_qu", "E", "E_g", "E_d",
    ];
    if branches.is_some() {
        cols.extend(["branch", "E_branch"]);
    }
    let mut t = Table::new(&cols);
    let points = grid(cfg)?;
    let results = par_map(&points, |p| {
        Ok(quasienergy_with_order(&p.dimensionless(), cfg.order)?)
    })?;
    for (p, q) in points.iter().zip(results) {
        let d = p.dimensionless();
        let w = p.omega;
        let base = vec![
            p.omega0,
            p.F,
            p.G,
            w,
            d.nu,
            d.f,
            d.g,
            q.r,
            q.alpha.unwrap_or(f64::NAN),
            q.eps_qu,
            w * q.eps_qu,
            w * q.split.geometric,
            w * q.split.dynamical,
        ];
        match branches {
            None => t.push(base),
            Some(n) => {
                let n = n as i32;
                for (i, e) in quasienergy_branches(w * q.eps_qu, w, -n, n)
                    .into_iter()
                    .enumerate()
                {
                    let mut row = base.clone();
                    row.extend([i as f64, e]);
                    t.push(row);
                }
            }
        }
    }
    Ok(t)
}

fn max_diff(a: SpinVector, b: SpinVector) -> f64 {
    (a - b).to_array().iter().fold(0.0, |m, v| m.max(v.abs()))
}

fn trajectory(
    cfg: &RunConfig,
    periodic: bool,
    s0: Option<&[f64]>,
    samples: usize,
) -> Result<Table, CliError> {
    if samples < 2 {
        return Err(CliError::Validation("--samples must be at least 2".into()));
    }
    let p = drive(
        single("omega0", cfg.omega0()?)?,
        single("F", cfg.f()?)?,
        single("G", cfg.g()?)?,
        single("omega", cfg.omega()?)?,
    )?;
    let d = p.dimensionless();
    let prop = QuarterPropagator::with_order(&d, cfg.order)?;
    let fourier = if periodic {
        let mut s = periodic_solution(&d)?;
        if let Some(h) = cfg.harmonics {
            let k = h.min(s.harmonics) + 1;
            s.x.truncate(k);
            s.y.truncate(k);
            s.z.truncate(k);
            s.harmonics = k - 1;
        }
        Some(s)
    } else {
        None
    };
    let start = match (&fourier, s0) {
        (Some(s), _) => SpinVector::new(s.alpha.cos(), s.alpha.sin(), 0.0),
        (None, Some(v)) => SpinVector::new(v[0], v[1], v[2]),
        (None, None) => SpinVector::new(1.0, 0.0, 0.0),
    };
    if start.norm() == 0.0 {
        return Err(CliError::Validation("--s0 must be nonzero".into()));
    }
    let taus: Vec<f64> = (0..samples)
        .map(|i| 2.0 * PI * i as f64 / (samples - 1) as f64)
        .collect();
    let rk = integrate_classical_at(&d, start, &taus, cfg.tol)?;
    let mut cols = vec!["tau", "x", "y", "z", "x_rk", "y_rk", "z_rk", "diff"];
    if fourier.is_some() {
        cols.extend(["x_fourier", "y_fourier", "z_fourier"]);
    }
    let mut t = Table::new(&cols);
    let (mut worst, mut drift) = (0.0f64, 0.0f64);
    for (&tau, &v) in taus.iter().zip(&rk.states) {
        let s = prop.rotation(tau).apply(start);
        let diff = max_diff(s, v);
        worst = worst.max(diff);
        drift = drift.max((v.norm() - start.norm()).abs());
        let mut row = vec![tau, s.x, s.y, s.z, v.x, v.y, v.z, diff];
        if let Some(f) = &fourier {
            let e = f.eval(tau);
            row.extend([e.x, e.y, e.z]);
        }
        t.push(row);
    }
    t.meta("alpha", fourier.as_ref().map_or(f64::NAN, |s| s.alpha));
    t.meta("max_diff", worst);
    t.meta("norm_drift", drift);
    Ok(t)
}

fn default_series_order(n: usize) -> Result<usize, CliError> {
    Ok(match n {
        1..=3 => ResonanceTable::stored(n)?.complete_order(),
        _ => 2,
    })
}

fn resonance(cfg: &RunConfig, ns: &[usize]) -> Result<Table, CliError> {
    if let Some(&bad) = ns.iter().find(|&&n| n == 0) {
        return Err(CliError::Validation(format!(
            "resonance index must be >= 1, got {bad}"
        )));
    }
    let mut jobs = Vec::new();
    for &n in ns {
        for w0 in cfg.omega0()?.values() {
            if w0 <= 0.0 {
                return Err(CliError::Validation(
                    "--omega0 must be positive here".into(),
                ));
            }
            for f in cfg.f()?.values() {
                for g in cfg.g()?.values() {
                    jobs.push((n, w0, f, g));
                }
            }
        }
    }
    let rows = par_map(&jobs, |&(n, w0, f, g)| {
        let order = cfg.order.map_or_else(|| default_series_order(n), Ok)?;
        let series = resonance_series_eval(n, f, g, w0, order)?;
        let root = resonance_frequency(w0, f, g, n)?;
        Ok(vec![
            n as f64,
            w0,
            f,
            g,
            root,
            series,
            order as f64,
            root - series,
        ])
    })?;
    let mut t = Table::new(&[
        "n",
        "omega0",
        "F",
        "G",
        "omega_res",
        "series",
        "series_order",
        "difference",
    ]);
    rows.into_iter().for_each(|r| t.push(r));
    Ok(t)
}

fn zero_curve(cfg: &RunConfig) -> Result<Table, CliError> {
    let w0 = single("omega0", cfg.omega0()?)?;
    let f = single("F", cfg.f()?)?;
    let g_scan = cfg.g.as_ref().is_some_and(|g| g.values().len() > 1);
    if g_scan {
        let gs = cfg.g()?.values();
        let rows = par_map(&gs, |&g| {
            let w = zero_quasienergy_omega(w0, f, g)?;
            let z = zero_curve_point(w0, f, g, w)?;
            Ok(vec![
                g,
                w,
                zero_curve_omega_estimate(w0, f, g),
                z.alpha,
                z.beta,
                z.eps_d,
            ])
        })?;
        let mut t = Table::new(&["G", "omega", "omega_series", "alpha", "beta", "eps_d"]);
        rows.into_iter().for_each(|r| t.push(r));
        Ok(t)
    } else {
        let ws = cfg.omega()?.values();
        let rows = par_map(&ws, |&w| {
            let g = zero_quasienergy_G(w0, f, w)?;
            let z = zero_curve_point(w0, f, g, w)?;
            Ok(vec![
                w,
                g,
                zero_curve_G_estimate(w0, f, w),
                z.alpha,
                z.beta,
                z.eps_d,
            ])
        })?;
        let mut t = Table::new(&["omega", "G", "G_series", "alpha", "beta", "eps_d"]);
        rows.into_iter().for_each(|r| t.push(r));
        Ok(t)
    }
}

fn work(cfg: &RunConfig) -> Result<Table, CliError> {
    let beta = cfg.beta()?;
    let w0 = single("omega0", cfg.omega0()?)?;
    if w0 <= 0.0 {
        return Err(CliError::Validation(
            "--omega0 must be positive for work".into(),
        ));
    }
    let p = drive(w0, single("F", cfg.f()?)?, single("G", cfg.g()?)?, 1.0)?;
    let ws = cfg.omega()?.values();
    let scan = work_scan(&p, &ws, beta)?;
    let mut t = Table::new(&[
        "omega",
        "omega_ratio",
        "work",
        "work_small",
        "p11",
        "p12",
        "p21",
        "p22",
    ]);
    for ((&w, &wk), s) in ws.iter().zip(&scan.work).zip(&scan.stats) {
        let small = small_amplitude_work(&p.with_omega(w)?, beta).unwrap_or(f64::NAN);
        t.push(vec![w, w / w0, wk, small, s.p11, s.p12, s.p21, s.p22]);
    }
    t.meta("argmax", scan.argmax);
    t.meta("argmax_ratio", scan.argmax / w0);
    t.meta("max", scan.max);
    Ok(t)
}

/// Periodic solution by RK, starting at `±(cos α, sin α, 0)` with the sign closest to
/// `hint`, or at `hint` itself when the monodromy is the identity.
fn rk_periodic(
    p: &DriveParams,
    hint: SpinVector,
    ts: &[f64],
    tol: f64,
) -> Result<Vec<SpinVector>, CliError> {
    let d = p.dimensionless();
    let half = monodromy_numeric_tol(&d, PI, tol)?;
    let full = rabi_core::Rotation3::t1() * half;
    let mut s0 = if (full * full).max_abs_diff(&rabi_core::Rotation3::identity()) < 1e-8 {
        // every solution is periodic
        hint.normalized()
    } else {
        let a = monodromy_params_from_half(&half).alpha;
        SpinVector::new(a.cos(), a.sin(), 0.0)
    };
    if s0.dot(hint) < 0.0 {
        s0 = -s0;
    }
    let taus: Vec<f64> = ts.iter().map(|t| p.omega * t).collect();
    Ok(integrate_classical_at(&d, s0, &taus, tol)?.states)
}

fn single_point(cfg: &RunConfig) -> Result<DriveParams, CliError> {
    drive(
        single("omega0", cfg.omega0()?)?,
        single("F", cfg.f()?)?,
        single("G", cfg.g()?)?,
        single("omega", cfg.omega()?)?,
    )
}

fn limits_cmd(cfg: &RunConfig, kind: LimitKind, samples: usize) -> Result<Table, CliError> {
    match kind {
        LimitKind::Circular => {
            let pts = grid(cfg)?;
            if let Some(p) = pts.iter().find(|p| p.F != p.G) {
                return Err(CliError::Validation(format!(
                    "circular limit needs F = G, got {} and {}",
                    p.F, p.G
                )));
            }
            let rows = par_map(&pts, |p| {
                let d = p.dimensionless();
                let closed = limits::circular_quasienergy(&d)?;
                let pipe = quasienergy_with_order(&d, cfg.order)?.eps_qu;
                Ok(vec![
                    p.omega0,
                    p.F,
                    p.omega,
                    limits::rabi_frequency(&d),
                    closed,
                    pipe,
                    p.omega * closed,
                ])
            })?;
            let mut t = Table::new(&[
                "omega0",
                "F",
                "omega",
                "Omega",
                "eps_closed",
                "eps_pipeline",
                "E_closed",
            ]);
            rows.into_iter().for_each(|r| t.push(r));
            Ok(t)
        }
        LimitKind::Adiabatic => {
            let pts = grid(cfg)?;
            let first = pts
                .first()
                .ok_or_else(|| CliError::Validation("empty grid".into()))?;
            if pts
                .iter()
                .any(|p| (p.omega0, p.F, p.G) != (first.omega0, first.F, first.G))
            {
                return Err(CliError::Validation(
                    "adiabatic limit scans omega only".into(),
                ));
            }
            let a = limits::adiabatic_quasienergy(first)?;
            let rows = par_map(&pts, |p| {
                let w = p.omega;
                let approx = a.e0 + w * a.e1 + w * w * a.e2;
                let e = w * quasienergy_numeric(&p.dimensionless())?;
                let n = (approx / w).round() as i32;
                let branch = quasienergy_branches(e, w, n - 1, n + 1)
                    .into_iter()
                    .min_by(|x, y| (x - approx).abs().total_cmp(&(y - approx).abs()))
                    .expect("nonempty");
                Ok(vec![w, approx, e, branch])
            })?;
            let mut t = Table::new(&["omega", "E_adiabatic", "E_numeric", "E_branch"]);
            rows.into_iter().for_each(|r| t.push(r));
            t.meta("E0", a.e0);
            t.meta("E1", a.e1);
            t.meta("E2", a.e2);
            Ok(t)
        }
        LimitKind::Ft => {
            let n = cfg.order.unwrap_or(FT_DEFAULT_ORDER);
            let pts = grid(cfg)?;
            let rows = par_map(&pts, |p| {
                let s = limits::ft_build(p, n)?;
                let e = limits::ft_quasienergy(&s)?;
                let pipe = rabi_floquet::quasienergy(&p.dimensionless())?;
                Ok(vec![
                    p.omega0,
                    p.F,
                    p.G,
                    p.omega,
                    e.total,
                    e.geometric,
                    e.dynamical,
                    limits::ft_quasienergy_series(p),
                    p.omega * fold_unit(e.total / p.omega),
                    p.omega * pipe.eps_qu,
                    s.tail,
                ])
            })?;
            let mut t = Table::new(&[
                "omega0",
                "F",
                "G",
                "omega",
                "E_ft",
                "E_ft_g",
                "E_ft_d",
                "E_series",
                "E_ft_folded",
                "E_pipeline",
                "tail",
            ]);
            rows.into_iter().for_each(|r| t.push(r));
            Ok(t)
        }
        LimitKind::ZeroField | LimitKind::NearLinear | LimitKind::NearCircular => {
            if samples < 2 {
                return Err(CliError::Validation("--samples must be at least 2".into()));
            }
            let p = single_point(cfg)?;
            if p.omega0 != 0.0 {
                return Err(CliError::Validation(
                    "this limit requires --omega0 0".into(),
                ));
            }
            if kind == LimitKind::ZeroField && p.F != 0.0 {
                return Err(CliError::Validation(
                    "zero-field limit requires --F 0".into(),
                ));
            }
            let ts: Vec<f64> = (0..samples)
                .map(|i| 2.0 * PI / p.omega * i as f64 / (samples - 1) as f64)
                .collect();
            let approx: Vec<SpinVector> = ts
                .iter()
                .map(|&t| match kind {
                    LimitKind::ZeroField => {
                        Ok(limits::zero_field_solution(p.G / p.omega, p.omega * t))
                    }
                    LimitKind::NearLinear => Ok(limits::near_linear_solution(&p, t)),
                    _ => Ok(limits::near_circular_solution(&p, p.F - p.G, t)?.normalized()),
                })
                .collect::<Result<_, CliError>>()?;
            let exact = rk_periodic(&p, approx[0], &ts, cfg.tol)?;
            let mut t = Table::new(&["t", "x", "y", "z", "x_rk", "y_rk", "z_rk", "diff"]);
            let mut worst = 0.0f64;
            for ((&time, a), e) in ts.iter().zip(&approx).zip(&exact) {
                let diff = max_diff(*a, *e);
                worst = worst.max(diff);
                t.push(vec![time, a.x, a.y, a.z, e.x, e.y, e.z, diff]);
            }
            t.meta("max_diff", worst);
            Ok(t)
        }
    }
}
