use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::fmt_num;
use crate::CliError;

/// A parameter given as a single value, a list `a,b,c`, or a grid `min:max:steps`.
#[derive(Debug, Clone, PartialEq)]
pub enum ParamSpec {
    Values(Vec<f64>),
    Range { min: f64, max: f64, steps: usize },
}

impl ParamSpec {
    pub fn values(&self) -> Vec<f64> {
        match *self {
            ParamSpec::Values(ref v) => v.clone(),
            ParamSpec::Range { min, max, steps } => (0..steps)
                .map(|i| min + (max - min) * i as f64 / (steps - 1) as f64)
                .collect(),
        }
    }

    pub fn single(&self) -> Option<f64> {
        match self {
            ParamSpec::Values(v) if v.len() == 1 => Some(v[0]),
            _ => None,
        }
    }
}

impl FromStr for ParamSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("not a finite number: {t:?}"))
        };
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [v] => Ok(ParamSpec::Values(
                v.split(',').map(num).collect::<Result<_, _>>()?,
            )),
            [a, b, n] => {
                let (min, max) = (num(a)?, num(b)?);
                let steps: usize = n
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad step count {n:?}"))?;
                if steps < 2 {
                    return Err(format!("a range needs at least 2 steps, got {steps}"));
                }
                if min >= max {
                    return Err(format!("empty range {min}:{max}"));
                }
                Ok(ParamSpec::Range { min, max, steps })
            }
            _ => Err(format!(
                "expected VALUE, A,B,... or MIN:MAX:STEPS, got {s:?}"
            )),
        }
    }
}

impl fmt::Display for ParamSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamSpec::Values(v) => {
                let s: Vec<String> = v.iter().map(|x| fmt_num(*x)).collect();
                write!(f, "{}", s.join(","))
            }
            ParamSpec::Range { min, max, steps } => {
                write!(f, "{}:{}:{steps}", fmt_num(*min), fmt_num(*max))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LimitKind {
    Circular,
    Adiabatic,
    Ft,
    ZeroField,
    NearLinear,
    NearCircular,
}

#[derive(Debug, Parser)]
#[command(
    name = "rabi",
    version,
    about = "Floquet data for the elliptically driven Rabi problem"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Level splitting ω₀
    #[arg(long, global = true)]
    pub omega0: Option<ParamSpec>,
    /// Drive amplitude along z
    #[arg(long = "F", global = true)]
    pub f: Option<ParamSpec>,
    /// Drive amplitude along y
    #[arg(long = "G", global = true)]
    pub g: Option<ParamSpec>,
    /// Driving frequency ω
    #[arg(long, global = true)]
    pub omega: Option<ParamSpec>,
    /// Inverse temperature in units of the driving frequency, β = ħω/k_BT
    #[arg(long, global = true)]
    pub beta: Option<f64>,
    /// Series truncation order (quarter-period series, FT series, or resonance table)
    #[arg(long, global = true)]
    pub order: Option<usize>,
    /// Fourier harmonics kept in reconstructed periodic solutions
    #[arg(long, global = true)]
    pub harmonics: Option<usize>,
    /// Runge–Kutta tolerance
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,
    /// Output file (default: stdout)
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for scans (default: all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Fill unset parameters with the values used for the corresponding figure
    #[arg(long, global = true)]
    pub seeded_defaults: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Quasienergy, its geometric/dynamical split, r and α over a parameter grid
    Quasienergy {
        /// Also list the branches nω ± 𝓔 for |n| ≤ N
        #[arg(long)]
        branches: Option<u32>,
    },
    /// S(τ) over one period from the series propagator and from Runge–Kutta
    Trajectory {
        /// Start on the periodic solution (cos α, sin α, 0)
        #[arg(long)]
        periodic: bool,
        /// Initial vector x,y,z (default 1,0,0)
        #[arg(long, value_delimiter = ',', num_args = 3, allow_hyphen_values = true)]
        s0: Option<Vec<f64>>,
        #[arg(long, default_value_t = 201)]
        samples: usize,
    },
    /// Resonance frequencies: root of det Ξ against the stored series
    Resonance {
        /// Resonance indices
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        n: Vec<usize>,
    },
    /// Points of vanishing quasienergy (G at each ω, or ω at each G)
    ZeroCurve,
    /// Mean work of the two-point measurement over an ω grid
    Work,
    /// Limiting cases
    Limits {
        #[arg(value_enum)]
        kind: LimitKind,
        #[arg(long, default_value_t = 201)]
        samples: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Quasienergy { .. } => "quasienergy",
            Command::Trajectory { .. } => "trajectory",
            Command::Resonance { .. } => "resonance",
            Command::ZeroCurve => "zero-curve",
            Command::Work => "work",
            Command::Limits { .. } => "limits",
        }
    }
}

/// Fully resolved parameters of one run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub omega0: Option<ParamSpec>,
    pub f: Option<ParamSpec>,
    pub g: Option<ParamSpec>,
    pub omega: Option<ParamSpec>,
    pub beta: Option<f64>,
    pub order: Option<usize>,
    pub harmonics: Option<usize>,
    pub tol: f64,
    pub format: Format,
    pub threads: Option<usize>,
}

struct Defaults {
    omega0: &'static str,
    f: &'static str,
    g: &'static str,
    omega: &'static str,
    beta: Option<f64>,
}

fn figure_defaults(c: &Command) -> Defaults {
    let d = |omega0, f, g, omega| Defaults {
        omega0,
        f,
        g,
        omega,
        beta: None,
    };
    match c {
        Command::Quasienergy { .. } | Command::Trajectory { .. } => d("1", "1", "0.5", "1"),
        Command::Resonance { .. } => d("1", "0.1", "0.05", "1"),
        Command::ZeroCurve => d("1", "1", "0.5", "0.75:0.99:25"),
        Command::Work => Defaults {
            beta: Some(10.0),
            ..d("1", "0.5", "0.1", "0.8:1.1:61")
        },
        Command::Limits { kind, .. } => match kind {
            LimitKind::Circular => d("1", "0.5", "0.5", "0.5:1.5:11"),
            LimitKind::Adiabatic => d("1", "3", "2", "0.05:0.5:10"),
            LimitKind::Ft => d("0.3", "0.05", "0.05", "1"),
            LimitKind::ZeroField => d("0", "0", "1", "1"),
            LimitKind::NearLinear => d("0", "0.25", "1", "1"),
            LimitKind::NearCircular => d("0", "1", "0.75", "1"),
        },
    }
}

fn check_spec(name: &str, s: &Option<ParamSpec>, positive: bool) -> Result<(), CliError> {
    let Some(s) = s else { return Ok(()) };
    for v in s.values() {
        if v < 0.0 || (positive && v == 0.0) {
            let need = if positive { "positive" } else { "non-negative" };
            return Err(CliError::Validation(format!(
                "--{name} must be {need}, got {v}"
            )));
        }
    }
    Ok(())
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let Cli { command, common: c } = cli;
        let mut cfg = RunConfig {
            omega0: c.omega0,
            f: c.f,
            g: c.g,
            omega: c.omega,
            beta: c.beta,
            order: c.order,
            harmonics: c.harmonics,
            tol: c.tol.unwrap_or(rabi_numint::DEFAULT_TOL),
            format: c.format,
            threads: c.threads,
            command,
        };
        if c.seeded_defaults {
            let d = figure_defaults(&cfg.command);
            let parse = |s: &str| s.parse::<ParamSpec>().expect("valid default");
            cfg.omega0.get_or_insert_with(|| parse(d.omega0));
            cfg.f.get_or_insert_with(|| parse(d.f));
            cfg.g.get_or_insert_with(|| parse(d.g));
            cfg.omega.get_or_insert_with(|| parse(d.omega));
            if cfg.beta.is_none() {
                cfg.beta = d.beta;
            }
        }
        check_spec("omega0", &cfg.omega0, false)?;
        check_spec("F", &cfg.f, false)?;
        check_spec("G", &cfg.g, false)?;
        check_spec("omega", &cfg.omega, true)?;
        if let Some(b) = cfg.beta {
            if !(b.is_finite() && b >= 0.0) {
                return Err(CliError::Validation(format!(
                    "--beta must be non-negative, got {b}"
                )));
            }
        }
        if !(cfg.tol.is_finite() && cfg.tol > 0.0 && cfg.tol < 1.0) {
            return Err(CliError::Validation(format!(
                "--tol must lie in (0, 1), got {}",
                cfg.tol
            )));
        }
        if cfg.threads == Some(0) {
            return Err(CliError::Validation("--threads must be at least 1".into()));
        }
        Ok(cfg)
    }

    fn require<'a>(name: &str, s: &'a Option<ParamSpec>) -> Result<&'a ParamSpec, CliError> {
        s.as_ref().ok_or_else(|| {
            CliError::Validation(format!("missing --{name} (or pass --seeded-defaults)"))
        })
    }

    pub fn omega0(&self) -> Result<&ParamSpec, CliError> {
        Self::require("omega0", &self.omega0)
    }
    pub fn f(&self) -> Result<&ParamSpec, CliError> {
        Self::require("F", &self.f)
    }
    pub fn g(&self) -> Result<&ParamSpec, CliError> {
        Self::require("G", &self.g)
    }
    pub fn omega(&self) -> Result<&ParamSpec, CliError> {
        Self::require("omega", &self.omega)
    }

    pub fn beta(&self) -> Result<f64, CliError> {
        self.beta.ok_or_else(|| {
            CliError::Validation("missing --beta (or pass --seeded-defaults)".into())
        })
    }

    /// `# key=value` header entries describing this run.
    pub fn header(&self) -> Vec<(String, String)> {
        let opt = |s: &Option<ParamSpec>| s.as_ref().map_or("-".to_string(), |s| s.to_string());
        let mut h = vec![("command".to_string(), self.command.name().to_string())];
        match &self.command {
            Command::Quasienergy { branches } => h.push((
                "branches".into(),
                branches.map_or("-".into(), |b| b.to_string()),
            )),
            Command::Trajectory {
                periodic,
                s0,
                samples,
            } => {
                h.push(("periodic".into(), periodic.to_string()));
                h.push((
                    "s0".into(),
                    s0.as_ref().map_or("1,0,0".into(), |v| {
                        v.iter().map(|x| fmt_num(*x)).collect::<Vec<_>>().join(",")
                    }),
                ));
                h.push(("samples".into(), samples.to_string()));
            }
            Command::Resonance { n } => h.push((
                "n".into(),
                n.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            )),
            Command::ZeroCurve | Command::Work => {}
            Command::Limits { kind, samples } => {
                h.push((
                    "kind".into(),
                    kind.to_possible_value()
                        .expect("no skipped variants")
                        .get_name()
                        .to_string(),
                ));
                h.push(("samples".into(), samples.to_string()));
            }
        }
        h.extend([
            ("omega0".to_string(), opt(&self.omega0)),
            ("F".to_string(), opt(&self.f)),
            ("G".to_string(), opt(&self.g)),
            ("omega".to_string(), opt(&self.omega)),
            ("beta".to_string(), self.beta.map_or("-".into(), fmt_num)),
            (
                "order".to_string(),
                self.order.map_or("auto".into(), |o| o.to_string()),
            ),
            (
                "harmonics".to_string(),
                self.harmonics.map_or("auto".into(), |o| o.to_string()),
            ),
            ("tol".to_string(), fmt_num(self.tol)),
        ]);
        h
    }
}
