//! Command-line flags and the validated run configuration.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use geronimus_core::{Complex64, GeronimusParams};
use serde::Serialize;

use crate::error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "lgq", version, about = "Tables and checks for Laguerre-Geronimus polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate Q^_n, L^_n or F^_n.
    Eval(Flags),
    /// Tabulate Lambda_n against its large-n form.
    Lambda(Flags),
    /// Run the acceptance checks.
    Check(Flags),
    /// Zeros of Q^_n.
    Zeros(Flags),
}

impl Command {
    pub fn kind(&self) -> CommandKind {
        match self {
            Command::Eval(_) => CommandKind::Eval,
            Command::Lambda(_) => CommandKind::Lambda,
            Command::Check(_) => CommandKind::Check,
            Command::Zeros(_) => CommandKind::Zeros,
        }
    }

    pub fn flags(&self) -> &Flags {
        match self {
            Command::Eval(f) | Command::Lambda(f) | Command::Check(f) | Command::Zeros(f) => f,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Eval,
    Lambda,
    Check,
    Zeros,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Family {
    #[value(name = "Q", alias = "q")]
    Q,
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "F", alias = "f")]
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Gram,
    Oracle,
    Recurrence,
    Hypergeom,
    Ode,
    Asymptotics,
    Stability,
    All,
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    Complex64::from_str(s.trim()).map_err(|_| format!("cannot parse '{s}' as a complex number (e.g. -2, 1.5-0.5i)"))
}

#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// Laguerre parameter, > -1
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Shift of the Geronimus transformation, < 0
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<f64>,
    /// Point mass at c, >= 0
    #[arg(long = "N", allow_hyphen_values = true)]
    pub mass: Option<f64>,
    /// Degrees, comma separated (overrides --nmin/--nmax)
    #[arg(long, value_delimiter = ',')]
    pub n: Vec<usize>,
    #[arg(long)]
    pub nmin: Option<usize>,
    /// Largest degree; for `check`, the top of the asymptotic n-grid
    #[arg(long)]
    pub nmax: Option<usize>,
    /// Complex evaluation points, comma separated
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_complex)]
    pub z: Vec<Complex64>,
    /// Real evaluation points, comma separated
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub x: Vec<f64>,
    /// Tolerance of the quadrature oracle, in (0, 0.1]
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file (default: standard output)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Seed for the randomised checks
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum)]
    pub suite: Option<Suite>,
    #[arg(long, value_enum)]
    pub family: Option<Family>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Point {
    pub re: f64,
    pub im: f64,
}

impl From<Point> for Complex64 {
    fn from(p: Point) -> Self {
        Complex64::new(p.re, p.im)
    }
}

/// Validated configuration, echoed into every JSON output.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: CommandKind,
    pub family: Option<Family>,
    pub alpha: f64,
    pub c: f64,
    #[serde(rename = "N")]
    pub mass: f64,
    /// sorted, without duplicates
    pub n: Vec<usize>,
    /// sorted by (re, im), without duplicates
    pub z: Vec<Point>,
    pub tol: f64,
    pub format: Format,
    pub seed: u64,
    pub suite: Option<Suite>,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    /// which of alpha, c, N were given explicitly
    #[serde(skip)]
    pub explicit: [bool; 3],
}

pub const DEFAULT_ALPHA: f64 = 0.0;
pub const DEFAULT_C: f64 = -1.0;
pub const DEFAULT_MASS: f64 = 1.0;
pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_CHECK_NMAX: usize = 6400;

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

impl RunConfig {
    pub fn from_flags(kind: CommandKind, f: &Flags) -> CliResult<Self> {
        let alpha = f.alpha.unwrap_or(DEFAULT_ALPHA);
        let c = f.c.unwrap_or(DEFAULT_C);
        let mass = f.mass.unwrap_or(DEFAULT_MASS);
        GeronimusParams::new(alpha, c, mass)?;

        let tol = f.tol.unwrap_or(DEFAULT_TOL);
        if !(tol > 0.0 && tol <= 0.1) {
            return Err(invalid(format!("--tol must lie in (0, 0.1], got {tol}")));
        }

        let n = if !f.n.is_empty() {
            if f.nmin.is_some() {
                return Err(invalid("give either --n or --nmin/--nmax, not both"));
            }
            let mut v = f.n.clone();
            v.sort_unstable();
            v.dedup();
            v
        } else {
            let (lo, hi) = match kind {
                CommandKind::Eval => (0, 10),
                CommandKind::Lambda => (1, 20),
                CommandKind::Zeros => (1, 10),
                CommandKind::Check => (100, DEFAULT_CHECK_NMAX),
            };
            let lo = f.nmin.unwrap_or(lo);
            let hi = f.nmax.unwrap_or(hi);
            if lo > hi {
                return Err(invalid(format!("--nmin {lo} exceeds --nmax {hi}")));
            }
            if kind == CommandKind::Check {
                vec![hi]
            } else {
                (lo..=hi).collect()
            }
        };
        if matches!(kind, CommandKind::Lambda | CommandKind::Zeros) && n.first() == Some(&0) {
            return Err(invalid("degrees must be >= 1 for this command"));
        }

        let mut z: Vec<Point> = f
            .z
            .iter()
            .map(|w| Point { re: w.re, im: w.im })
            .chain(f.x.iter().map(|&x| Point { re: x, im: 0.0 }))
            .collect();
        if z.iter().any(|p| !p.re.is_finite() || !p.im.is_finite()) {
            return Err(invalid("evaluation points must be finite"));
        }
        z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        z.dedup();

        let family = match kind {
            CommandKind::Eval => Some(f.family.unwrap_or(Family::Q)),
            _ => None,
        };
        if kind == CommandKind::Eval {
            match family {
                Some(Family::F) if !z.is_empty() => {
                    return Err(invalid("family F is evaluated at c; drop --z/--x"));
                }
                Some(Family::Q | Family::L) if z.is_empty() => {
                    return Err(invalid("family Q and L need a non-empty --z or --x grid"));
                }
                _ => {}
            }
        }

        let format = f.format.unwrap_or(match kind {
            CommandKind::Check => Format::Json,
            _ => Format::Csv,
        });

        Ok(Self {
            command: kind,
            family,
            alpha,
            c,
            mass,
            n,
            z,
            tol,
            format,
            seed: f.seed,
            suite: match kind {
                CommandKind::Check => Some(f.suite.unwrap_or(Suite::All)),
                _ => None,
            },
            out: f.out.clone(),
            explicit: [f.alpha.is_some(), f.c.is_some(), f.mass.is_some()],
        })
    }

    pub fn params(&self) -> GeronimusParams {
        GeronimusParams::new(self.alpha, self.c, self.mass).expect("validated in from_flags")
    }
}
