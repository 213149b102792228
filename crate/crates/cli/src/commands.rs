//! The four subcommands. Every value is produced by the same library call a
//! user would make for that row, so the output can be checked bit for bit.

use geronimus_core::asymptotics::{crossover, lambda_asymptotic};
use geronimus_core::geronimus::{eval_q, lambda_n, zeros_q, Branch};
use geronimus_core::laguerre::monic_laguerre;
use geronimus_core::second_kind::eval_second_kind;
use geronimus_core::{Complex64, ScaledComplex};
use log::{debug, info};
use serde_json::json;

use crate::checks::{self, CheckConfig, GRID_ALPHA, GRID_C, GRID_MASS};
use crate::config::{Family, RunConfig, Suite};
use crate::error::{CliError, CliResult};
use crate::output::{float, scaled_cells, scaled_columns, Cell, Table};

fn complex_cells(v: ScaledComplex) -> Vec<Cell> {
    let mut row = scaled_cells(v.re()).to_vec();
    row.extend(scaled_cells(v.im()));
    row
}

/// `n, z_re, z_im, value_re_*, value_im_*` for `Q` and `L`; `n, c, value_*` for `F`.
pub fn cmd_eval(cfg: &RunConfig) -> CliResult<Table> {
    let family = cfg.family.unwrap_or(Family::Q);
    if family == Family::F {
        let mut t = Table::new(["n".to_string(), "c".to_string()].into_iter().chain(scaled_columns("value")));
        for &n in &cfg.n {
            let v = eval_second_kind(n, cfg.alpha, cfg.c)?;
            let mut row = vec![Cell::Int(n as i64), float(cfg.c)];
            row.extend(scaled_cells(v));
            t.push(row);
        }
        return Ok(t);
    }
    let mut t = Table::new(
        ["n".to_string(), "z_re".to_string(), "z_im".to_string()]
            .into_iter()
            .chain(scaled_columns("value_re"))
            .chain(scaled_columns("value_im")),
    );
    let params = cfg.params();
    for &n in &cfg.n {
        for &p in &cfg.z {
            let z = Complex64::from(p);
            let v = match family {
                Family::Q => eval_q(n, params, z)?,
                _ => monic_laguerre(n, cfg.alpha, z)?,
            };
            let mut row = vec![Cell::Int(n as i64), float(p.re), float(p.im)];
            row.extend(complex_cells(v));
            t.push(row);
        }
    }
    Ok(t)
}

/// `n, lambda_exact, lambda_asymptotic, abs_diff`, with the crossover in the summary.
pub fn cmd_lambda(cfg: &RunConfig) -> CliResult<Table> {
    let params = cfg.params();
    let mut t = Table::new(["n", "lambda_exact", "lambda_asymptotic", "abs_diff"]);
    for &n in &cfg.n {
        let exact = lambda_n(n, params)?.value;
        let asym = lambda_asymptotic(n, params);
        t.push(vec![Cell::Int(n as i64), float(exact), float(asym), float((exact - asym).abs())]);
    }
    let cross = crossover(params);
    let branch = match params.branch() {
        Branch::NPositive => "N>0",
        Branch::NZero => "N=0",
    };
    t.summary.insert("branch".into(), json!(branch));
    t.summary.insert("crossover_D".into(), json!(cross.d));
    t.summary.insert("crossover_n_star".into(), json!(cross.n_star));
    Ok(t)
}

/// `n, k, zero, interlaces`; `interlaces` says whether the zeros of `Q^_{n-1}`
/// separate those of `Q^_n`.
pub fn cmd_zeros(cfg: &RunConfig) -> CliResult<Table> {
    let params = cfg.params();
    let mut t = Table::new(["n", "k", "zero", "interlaces"]);
    for &n in &cfg.n {
        let zs = zeros_q(n, params)?;
        let lower = zeros_q(n - 1, params)?;
        let interlaces = (0..lower.len()).all(|k| zs[k] < lower[k] && lower[k] < zs[k + 1]);
        for (k, &x) in zs.iter().enumerate() {
            t.push(vec![Cell::Int(n as i64), Cell::Int(k as i64 + 1), float(x), Cell::Bool(interlaces)]);
        }
    }
    Ok(t)
}

/// Smallest grid top for which the order fits have four points.
pub const MIN_CHECK_NMAX: usize = 800;

pub fn check_config(cfg: &RunConfig) -> CliResult<CheckConfig> {
    let [ea, ec, em] = cfg.explicit;
    let nmax = cfg.n.last().copied().unwrap_or(6400);
    let needs_fits = matches!(cfg.suite, Some(Suite::Asymptotics | Suite::All));
    if needs_fits && nmax < MIN_CHECK_NMAX {
        return Err(CliError::Invalid(format!(
            "--nmax must be at least {MIN_CHECK_NMAX} for the order fits, got {nmax}"
        )));
    }
    let pick = |given: bool, v: f64, grid: &[f64]| if given { vec![v] } else { grid.to_vec() };
    let mut out = CheckConfig {
        alphas: pick(ea, cfg.alpha, &GRID_ALPHA),
        cs: pick(ec, cfg.c, &GRID_C),
        masses: pick(em, cfg.mass, &GRID_MASS),
        asymptotic_nmax: nmax,
        seed: cfg.seed,
        oracle_tol: cfg.tol,
        ..CheckConfig::default()
    };
    if ea || ec {
        let a = if ea { cfg.alpha } else { 0.0 };
        let c = if ec { cfg.c } else { -1.0 };
        out.asymptotic_point = (a, c);
        out.mehler_heine_points = vec![(a, c)];
    }
    Ok(out)
}

/// One row per measured item; the summary lists failures.
pub fn cmd_check(cfg: &RunConfig) -> CliResult<(Table, bool)> {
    let suite = cfg.suite.unwrap_or(Suite::All);
    let ccfg = check_config(cfg)?;
    info!("check suite {suite:?} with {ccfg:?}");
    let items = checks::run_suite(suite, &ccfg)?;
    let mut t = Table::new([
        "suite",
        "criterion",
        "name",
        "measured",
        "tolerance",
        "claimed_order",
        "p_hat",
        "r2",
        "passed",
        "informational",
        "note",
    ]);
    let opt = |v: Option<f64>| Cell::Float(v);
    for it in &items {
        debug!("{} {} -> {:e} (tol {:e})", it.suite, it.name, it.measured, it.tolerance);
        t.push(vec![
            Cell::Text(it.suite.to_string()),
            Cell::Int(it.criterion as i64),
            Cell::Text(it.name.clone()),
            float(it.measured),
            float(it.tolerance),
            opt(it.fit.map(|f| f.claimed)),
            opt(it.fit.map(|f| f.p_hat)),
            opt(it.fit.map(|f| f.r2)),
            Cell::Bool(it.passed),
            Cell::Bool(it.informational),
            Cell::Text(it.note.clone().unwrap_or_default()),
        ]);
    }
    let failed: Vec<&str> = items
        .iter()
        .filter(|i| !i.passed && !i.informational)
        .map(|i| i.name.as_str())
        .collect();
    let passed = failed.is_empty();
    t.summary.insert("passed".into(), json!(passed));
    t.summary.insert("failed".into(), json!(failed));
    t.summary.insert("checks".into(), json!(ccfg));
    let informational_failures: Vec<&str> = items
        .iter()
        .filter(|i| !i.passed && i.informational)
        .map(|i| i.name.as_str())
        .collect();
    let notes: Vec<String> = items
        .iter()
        .filter_map(|i| i.note.as_ref().map(|n| format!("{}: {n}", i.name)))
        .collect();
    if !notes.is_empty() {
        t.summary.insert("notes".into(), json!(notes));
    }
    if !informational_failures.is_empty() {
        t.summary.insert("informational_out_of_tolerance".into(), json!(informational_failures));
    }
    Ok((t, passed))
}

/// Runs the parsed command and writes its output.
pub fn run(cfg: &RunConfig) -> CliResult<()> {
    use crate::config::CommandKind;
    match cfg.command {
        CommandKind::Eval => cmd_eval(cfg)?.emit(cfg),
        CommandKind::Lambda => cmd_lambda(cfg)?.emit(cfg),
        CommandKind::Zeros => cmd_zeros(cfg)?.emit(cfg),
        CommandKind::Check => {
            let (t, passed) = cmd_check(cfg)?;
            t.emit(cfg)?;
            if passed {
                Ok(())
            } else {
                let n = t.summary["failed"].as_array().map_or(0, Vec::len);
                Err(CliError::ChecksFailed(n))
            }
        }
    }
}
