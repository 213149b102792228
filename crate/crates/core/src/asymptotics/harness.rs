//! Error sequences of each large-`n` formula against exact evaluation, for
//! feeding into [`estimate_order`](super::estimate_order).

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use super::formulas::{inner_envelope, inner_q, lambda_asymptotic, relative_q, strong_outer_q};
use crate::error::{Error, Result};
use crate::geronimus::{GeronimusParams, LambdaTable, PerturbedRecurrence};
use crate::laguerre::{laguerre_recurrence_coeffs, monic_laguerre_pair, perron_ratio};
use crate::second_kind::{asymp_second_kind, ratio_r_asymptotic, ratios_r, CF_TOL};

fn grid_max(grid: &[usize]) -> Result<usize> {
    match grid.iter().copied().max() {
        Some(n) if n >= 1 && !grid.contains(&0) => Ok(n),
        _ => Err(Error::domain("asymptotics harness", "grid must be non-empty with n >= 1")),
    }
}

/// `|Lambda_n - lambda_asymptotic(n)|`.
pub fn lambda_errors(params: GeronimusParams, grid: &[usize]) -> Result<Vec<f64>> {
    let table = LambdaTable::new(params, grid_max(grid)?)?;
    Ok(grid
        .iter()
        .map(|&n| (table.lambda(n) - lambda_asymptotic(n, params)).abs())
        .collect())
}

/// `|Q^_n(z) / strong_outer_q(n, z) - 1|`.
pub fn strong_outer_errors(params: GeronimusParams, z: Complex64, grid: &[usize]) -> Result<Vec<f64>> {
    let table = LambdaTable::new(params, grid_max(grid)?)?;
    grid.iter()
        .map(|&n| {
            let exact = table.eval_q(n, z)?;
            Ok((exact.ratio(strong_outer_q(n, params, z)?) - 1.0).norm())
        })
        .collect()
}

/// `|Q^_n(z)/L^_n(z) - relative_q(n, z)|`.
pub fn relative_errors(params: GeronimusParams, z: Complex64, grid: &[usize]) -> Result<Vec<f64>> {
    let table = LambdaTable::new(params, grid_max(grid)?)?;
    grid.iter()
        .map(|&n| {
            let (lo, hi) = monic_laguerre_pair(n, params.alpha(), z)?;
            let exact = Complex64::new(1.0, 0.0) + lo.ratio(hi) * table.lambda(n);
            Ok((exact - relative_q(n, params, z)?).norm())
        })
        .collect()
}

/// `sup |Q^_n(x) - inner_q(n, x)| / envelope(n, x)` over `samples` points of one
/// period `[x0, x0 + 2 pi sqrt(x0/n)]` of the phase.
pub fn inner_errors(params: GeronimusParams, x0: f64, grid: &[usize], samples: usize) -> Result<Vec<f64>> {
    if !(x0 > 0.0) || samples < 2 {
        return Err(Error::domain("inner_errors", "need x0 > 0 and at least 2 samples"));
    }
    let table = LambdaTable::new(params, grid_max(grid)?)?;
    grid.iter()
        .map(|&n| {
            let period = 2.0 * PI * (x0 / n as f64).sqrt();
            let mut worst = 0.0f64;
            for k in 0..samples {
                let x = x0 + period * k as f64 / (samples - 1) as f64;
                let exact = table.eval_q(n, Complex64::new(x, 0.0))?.re();
                let diff = exact - inner_q(n, params, x)?;
                let rel = (diff.abs() / inner_envelope(n, params.alpha(), x)?).to_f64();
                worst = worst.max(rel);
            }
            Ok(worst)
        })
        .collect()
}

/// Relative error of the order-`order` large-`n` form of `F^_n(c)`.
pub fn second_kind_errors(alpha: f64, c: f64, order: usize, grid: &[usize]) -> Result<Vec<f64>> {
    let params = GeronimusParams::new(alpha, c, 0.0)?;
    let table = LambdaTable::new(params, grid_max(grid)?)?;
    let z = Complex64::new(c, 0.0);
    grid.iter()
        .map(|&n| {
            let approx = asymp_second_kind(n, alpha, z, order)?;
            let exact = table.f_hat(n);
            Ok((approx.ratio(exact.into()) - 1.0).norm())
        })
        .collect()
}

/// `|pi_{n-1}(z) - (-n - sqrt(-zn) + (2z - 2a + 1)/4)|`.
pub fn ratio_pi_errors(alpha: f64, z: Complex64, grid: &[usize]) -> Result<Vec<f64>> {
    grid_max(grid)?;
    grid.iter()
        .map(|&n| {
            let (lo, hi) = monic_laguerre_pair(n, alpha, z)?;
            Ok((hi.ratio(lo) - perron_ratio(n, alpha, z)?).norm())
        })
        .collect()
}

/// `|r_{n-1}(z) - (-n + sqrt(-zn) + (2z - 2a + 1)/4)|`.
pub fn ratio_r_errors(alpha: f64, z: Complex64, grid: &[usize]) -> Result<Vec<f64>> {
    let r = ratios_r(grid_max(grid)?, alpha, z, CF_TOL)?;
    Ok(grid
        .iter()
        .map(|&n| (r[n - 1] - ratio_r_asymptotic(n, alpha, z)).norm())
        .collect())
}

/// Signed remainders `beta~_n/beta_n - (1 - 1/(2n))` and
/// `gamma~_n/gamma_{n-1} - (1 + 1/n)`; both should behave like `C n^{-3/2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceRemainders {
    pub beta: Vec<f64>,
    pub gamma: Vec<f64>,
}

pub fn recurrence_remainders(params: GeronimusParams, grid: &[usize]) -> Result<RecurrenceRemainders> {
    let nmax = grid_max(grid)?;
    let table = LambdaTable::new(params, nmax + 1)?;
    let rec = PerturbedRecurrence::build(nmax, &table)?;
    let a = params.alpha();
    let mut beta = Vec::with_capacity(grid.len());
    let mut gamma = Vec::with_capacity(grid.len());
    for &n in grid {
        let nf = n as f64;
        let (b, _) = laguerre_recurrence_coeffs(n, a);
        let (_, g_prev) = laguerre_recurrence_coeffs(n - 1, a);
        beta.push(rec.beta_t[n] / b - (1.0 - 1.0 / (2.0 * nf)));
        let g = if n == 1 { f64::NAN } else { rec.gamma_t[n] / g_prev - (1.0 + 1.0 / nf) };
        gamma.push(g);
    }
    Ok(RecurrenceRemainders { beta, gamma })
}
