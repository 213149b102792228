use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// Least-squares fit of `log(error) = log C - p log n`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderFit {
    pub n_grid: Vec<f64>,
    pub errors: Vec<f64>,
    pub p_hat: f64,
    /// coefficient of determination of the log-log fit
    pub r2: f64,
    /// `C` in `error ~ C n^{-p}`
    pub coefficient: f64,
    /// false when the errors do not decrease strictly along the grid
    pub monotone: bool,
}

impl OrderFit {
    /// `|p_hat - claimed| <= band` and `r2 > r2_min`.
    pub fn within(&self, claimed: f64, band: f64, r2_min: f64) -> bool {
        (self.p_hat - claimed).abs() <= band && self.r2 > r2_min
    }

    pub fn reliable(&self) -> bool {
        self.monotone
    }
}

/// `n0, 2 n0, .., 2^k n0`.
pub fn dyadic_grid(n0: usize, k: u32) -> Vec<usize> {
    (0..=k).map(|j| n0 << j).collect()
}

pub fn estimate_order(n_grid: &[f64], errors: &[f64]) -> Result<OrderFit> {
    if n_grid.len() != errors.len() {
        return Err(Error::domain("estimate_order", "grid and errors differ in length"));
    }
    if n_grid.len() < 4 {
        return Err(Error::degenerate("estimate_order", "need at least 4 points"));
    }
    if errors.iter().any(|e| !(*e > 0.0) || !e.is_finite()) {
        return Err(Error::degenerate("estimate_order", "errors must be positive and finite"));
    }
    if n_grid.iter().any(|n| !(*n > 0.0)) {
        return Err(Error::domain("estimate_order", "grid must be positive"));
    }
    let k = n_grid.len() as f64;
    let xs: Vec<f64> = n_grid.iter().map(|n| n.ln()).collect();
    let ys: Vec<f64> = errors.iter().map(|e| e.ln()).collect();
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::degenerate("estimate_order", "grid has a single abscissa"));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| {
            let d = y - (intercept + slope * x);
            d * d
        })
        .sum();
    let r2 = if syy > 0.0 { (1.0 - ss_res / syy).clamp(0.0, 1.0) } else { 0.0 };
    let monotone = errors.windows(2).all(|w| w[1] < w[0]);
    Ok(OrderFit {
        n_grid: n_grid.to_vec(),
        errors: errors.to_vec(),
        p_hat: -slope,
        r2,
        coefficient: intercept.exp(),
        monotone,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Vec<f64> {
        dyadic_grid(100, 6).into_iter().map(|n| n as f64).collect()
    }

    #[test]
    fn exact_power_law() {
        let g = grid();
        let e: Vec<f64> = g.iter().map(|n| 3.0 / n.sqrt()).collect();
        let f = estimate_order(&g, &e).unwrap();
        assert!((f.p_hat - 0.5).abs() < 1e-12);
        assert!((f.r2 - 1.0).abs() < 1e-12);
        assert!((f.coefficient - 3.0).abs() < 1e-10);
        assert!(f.monotone);
    }

    #[test]
    fn perturbed_power_law() {
        let g = grid();
        let e: Vec<f64> = g.iter().map(|n| (1.0 + 0.1 * n.sin()) / n).collect();
        let f = estimate_order(&g, &e).unwrap();
        assert!(f.p_hat > 0.9 && f.p_hat < 1.1);
    }

    #[test]
    fn constant_is_flagged() {
        let g = grid();
        let e = alloc::vec![0.3; g.len()];
        let f = estimate_order(&g, &e).unwrap();
        assert!(f.p_hat.abs() < 1e-12);
        assert!(!f.reliable());
    }

    #[test]
    fn degenerate_inputs() {
        assert!(estimate_order(&[1.0, 2.0, 4.0], &[1.0, 0.5, 0.25]).is_err());
        assert!(estimate_order(&[1.0, 2.0, 4.0, 8.0], &[1.0, 0.0, 0.25, 0.1]).is_err());
    }
}
