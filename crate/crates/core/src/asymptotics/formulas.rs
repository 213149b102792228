use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::geronimus::{Branch, GeronimusParams, LambdaTable};
use crate::numerics::bessel::bessel_j_reduced;
use crate::numerics::gamma::factorial;
use crate::numerics::point::checked_point;
use crate::numerics::{LogScaled, ScaledComplex};

/// `n + s sqrt(-c n) + (2a - 2c - 1)/4` with `s = +1` for `N > 0`, `-1` for `N = 0`.
pub fn lambda_asymptotic(n: usize, params: GeronimusParams) -> f64 {
    lambda_asymptotic_branch(n, params, params.branch())
}

pub fn lambda_asymptotic_branch(n: usize, params: GeronimusParams, branch: Branch) -> f64 {
    let nf = n as f64;
    let (a, c) = (params.alpha(), params.c());
    nf + branch.sign() * (-c * nf).sqrt() + (2.0 * a - 2.0 * c - 1.0) / 4.0
}

/// Where the mass term takes over the denominator of `Lambda_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossoverInfo {
    /// `D = e^c (-c)^{-a} / (2 pi)`
    pub d: f64,
    /// smallest `n >= 1` with `N D e^{4 sqrt(-c n)} > 1`; `None` when `N = 0`
    pub n_star: Option<usize>,
}

pub fn crossover(params: GeronimusParams) -> CrossoverInfo {
    let (a, c, mass) = (params.alpha(), params.c(), params.mass());
    let d = (c - a * (-c).ln()).exp() / (2.0 * PI);
    let n_star = if mass == 0.0 {
        None
    } else {
        let nd = mass * d;
        if nd >= 1.0 {
            Some(1)
        } else {
            let t = (1.0 / nd).ln() / (4.0 * (-c).sqrt());
            Some(((t * t).floor() as usize + 1).max(1))
        }
    };
    CrossoverInfo { d, n_star }
}

fn sqrt_bracket(z: Complex64, c: f64, branch: Branch) -> Complex64 {
    (-z).sqrt() - branch.sign() * (-c).sqrt()
}

/// `(-1)^n n!/(2 sqrt pi) e^{z/2 + 2 sqrt(-nz)} (-z)^{-a/2-1/4} n^{a/2-3/4} (sqrt(-z) -+ sqrt(-c))`.
pub fn strong_outer_q(n: usize, params: GeronimusParams, z: Complex64) -> Result<ScaledComplex> {
    strong_outer_q_branch(n, params, z, params.branch())
}

pub fn strong_outer_q_branch(n: usize, params: GeronimusParams, z: Complex64, branch: Branch) -> Result<ScaledComplex> {
    let p = checked_point("strong_outer_Q", z)?;
    let a = params.alpha();
    let nf = n as f64;
    let w = p.rotated();
    let log = z / 2.0 + (w * nf).sqrt() * 2.0 - w.ln() * (a / 2.0 + 0.25)
        + Complex64::new((a / 2.0 - 0.75) * nf.ln() - (2.0 * PI.sqrt()).ln(), 0.0);
    let v = ScaledComplex::exp_of(log) * factorial(n as u64) * sqrt_bracket(z, params.c(), branch);
    Ok(if n % 2 == 1 { -v } else { v })
}

/// Two-term form of `Q^_n(z) / L^_n(z)`:
/// `(sqrt(-z) -+ sqrt(-c))/sqrt(n) - (sqrt(-z) -+ sqrt(-c))^2/(2n)`.
pub fn relative_q(n: usize, params: GeronimusParams, z: Complex64) -> Result<Complex64> {
    relative_q_branch(n, params, z, params.branch())
}

pub fn relative_q_branch(n: usize, params: GeronimusParams, z: Complex64, branch: Branch) -> Result<Complex64> {
    checked_point("relative_Q", z)?;
    if n == 0 {
        return Err(Error::domain("relative_Q", "n must be >= 1"));
    }
    let nf = n as f64;
    let s = sqrt_bracket(z, params.c(), branch);
    Ok(s / nf.sqrt() - s * s / (2.0 * nf))
}

/// `n! n^{a/2-3/4} e^{x/2} x^{-a/2-1/4} / sqrt(pi)`, the scale of the oscillating bracket.
pub fn inner_envelope(n: usize, alpha: f64, x: f64) -> Result<LogScaled> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("inner_Q", "x must be positive and finite"));
    }
    let nf = n as f64;
    let log = (alpha / 2.0 - 0.75) * nf.ln() + x / 2.0 - (alpha / 2.0 + 0.25) * x.ln() - 0.5 * PI.ln();
    Ok(LogScaled::exp_of(log) * factorial(n as u64))
}

/// `(-1)^{n+1} envelope [sqrt(x) sin theta +- sqrt(-c) cos theta]` with
/// `theta = 2 sqrt(n x) - (a/2 + 1/4) pi`.
pub fn inner_q(n: usize, params: GeronimusParams, x: f64) -> Result<LogScaled> {
    inner_q_branch(n, params, x, params.branch())
}

pub fn inner_q_branch(n: usize, params: GeronimusParams, x: f64, branch: Branch) -> Result<LogScaled> {
    let env = inner_envelope(n, params.alpha(), x)?;
    let theta = 2.0 * (n as f64 * x).sqrt() - (params.alpha() / 2.0 + 0.25) * PI;
    let bracket = x.sqrt() * theta.sin() + branch.sign() * (-params.c()).sqrt() * theta.cos();
    let v = env * bracket;
    Ok(if n % 2 == 0 { -v } else { v })
}

/// `(-1)^n Q^_n(z/n) / (n! n^{a-1/2})` and its limit `-+ sqrt(-c) z^{-a/2} J_a(2 sqrt z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MehlerHeineQ {
    pub scaled: Complex64,
    pub limit: Complex64,
}

impl MehlerHeineQ {
    pub fn error(&self) -> f64 {
        (self.scaled - self.limit).norm()
    }
}

pub fn mehler_heine_q(n: usize, params: GeronimusParams, z: Complex64) -> Result<MehlerHeineQ> {
    let table = LambdaTable::new(params, n)?;
    mehler_heine_q_with(&table, n, z)
}

pub(crate) fn mehler_heine_q_with(table: &LambdaTable, n: usize, z: Complex64) -> Result<MehlerHeineQ> {
    if n == 0 {
        return Err(Error::domain("mehler_heine_Q", "n must be >= 1"));
    }
    let params = table.params();
    let a = params.alpha();
    let nf = n as f64;
    let q = table.eval_q(n, z / nf)?;
    let mut s = q / factorial(n as u64) / LogScaled::exp_of((a - 0.5) * nf.ln());
    if n % 2 == 1 {
        s = -s;
    }
    let limit = bessel_j_reduced(a, z)? * (-params.branch().sign() * (-params.c()).sqrt());
    Ok(MehlerHeineQ {
        scaled: s.to_complex(),
        limit,
    })
}

/// `(1 - 1/(2n) -+ sqrt(-c)/(4 n^{3/2}), 1 + 1/n -+ sqrt(-c)/(2 n^{3/2}))`, the
/// large-`n` profiles of `beta~_n/beta_n` and `gamma~_n/gamma_{n-1}`.
pub fn recurrence_coeff_asymptotic(n: usize, params: GeronimusParams) -> (f64, f64) {
    recurrence_coeff_asymptotic_branch(n, params, params.branch())
}

pub fn recurrence_coeff_asymptotic_branch(n: usize, params: GeronimusParams, branch: Branch) -> (f64, f64) {
    let nf = n as f64;
    let s = branch.sign() * (-params.c()).sqrt() / nf.powf(1.5);
    (1.0 - 1.0 / (2.0 * nf) - s / 4.0, 1.0 + 1.0 / nf - s / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laguerre::perron_monic;

    fn p(a: f64, c: f64, m: f64) -> GeronimusParams {
        GeronimusParams::new(a, c, m).unwrap()
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_asymptotic(100, p(0.0, -1.0, 1.0)), 110.25);
        assert_eq!(lambda_asymptotic(100, p(0.0, -1.0, 0.0)), 90.25);
    }

    #[test]
    fn crossover_values() {
        let c = crossover(p(0.0, -1.0, 0.0));
        assert!(c.n_star.is_none());
        assert!((c.d - 0.058549831524319168).abs() < 1e-15);
        let t = crossover(p(0.0, -1.0, 1e-12));
        let n = t.n_star.unwrap();
        let f = |n: usize| 1e-12 * t.d * (4.0 * (n as f64).sqrt()).exp();
        assert!(f(n) > 1.0 && f(n - 1) <= 1.0);
        assert_eq!(crossover(p(0.0, -1.0, 1e3)).n_star, Some(1));
    }

    #[test]
    fn branches_differ_only_in_sign() {
        let (q1, q0) = (p(0.5, -2.0, 1.0), p(0.5, -2.0, 0.0));
        let z = Complex64::new(-3.0, 1.0);
        for b in [Branch::NPositive, Branch::NZero] {
            assert_eq!(
                relative_q_branch(50, q1, z, b).unwrap(),
                relative_q_branch(50, q0, z, b).unwrap()
            );
            assert_eq!(lambda_asymptotic_branch(50, q1, b), lambda_asymptotic_branch(50, q0, b));
        }
        let up = relative_q_branch(50, q1, z, Branch::NPositive).unwrap();
        let lo = relative_q_branch(50, q1, z, Branch::NZero).unwrap();
        let s = (-z).sqrt();
        let r = 2f64.sqrt();
        let expect = |t: Complex64| t / 50f64.sqrt() - t * t / 100.0;
        assert!((up - expect(s - r)).norm() < 1e-15);
        assert!((lo - expect(s + r)).norm() < 1e-15);
    }

    #[test]
    fn outer_over_perron_is_relative_leading_term() {
        let params = p(0.0, -1.0, 1.0);
        let z = Complex64::new(-4.0, 0.5);
        for &n in &[100usize, 1600] {
            let ratio = strong_outer_q(n, params, z).unwrap().ratio(perron_monic(n, 0.0, z).unwrap());
            let lead = ((-z).sqrt() - 1.0) / (n as f64).sqrt();
            assert!((ratio - lead).norm() < 1e-12 * lead.norm());
        }
    }

    #[test]
    fn mehler_heine_limits_at_zero() {
        let n = 8192;
        let up = mehler_heine_q(n, p(0.0, -1.0, 1.0), Complex64::new(0.0, 0.0)).unwrap();
        assert!((up.limit - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        let lo = mehler_heine_q(n, p(0.0, -1.0, 0.0), Complex64::new(0.0, 0.0)).unwrap();
        assert!((lo.limit - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(up.error() < 0.02 && lo.error() < 0.02, "{} {}", up.error(), lo.error());
    }

    #[test]
    fn recurrence_profile() {
        let (b, g) = recurrence_coeff_asymptotic(100, p(0.0, -4.0, 1.0));
        assert!((b - (1.0 - 0.005 - 2.0 / 4000.0)).abs() < 1e-15);
        assert!((g - (1.0 + 0.01 - 2.0 / 2000.0)).abs() < 1e-15);
    }
}
