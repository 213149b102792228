//! Classical monic Laguerre polynomials `L^_n = (-1)^n n! L_n^{(a)}`.
//!
//! `x L^_n = L^_{n+1} + beta_n L^_n + gamma_n L^_{n-1}` with
//! `beta_n = 2n + a + 1` and `gamma_n = n (n + a)`.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::numerics::bessel::bessel_j_reduced;
use crate::numerics::gamma::{factorial, gamma_shifted};
use crate::numerics::point::checked_point;
use crate::numerics::tridiag::symmetric_tridiagonal_eigenvalues;
use crate::numerics::{LogScaled, ScaledComplex};

const PI: f64 = core::f64::consts::PI;
// rescale the running pair once it passes 2^RESCALE
const RESCALE: i32 = 600;

/// Order of the relative remainder of the leading Perron and Fejér formulas.
pub const LEADING_REMAINDER_ORDER: f64 = 0.5;

/// `(beta_n, gamma_n)`.
pub fn laguerre_recurrence_coeffs(n: usize, alpha: f64) -> (f64, f64) {
    let n = n as f64;
    (2.0 * n + alpha + 1.0, n * (n + alpha))
}

pub(crate) fn check_alpha(op: &'static str, alpha: f64) -> Result<()> {
    if !(alpha > -1.0) || !alpha.is_finite() {
        return Err(Error::domain(op, "alpha must be finite and > -1"));
    }
    Ok(())
}

/// `L^_0(z) .. L^_n(z)` for one `alpha` and `z`.
#[derive(Debug, Clone)]
pub struct LaguerreSequence {
    pub alpha: f64,
    pub z: Complex64,
    values: Vec<ScaledComplex>,
}

impl LaguerreSequence {
    pub fn values(&self) -> &[ScaledComplex] {
        &self.values
    }

    pub fn get(&self, k: usize) -> Option<ScaledComplex> {
        self.values.get(k).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn last(&self) -> ScaledComplex {
        *self.values.last().expect("sequence holds at least L^_0")
    }

    /// Largest `|z L^_k - L^_{k+1} - beta_k L^_k - gamma_k L^_{k-1}|`, relative
    /// to the largest of the four terms.
    pub fn max_recurrence_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for k in 1..self.values.len().saturating_sub(1) {
            let (b, g) = laguerre_recurrence_coeffs(k, self.alpha);
            let prev = self.values[k - 1];
            let cur = self.values[k];
            let next = self.values[k + 1];
            let t1 = cur * self.z;
            let t3 = cur * b;
            let t4 = prev * g;
            let res = t1 - next - t3 - t4;
            let scale = [t1, next, t3, t4]
                .iter()
                .map(|t| t.logmag())
                .fold(f64::NEG_INFINITY, f64::max);
            if res.is_zero() {
                continue;
            }
            worst = worst.max((res.logmag() - scale).exp());
        }
        worst
    }
}

/// Forward recurrence on a plain complex pair with a shared binary exponent.
struct Forward {
    alpha: f64,
    z: Complex64,
    k: usize,
    prev: Complex64,
    cur: Complex64,
    exp2: i64,
}

impl Forward {
    fn new(alpha: f64, z: Complex64) -> Self {
        Self {
            alpha,
            z,
            k: 0,
            prev: Complex64::new(0.0, 0.0),
            cur: Complex64::new(1.0, 0.0),
            exp2: 0,
        }
    }

    fn step(&mut self) {
        let (b, g) = laguerre_recurrence_coeffs(self.k, self.alpha);
        let next = (self.z - b) * self.cur - self.prev * g;
        self.prev = self.cur;
        self.cur = next;
        self.k += 1;
        let big = self.cur.re.abs().max(self.cur.im.abs());
        if big > libm::ldexp(1.0, RESCALE) {
            let s = libm::ldexp(1.0, -RESCALE);
            self.prev *= s;
            self.cur *= s;
            self.exp2 += RESCALE as i64;
        }
    }

    fn current(&self) -> ScaledComplex {
        ScaledComplex::from_parts(self.cur, self.exp2)
    }

    fn previous(&self) -> ScaledComplex {
        ScaledComplex::from_parts(self.prev, self.exp2)
    }
}

/// All of `L^_0(z) .. L^_n(z)` by forward recurrence.
pub fn eval_monic_laguerre(n: usize, alpha: f64, z: Complex64) -> Result<LaguerreSequence> {
    check_alpha("eval_monic_laguerre", alpha)?;
    let mut values = Vec::with_capacity(n + 1);
    let mut f = Forward::new(alpha, z);
    values.push(f.current());
    for _ in 0..n {
        f.step();
        values.push(f.current());
    }
    Ok(LaguerreSequence { alpha, z, values })
}

/// `(L^_{n-1}(z), L^_n(z))` without storing the sequence; `L^_{-1} = 0`.
pub fn monic_laguerre_pair(n: usize, alpha: f64, z: Complex64) -> Result<(ScaledComplex, ScaledComplex)> {
    check_alpha("monic_laguerre_pair", alpha)?;
    let mut f = Forward::new(alpha, z);
    for _ in 0..n {
        f.step();
    }
    Ok((f.previous(), f.current()))
}

/// `L^_n(z)`.
pub fn monic_laguerre(n: usize, alpha: f64, z: Complex64) -> Result<ScaledComplex> {
    monic_laguerre_pair(n, alpha, z).map(|p| p.1)
}

/// `L^_n(x)` for real `x`.
pub fn monic_laguerre_real(n: usize, alpha: f64, x: f64) -> Result<LogScaled> {
    monic_laguerre(n, alpha, Complex64::new(x, 0.0)).map(|v| v.re())
}

/// `L^_n(x)` in plain floating point, for small degrees and moderate `x`.
pub fn monic_laguerre_f64(n: usize, alpha: f64, x: f64) -> f64 {
    let mut prev = 0.0;
    let mut cur = 1.0;
    for k in 0..n {
        let (b, g) = laguerre_recurrence_coeffs(k, alpha);
        let next = (x - b) * cur - g * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `j`-th derivative of `L^_n^{(alpha)}` at `z`: `n!/(n-j)! L^_{n-j}^{(alpha+j)}(z)`.
pub fn monic_laguerre_derivative(n: usize, alpha: f64, j: usize, z: Complex64) -> Result<ScaledComplex> {
    if j > n {
        return Ok(ScaledComplex::ZERO);
    }
    let falling = factorial(n as u64) / factorial((n - j) as u64);
    Ok(monic_laguerre(n - j, alpha + j as f64, z)? * falling)
}

/// Multiplies a monic value by `(-1)^n / n!`, giving the standard normalisation.
pub fn monic_to_standard(n: usize, value: ScaledComplex) -> ScaledComplex {
    let v = value / factorial(n as u64);
    if n % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Inverse of [`monic_to_standard`].
pub fn standard_to_monic(n: usize, value: ScaledComplex) -> ScaledComplex {
    let v = value * factorial(n as u64);
    if n % 2 == 1 {
        -v
    } else {
        v
    }
}

/// `||L^_n||^2 = Gamma(n + alpha + 1) Gamma(n + 1)`.
pub fn monic_norm_sq(n: usize, alpha: f64) -> Result<LogScaled> {
    check_alpha("monic_norm_sq", alpha)?;
    Ok(gamma_shifted(alpha, n as u64)? * factorial(n as u64))
}

/// `pi_n(z) = L^_{n+1}(z) / L^_n(z)` for `z` off `[0, inf)`.
pub fn ratio_pi(n: usize, alpha: f64, z: Complex64) -> Result<Complex64> {
    checked_point("ratio_pi", z)?;
    let (lo, hi) = monic_laguerre_pair(n + 1, alpha, z)?;
    if lo.is_zero() {
        return Err(Error::pole("ratio_pi", "L^_n(z) vanished"));
    }
    Ok(hi.ratio(lo))
}

/// Leading large-`n` approximation of `L^_n(z)` off `[0, inf)`:
/// `(-1)^n n! e^{z/2} (-z)^{-a/2-1/4} n^{a/2-1/4} e^{2 sqrt(-nz)} / (2 sqrt(pi))`.
pub fn perron_monic(n: usize, alpha: f64, z: Complex64) -> Result<ScaledComplex> {
    let p = checked_point("perron_monic", z)?;
    check_alpha("perron_monic", alpha)?;
    let nf = n as f64;
    let w = p.rotated();
    let log = z / 2.0 + (w * nf).sqrt() * 2.0 - w.ln() * (alpha / 2.0 + 0.25)
        + Complex64::new((alpha / 2.0 - 0.25) * nf.ln() - (2.0 * PI.sqrt()).ln(), 0.0);
    let v = ScaledComplex::exp_of(log) * factorial(n as u64);
    Ok(if n % 2 == 1 { -v } else { v })
}

/// Large-`n` form of `pi_{n-1}(z)`: `-n - sqrt(-zn) + (2z - 2a + 1)/4`.
pub fn perron_ratio(n: usize, alpha: f64, z: Complex64) -> Result<Complex64> {
    let p = checked_point("perron_ratio", z)?;
    let nf = n as f64;
    Ok(-nf - (p.rotated() * nf).sqrt() + (z * 2.0 - 2.0 * alpha + 1.0) / 4.0)
}

/// `theta_n^a(x) = 2 sqrt(n x) - (a/2 + 1/4) pi`.
pub fn fejer_phase(n: usize, alpha: f64, x: f64) -> f64 {
    2.0 * (n as f64 * x).sqrt() - (alpha / 2.0 + 0.25) * PI
}

/// `(-1)^n n! n^{a/2-1/4} e^{x/2} x^{-a/2-1/4} cos(theta_n^a(x)) / sqrt(pi)`.
pub fn fejer_monic(n: usize, alpha: f64, x: f64) -> Result<LogScaled> {
    check_alpha("fejer_monic", alpha)?;
    if !(x > 0.0) {
        return Err(Error::domain("fejer_monic", "x must be positive"));
    }
    let nf = n as f64;
    let log = (alpha / 2.0 - 0.25) * nf.ln() + x / 2.0 - (alpha / 2.0 + 0.25) * x.ln() - 0.5 * PI.ln();
    let v = LogScaled::exp_of(log) * factorial(n as u64) * fejer_phase(n, alpha, x).cos();
    Ok(if n % 2 == 1 { -v } else { v })
}

/// A scaled finite-`n` quantity together with its Mehler-Heine limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MehlerHeine {
    pub scaled: Complex64,
    pub limit: Complex64,
}

impl MehlerHeine {
    pub fn error(&self) -> f64 {
        (self.scaled - self.limit).norm()
    }
}

/// `L_n^{(a)}(z/n) / n^a` and its limit `z^{-a/2} J_a(2 sqrt z)`.
pub fn mehler_heine_laguerre(n: usize, alpha: f64, z: Complex64) -> Result<MehlerHeine> {
    check_alpha("mehler_heine_laguerre", alpha)?;
    if n == 0 {
        return Err(Error::domain("mehler_heine_laguerre", "n must be positive"));
    }
    let nf = n as f64;
    let monic = monic_laguerre(n, alpha, z / nf)?;
    let scaled = monic_to_standard(n, monic) / LogScaled::exp_of(alpha * nf.ln());
    Ok(MehlerHeine {
        scaled: scaled.to_complex(),
        limit: bessel_j_reduced(alpha, z)?,
    })
}

/// Gauss rule for the weight `x^a e^{-x}` on `[0, inf)`.
#[derive(Debug, Clone)]
pub struct GaussRule {
    pub alpha: f64,
    pub nodes: Vec<f64>,
    /// natural logs of the (positive) weights
    pub log_weights: Vec<f64>,
}

/// `m`-point Gauss-Laguerre rule: nodes from the Jacobi matrix eigenvalues,
/// polished by Newton steps; weights `h_m / (x L^_m'(x)^2)`. The form without
/// `L^_{m-1}` stays accurate at the smallest nodes, where `L^_{m-1}` nearly vanishes.
pub fn gauss_laguerre(m: usize, alpha: f64) -> Result<GaussRule> {
    check_alpha("gauss_laguerre", alpha)?;
    if m == 0 {
        return Err(Error::domain("gauss_laguerre", "need at least one node"));
    }
    let diag: Vec<f64> = (0..m).map(|k| laguerre_recurrence_coeffs(k, alpha).0).collect();
    let off: Vec<f64> = (1..m).map(|k| laguerre_recurrence_coeffs(k, alpha).1.sqrt()).collect();
    let mut nodes = symmetric_tridiagonal_eigenvalues(&diag, &off)?;
    let h = monic_norm_sq(m, alpha)?;
    let mut log_weights = Vec::with_capacity(m);
    for x in nodes.iter_mut() {
        let mut state = value_and_derivative(m, alpha, *x);
        for _ in 0..8 {
            let (_, p, dp, _) = state;
            let dx = p / dp;
            if !dx.is_finite() {
                break;
            }
            *x -= dx;
            state = value_and_derivative(m, alpha, *x);
            if dx.abs() <= 4.0 * f64::EPSILON * x.abs() {
                break;
            }
        }
        let (_, _, dp, exp2) = state;
        let d = ScaledComplex::from_parts(Complex64::new(dp, 0.0), exp2);
        let den = d * d * *x;
        log_weights.push((ScaledComplex::from(h) / den).logmag());
    }
    Ok(GaussRule {
        alpha,
        nodes,
        log_weights,
    })
}

// (L^_{m-1}(x), L^_m(x), L^_m'(x), shared binary exponent)
fn value_and_derivative(m: usize, alpha: f64, x: f64) -> (f64, f64, f64, i64) {
    let (mut p0, mut p1) = (0.0, 1.0);
    let (mut d0, mut d1) = (0.0, 0.0);
    let mut exp2 = 0i64;
    let limit = libm::ldexp(1.0, RESCALE);
    let down = libm::ldexp(1.0, -RESCALE);
    for k in 0..m {
        let (b, g) = laguerre_recurrence_coeffs(k, alpha);
        let p2 = (x - b) * p1 - g * p0;
        let d2 = p1 + (x - b) * d1 - g * d0;
        p0 = p1;
        p1 = p2;
        d0 = d1;
        d1 = d2;
        if p1.abs().max(d1.abs()) > limit {
            p0 *= down;
            p1 *= down;
            d0 *= down;
            d1 *= down;
            exp2 += RESCALE as i64;
        }
    }
    (p0, p1, d1, exp2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn coefficients() {
        assert_eq!(laguerre_recurrence_coeffs(5, 0.0), (11.0, 25.0));
        assert_eq!(laguerre_recurrence_coeffs(0, 0.7), (1.7, 0.0));
        assert_eq!(laguerre_recurrence_coeffs(3, 2.0), (9.0, 15.0));
    }

    #[test]
    fn small_values() {
        let s = eval_monic_laguerre(2, 0.0, c(0.0)).unwrap();
        assert_eq!(s.get(0).unwrap().to_complex(), c(1.0));
        assert_eq!(s.get(1).unwrap().to_complex(), c(-1.0));
        assert_eq!(s.get(2).unwrap().to_complex(), c(2.0));
        assert_eq!(monic_laguerre(1, 0.0, c(3.0)).unwrap().to_complex(), c(2.0));
        assert_eq!(monic_laguerre(0, 0.4, c(-9.0)).unwrap().to_complex(), c(1.0));
    }

    #[test]
    fn normalisation() {
        let v = ScaledComplex::from_complex(c(-1.5));
        assert_eq!(monic_to_standard(1, v).to_complex(), c(1.5));
        assert_eq!(monic_to_standard(0, v), v);
        let x = monic_laguerre(5, 0.0, c(1.0)).unwrap();
        let back = standard_to_monic(5, monic_to_standard(5, x));
        assert_eq!(back.to_complex(), x.to_complex());
        assert_eq!(monic_norm_sq(0, 0.0).unwrap().to_f64(), 1.0);
        assert!((monic_norm_sq(2, 1.0).unwrap().to_f64() - 12.0).abs() < 1e-13);
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(ratio_pi(0, 0.3, c(-2.0)).unwrap(), c(-3.3));
        assert!((ratio_pi(1, 0.0, c(-1.0)).unwrap() - c(-3.5)).norm() < 1e-15);
        assert!(ratio_pi(3, 0.0, c(1.0)).is_err());
    }

    #[test]
    fn fejer_phase_values() {
        let x = PI * PI / 4.0;
        assert!((fejer_phase(1, 0.0, x) - 0.75 * PI).abs() < 1e-15);
        assert_eq!(fejer_phase(7, -0.5, 2.0), 2.0 * 14f64.sqrt());
    }

    #[test]
    fn mehler_heine_limits() {
        let m = mehler_heine_laguerre(10, 0.0, c(0.0)).unwrap();
        assert!((m.limit - c(1.0)).norm() < 1e-16);
        let m = mehler_heine_laguerre(10, 2.0, c(0.0)).unwrap();
        assert!((m.limit - c(0.5)).norm() < 1e-16);
    }

    #[test]
    fn derivative_identity() {
        // d/dz L^_n^a = n L^_{n-1}^{a+1}; check with a centred difference
        let z = Complex64::new(-1.3, 0.4);
        let h = 1e-5;
        let num = (monic_laguerre(6, 0.5, z + h).unwrap().to_complex() - monic_laguerre(6, 0.5, z - h).unwrap().to_complex())
            / (2.0 * h);
        let d = monic_laguerre_derivative(6, 0.5, 1, z).unwrap().to_complex();
        assert!((num - d).norm() < 1e-7 * d.norm());
    }

    #[test]
    fn gauss_rule_integrates_moments() {
        let rule = gauss_laguerre(20, 0.5).unwrap();
        for k in 0..10 {
            let s: f64 = rule
                .nodes
                .iter()
                .zip(&rule.log_weights)
                .map(|(x, lw)| lw.exp() * x.powi(k))
                .sum();
            let exact = crate::numerics::gamma(k as f64 + 1.5).unwrap();
            assert!((s - exact).abs() < 1e-13 * exact, "{k}");
        }
    }
}
