//! Laguerre functions of the second kind
//! `F^_n(z) = int_0^inf L^_n(t) t^a e^{-t} / (t - z) dt`.
//!
//! `F^_n` is the minimal solution of the Laguerre recurrence off `[0, inf)`,
//! so forward recurrence destroys it. Ratios `r_n = F^_{n+1}/F^_n` come from
//! the backward continued fraction `r_{k-1} = gamma_k / (z - beta_k - r_k)`,
//! and `F^_n(c) = F^_0(c) prod_{k<n} r_k(c)` with `F^_0(c) = Gamma(a+1) U(1, 1-a, -c)`.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::laguerre::{check_alpha, laguerre_recurrence_coeffs, monic_laguerre_f64};
use crate::numerics::bessel::{bessel_k, bessel_k_complex};
use crate::numerics::gamma::{factorial, gamma, gamma_shifted};
use crate::numerics::kummer::kummer_u;
use crate::numerics::point::checked_point;
use crate::numerics::quadrature::{exp_sinh, QuadOptions};
use crate::numerics::{LogScaled, ScaledComplex};

/// Default agreement tolerance between successive continued-fraction depths.
pub const CF_TOL: f64 = 1e-14;
const MAX_DEPTH: usize = 1 << 18;

fn check_c(op: &'static str, c: f64) -> Result<()> {
    if !(c < 0.0) || !c.is_finite() {
        return Err(Error::domain(op, "c must be finite and < 0"));
    }
    Ok(())
}

/// `F^_0(c) = Gamma(a+1) U(1, 1-a, -c)`.
pub fn f0_second_kind(alpha: f64, c: f64) -> Result<f64> {
    check_alpha("f0_second_kind", alpha)?;
    check_c("f0_second_kind", c)?;
    Ok(gamma(alpha + 1.0)? * kummer_u(1.0, 1.0 - alpha, -c)?.to_f64())
}

/// Starting value for the backward sweep: estimate of `r_{n_start-1}` from
/// `r_{n-1} ~ -n + sqrt(-zn) + (2z - 2a + 1)/4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailSeed {
    pub n_start: usize,
    pub value: Complex64,
    /// number of expansion terms used
    pub order: u32,
}

impl TailSeed {
    pub fn new(n_start: usize, alpha: f64, z: Complex64) -> Self {
        Self {
            n_start,
            value: ratio_r_asymptotic(n_start, alpha, z),
            order: 3,
        }
    }
}

/// Three-term large-`n` form of `r_{n-1}(z)`.
pub fn ratio_r_asymptotic(n: usize, alpha: f64, z: Complex64) -> Complex64 {
    let nf = n as f64;
    -nf + (-z * nf).sqrt() + (z * 2.0 - 2.0 * alpha + 1.0) / 4.0
}

fn sweep(nmax: usize, depth: usize, alpha: f64, z: Complex64) -> Result<Vec<Complex64>> {
    let mut out = alloc::vec![Complex64::new(0.0, 0.0); nmax + 1];
    let mut r = TailSeed::new(depth, alpha, z).value;
    for k in (1..depth).rev() {
        let (b, g) = laguerre_recurrence_coeffs(k, alpha);
        let den = z - b - r;
        if den.norm() == 0.0 {
            return Err(Error::pole("ratio_r_cf", "continued fraction denominator vanished"));
        }
        r = den.inv() * g;
        if k - 1 <= nmax {
            out[k - 1] = r;
        }
    }
    Ok(out)
}

/// `r_0(z) .. r_nmax(z)` from one continued-fraction sweep, with the depth
/// doubled until two successive sweeps agree to `tol`.
pub fn ratios_r(nmax: usize, alpha: f64, z: Complex64, tol: f64) -> Result<Vec<Complex64>> {
    check_alpha("ratio_r_cf", alpha)?;
    checked_point("ratio_r_cf", z)?;
    let mut depth = (2 * nmax + 64).next_power_of_two();
    let mut prev = sweep(nmax, depth, alpha, z)?;
    loop {
        depth *= 2;
        if depth > MAX_DEPTH {
            return Err(Error::NonConvergence {
                op: "ratio_r_cf",
                estimate: f64::INFINITY,
            });
        }
        let next = sweep(nmax, depth, alpha, z)?;
        let diff = prev
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).norm() / b.norm())
            .fold(0.0, f64::max);
        if diff <= tol {
            return Ok(next);
        }
        if depth * 2 > MAX_DEPTH {
            return Err(Error::NonConvergence {
                op: "ratio_r_cf",
                estimate: diff,
            });
        }
        prev = next;
    }
}

/// `r_n(z) = F^_{n+1}(z) / F^_n(z)`.
pub fn ratio_r_cf(n: usize, alpha: f64, z: Complex64, tol: f64) -> Result<Complex64> {
    ratios_r(n, alpha, z, tol).map(|v| v[n])
}

/// `F^_0(c) .. F^_nmax(c)`.
pub fn second_kind_values(nmax: usize, alpha: f64, c: f64) -> Result<Vec<LogScaled>> {
    let f0 = f0_second_kind(alpha, c)?;
    let r = ratios_r(nmax, alpha, Complex64::new(c, 0.0), CF_TOL)?;
    let mut out = Vec::with_capacity(nmax + 1);
    let mut acc = LogScaled::from_f64(f0);
    out.push(acc);
    for rk in r.iter().take(nmax) {
        acc = acc * rk.re;
        out.push(acc);
    }
    Ok(out)
}

/// `F^_n(c)` for real `c < 0`.
pub fn eval_second_kind(n: usize, alpha: f64, c: f64) -> Result<LogScaled> {
    second_kind_values(n, alpha, c).map(|v| v[n])
}

/// `F^_n(c) = (-1)^n n! Gamma(n+a+1) U(n+1, 1-a, -c)`, an independent route.
pub fn second_kind_via_kummer(n: usize, alpha: f64, c: f64) -> Result<LogScaled> {
    check_alpha("second_kind_via_kummer", alpha)?;
    check_c("second_kind_via_kummer", c)?;
    let u = kummer_u(n as f64 + 1.0, 1.0 - alpha, -c)?;
    let v = factorial(n as u64) * gamma_shifted(alpha, n as u64)? * u;
    Ok(if n % 2 == 1 { -v } else { v })
}

/// Forward recurrence for `F^_0(c) .. F^_nmax(c)` seeded with accurate
/// `F^_0` and `F^_1 = (c - a - 1) F^_0 + Gamma(a+1)`.
///
/// Unstable by design: kept to demonstrate why the continued fraction is used.
pub fn second_kind_forward(nmax: usize, alpha: f64, c: f64) -> Result<Vec<LogScaled>> {
    let f0 = LogScaled::from_f64(f0_second_kind(alpha, c)?);
    let f1 = f0 * (c - alpha - 1.0) + LogScaled::from_f64(gamma(alpha + 1.0)?);
    let mut out = alloc::vec![f0, f1];
    for k in 1..nmax {
        let (b, g) = laguerre_recurrence_coeffs(k, alpha);
        let next = out[k] * (c - b) - out[k - 1] * g;
        out.push(next);
    }
    out.truncate(nmax + 1);
    Ok(out)
}

fn oracle_integrand(n: usize, alpha: f64, t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    monic_laguerre_f64(n, alpha, t) * (alpha * t.ln() - t).exp()
}

/// `F^_n(c)` by direct quadrature; `tol` is relative to `int |integrand|`.
/// Verification oracle for `n <= 30`.
pub fn second_kind_quadrature_oracle(n: usize, alpha: f64, c: f64, tol: f64) -> Result<f64> {
    check_c("second_kind_quadrature_oracle", c)?;
    second_kind_quadrature_oracle_complex(n, alpha, Complex64::new(c, 0.0), tol).map(|v| v.re)
}

/// Complex-`z` version of [`second_kind_quadrature_oracle`].
pub fn second_kind_quadrature_oracle_complex(n: usize, alpha: f64, z: Complex64, tol: f64) -> Result<Complex64> {
    check_alpha("second_kind_quadrature_oracle", alpha)?;
    checked_point("second_kind_quadrature_oracle", z)?;
    if n > 30 {
        return Err(Error::domain("second_kind_quadrature_oracle", "n must be <= 30"));
    }
    let scale = 1.0 + n as f64;
    // |integrand| has kinks at the zeros of L^_n; a rough value suffices
    let mass = exp_sinh(
        |t| (oracle_integrand(n, alpha, t) / (t - z).norm()).abs(),
        0.0,
        scale,
        QuadOptions::relative(1e-3),
    )?
    .value;
    let opts = QuadOptions {
        abs_tol: tol * mass,
        rel_tol: 0.0,
        max_level: 14,
    };
    exp_sinh(
        |t| Complex64::new(oracle_integrand(n, alpha, t), 0.0) / (t - z),
        0.0,
        scale,
        opts,
    )
    .map(|r| r.value)
    .map_err(|e| match e {
        Error::NonConvergence { estimate, .. } => Error::NonConvergence {
            op: "second_kind_quadrature_oracle",
            estimate,
        },
        other => other,
    })
}

/// `e_0, e_1, e_2` of the large-`n` expansion of `F^_n(z)`.
pub fn asymp_coeffs(alpha: f64, z: Complex64) -> [Complex64; 3] {
    let a = alpha;
    let a2 = a * a;
    let e1 = (z * (24.0 * (1.0 + a)) - z * z * 4.0 + (12.0 * a2 - 3.0)) / 48.0;
    let z2 = z * z;
    let z3 = z2 * z;
    let z4 = z3 * z;
    let e2 = (z4 * 16.0
        + z3 * (-192.0 * a - 192.0)
        + z2 * (480.0 * a2 + 1152.0 * a + 312.0)
        + z * (576.0 * a2 * a + 1728.0 * a2 + 1584.0 * a + 432.0)
        + (144.0 * a2 * a2 - 360.0 * a2 + 81.0))
        / 4608.0;
    [Complex64::new(1.0, 0.0), e1, e2]
}

/// Large-`n` approximation of `F^_n(z)`:
/// `(-1)^n sqrt(pi) (-z)^{a/2-1/4} e^{-z/2 - 2 sqrt(-zn)} Gamma(n+a+1) n^{-a/2-1/4} sum_{j<=order} e_j (-zn)^{-j/2}`.
pub fn asymp_second_kind(n: usize, alpha: f64, z: Complex64, order: usize) -> Result<ScaledComplex> {
    let p = checked_point("asymp_second_kind", z)?;
    check_alpha("asymp_second_kind", alpha)?;
    if order > 2 {
        return Err(Error::domain("asymp_second_kind", "order must be 0, 1 or 2"));
    }
    if n == 0 {
        return Err(Error::domain("asymp_second_kind", "n must be positive"));
    }
    let nf = n as f64;
    let w = p.rotated();
    let s = (w * nf).sqrt();
    let log = w.ln() * (alpha / 2.0 - 0.25) - z / 2.0 - s * 2.0
        + Complex64::new(0.5 * core::f64::consts::PI.ln() - (alpha / 2.0 + 0.25) * nf.ln(), 0.0);
    let e = asymp_coeffs(alpha, z);
    let mut bracket = Complex64::new(0.0, 0.0);
    let mut sp = Complex64::new(1.0, 0.0);
    for ej in e.iter().take(order + 1) {
        bracket += ej / sp;
        sp *= s;
    }
    let v = ScaledComplex::exp_of(log) * gamma_shifted(alpha, n as u64)? * bracket;
    Ok(if n % 2 == 1 { -v } else { v })
}

/// Coefficients `d_m` of `e^{z mu(t)} (t/(1-e^{-t}))^{1-a} = sum d_m t^m`,
/// `mu(t) = 1/t - 1/(e^t - 1) - 1/2`, truncated at `m < truncation`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WatsonExpansion {
    pub alpha: f64,
    pub truncation: usize,
}

/// Watson coefficients `d_0 .. d_3` for this `alpha`, truncation 4.
pub fn watson_d_coeffs(alpha: f64) -> WatsonExpansion {
    WatsonExpansion {
        alpha,
        truncation: 4,
    }
}

impl WatsonExpansion {
    /// `d_m(a, z)`, `m <= 3`.
    pub fn d(&self, m: usize, z: Complex64) -> Result<Complex64> {
        let a = self.alpha;
        let one = Complex64::new(1.0, 0.0);
        Ok(match m {
            0 => one,
            1 => (z + 6.0 * (1.0 - a)) / 12.0,
            2 => (z * z + z * (12.0 * (1.0 - a)) + 12.0 * (a - 1.0) * (3.0 * a - 2.0)) / 288.0,
            3 => {
                let a2 = a * a;
                let poly = -(z * z * z) * 5.0 + z * z * (90.0 * a - 90.0) - z * (540.0 * a2 - 900.0 * a + 288.0)
                    + (1080.0 * a2 * a - 2160.0 * a2 + 1080.0 * a);
                -poly / 51840.0
            }
            _ => {
                return Err(Error::domain("watson_d_coeffs", "only d_0..d_3 are available"));
            }
        })
    }
}

/// `phi_m = (2 e^{w/2} / n!) (w/(n+1))^{(m+a)/2} K_{m+a}(2 sqrt((n+1) w))`
/// with `w = z e^{+-pi i} = -z`.
pub fn phi_m(m: usize, n: usize, alpha: f64, z: Complex64) -> Result<ScaledComplex> {
    let p = checked_point("phi_m", z)?;
    check_alpha("phi_m", alpha)?;
    let w = p.rotated();
    let n1 = n as f64 + 1.0;
    let order = m as f64 + alpha;
    let s = (w * n1).sqrt() * 2.0;
    let k = if w.im == 0.0 {
        ScaledComplex::from(bessel_k(order, s.re)?)
    } else {
        bessel_k_complex(order, s)?
    };
    let log = w / 2.0 + (w / n1).ln() * (order / 2.0) + Complex64::new(2f64.ln(), 0.0);
    Ok(ScaledComplex::exp_of(log) * k / factorial(n as u64))
}

/// `(-1)^n n! Gamma(n+a+1) sum_{m<M} d_m phi_m`, the Watson approximation of `F^_n(z)`.
pub fn watson_sum(n: usize, alpha: f64, z: Complex64, terms: usize) -> Result<ScaledComplex> {
    let wx = watson_d_coeffs(alpha);
    if terms == 0 || terms > wx.truncation {
        return Err(Error::domain("watson_sum", "terms must be in 1..=4"));
    }
    let mut sum = ScaledComplex::ZERO;
    for m in 0..terms {
        sum = sum + phi_m(m, n, alpha, z)? * wx.d(m, z)?;
    }
    let v = sum * factorial(n as u64) * gamma_shifted(alpha, n as u64)?;
    Ok(if n % 2 == 1 { -v } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn f0_values() {
        let f = f0_second_kind(0.0, -1.0).unwrap();
        assert!((f - 0.596_347_362_323_194_1).abs() < 1e-13);
        assert!(f0_second_kind(0.0, -100.0).unwrap() < f);
        assert!(f0_second_kind(0.0, 1.0).is_err());
    }

    #[test]
    fn r0_matches_first_step_identity() {
        // F^_1 = (z - a - 1) F^_0 + Gamma(a + 1)
        for &(a, z) in &[(0.0, -1.0), (0.5, -0.25), (2.0, -5.0)] {
            let f0 = f0_second_kind(a, z).unwrap();
            let r0 = ratio_r_cf(0, a, c(z), CF_TOL).unwrap().re;
            let f1 = (z - a - 1.0) * f0 + gamma(a + 1.0).unwrap();
            assert!((r0 * f0 - f1).abs() < 1e-12 * f1.abs(), "{a} {z}");
        }
    }

    #[test]
    fn sign_pattern() {
        let v = second_kind_values(40, 0.5, -2.0).unwrap();
        for (k, f) in v.iter().enumerate() {
            assert_eq!(f.sign(), if k % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn asymptotic_coefficients() {
        let e = asymp_coeffs(0.5, c(0.0));
        assert_eq!(e[0], c(1.0));
        assert!(e[1].norm() < 1e-16);
    }

    #[test]
    fn watson_basics() {
        let w = watson_d_coeffs(1.0);
        assert_eq!(w.d(0, c(0.3)).unwrap(), c(1.0));
        assert_eq!(w.d(1, c(0.0)).unwrap(), c(0.0));
        assert!(w.d(4, c(0.0)).is_err());
    }

    #[test]
    fn phi_positive_on_axis() {
        let p = phi_m(0, 0, 0.0, c(-1.0)).unwrap();
        assert!(p.phase().im.abs() < 1e-15 && p.phase().re > 0.0);
    }

    #[test]
    fn rejects_cut() {
        assert!(ratio_r_cf(3, 0.0, c(2.0), CF_TOL).is_err());
        assert!(asymp_second_kind(3, 0.0, c(0.0), 0).is_err());
    }
}
