use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use super::params::{Branch, GeronimusParams};
use crate::error::{Error, Result};
use crate::laguerre::{eval_monic_laguerre, monic_laguerre_pair};
use crate::numerics::gamma::{factorial, gamma_shifted};
use crate::numerics::{LogScaled, ScaledComplex};
use crate::second_kind::{f0_second_kind, ratios_r, second_kind_via_kummer, CF_TOL};

/// Connection coefficient `Lambda_n` for one degree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaValue {
    pub n: usize,
    pub value: f64,
    pub branch: Branch,
}

/// `Lambda_1 .. Lambda_nmax` for one parameter set, with the values of
/// `L^_k(c)` and `F^_k(c)` they were built from.
///
/// `Lambda_n = -(F^_n(c) + N L^_n(c)) / (F^_{n-1}(c) + N L^_{n-1}(c))`; both
/// terms carry the sign `(-1)^n`, so no cancellation occurs. For `N = 0` this
/// is `-r_{n-1}(c)` taken straight from the continued fraction.
#[derive(Debug, Clone)]
pub struct LambdaTable {
    params: GeronimusParams,
    lambdas: Vec<f64>,
    l_hat: Vec<LogScaled>,
    f_hat: Vec<LogScaled>,
}

impl LambdaTable {
    pub fn new(params: GeronimusParams, nmax: usize) -> Result<Self> {
        let (alpha, c, mass) = (params.alpha(), params.c(), params.mass());
        let cz = Complex64::new(c, 0.0);
        let r = ratios_r(nmax, alpha, cz, CF_TOL)?;
        let l_hat: Vec<LogScaled> = eval_monic_laguerre(nmax, alpha, cz)?
            .values()
            .iter()
            .map(|v| v.re())
            .collect();
        let mut f_hat = Vec::with_capacity(nmax + 1);
        let mut acc = LogScaled::from_f64(f0_second_kind(alpha, c)?);
        f_hat.push(acc);
        for rk in r.iter().take(nmax) {
            acc = acc * rk.re;
            f_hat.push(acc);
        }
        let mut lambdas = Vec::with_capacity(nmax + 1);
        lambdas.push(0.0);
        if mass == 0.0 {
            lambdas.extend(r.iter().take(nmax).map(|rk| -rk.re));
        } else {
            let g = |k: usize| f_hat[k] + l_hat[k] * mass;
            let mut prev = g(0);
            for k in 1..=nmax {
                let cur = g(k);
                if prev.is_zero() || !prev.is_finite() {
                    return Err(Error::degenerate("lambda_n", "denominator of Lambda_n vanished"));
                }
                lambdas.push(-(cur / prev).to_f64());
                prev = cur;
            }
        }
        if let Some(n) = lambdas.iter().skip(1).position(|v| !v.is_finite()) {
            return Err(Error::degenerate(
                "lambda_n",
                alloc::format!("Lambda_{} is not finite", n + 1),
            ));
        }
        Ok(Self {
            params,
            lambdas,
            l_hat,
            f_hat,
        })
    }

    pub fn params(&self) -> GeronimusParams {
        self.params
    }

    pub fn nmax(&self) -> usize {
        self.lambdas.len() - 1
    }

    /// `Lambda_n` for `1 <= n <= nmax`; `Lambda_0 = 0`.
    pub fn lambda(&self, n: usize) -> f64 {
        self.lambdas[n]
    }

    /// `Lambda_0 .. Lambda_nmax`.
    pub fn values(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn get(&self, n: usize) -> Option<LambdaValue> {
        if n == 0 || n > self.nmax() {
            return None;
        }
        Some(LambdaValue {
            n,
            value: self.lambdas[n],
            branch: self.params.branch(),
        })
    }

    /// `L^_n(c)`.
    pub fn l_hat(&self, n: usize) -> LogScaled {
        self.l_hat[n]
    }

    /// `F^_n(c)`.
    pub fn f_hat(&self, n: usize) -> LogScaled {
        self.f_hat[n]
    }

    /// `Q^_n(z) = L^_n(z) + Lambda_n L^_{n-1}(z)` for `n <= nmax`.
    pub fn eval_q(&self, n: usize, z: Complex64) -> Result<ScaledComplex> {
        if n > self.nmax() {
            return Err(Error::domain("eval_Q", "degree beyond the Lambda table"));
        }
        let (lo, hi) = monic_laguerre_pair(n, self.params.alpha(), z)?;
        if n == 0 {
            return Ok(hi);
        }
        Ok(hi + lo * self.lambdas[n])
    }
}

/// `Lambda_n` for `n >= 1`.
pub fn lambda_n(n: usize, params: GeronimusParams) -> Result<LambdaValue> {
    if n == 0 {
        return Err(Error::domain("lambda_n", "n must be >= 1"));
    }
    let table = LambdaTable::new(params, n)?;
    Ok(table.get(n).expect("n within table"))
}

/// `Lambda_n` from the Casoratian form
/// `-Gamma(n) Gamma(n+a) / (L^_{n-1} F^_{n-1} + N L^_{n-1}^2) - L^_n/L^_{n-1}`
/// at `c`, with `F^_{n-1}` from the Kummer route. Independent of [`LambdaTable`].
pub fn lambda_casoratian(n: usize, params: GeronimusParams) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("lambda_casoratian", "n must be >= 1"));
    }
    let (alpha, c, mass) = (params.alpha(), params.c(), params.mass());
    let (lo, hi) = monic_laguerre_pair(n, alpha, Complex64::new(c, 0.0))?;
    let (lo, hi) = (lo.re(), hi.re());
    let f = second_kind_via_kummer(n - 1, alpha, c)?;
    let den = lo * f + lo * lo * mass;
    if den.is_zero() {
        return Err(Error::degenerate("lambda_casoratian", "denominator vanished"));
    }
    let num = factorial(n as u64 - 1) * gamma_shifted(alpha, n as u64 - 1)?;
    Ok(-(num / den).to_f64() - (hi / lo).to_f64())
}

/// `Q^_n(z)`.
pub fn eval_q(n: usize, params: GeronimusParams, z: Complex64) -> Result<ScaledComplex> {
    LambdaTable::new(params, n)?.eval_q(n, z)
}
