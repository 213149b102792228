use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::lambda::{LambdaTable, LambdaValue};
use super::params::GeronimusParams;
use crate::error::{Error, Result};
use crate::laguerre::laguerre_recurrence_coeffs;
use crate::numerics::LogScaled;

/// Recurrence `Q^_{n+1} = (z - beta~_n) Q^_n - gamma~_n Q^_{n-1}`.
///
/// `beta_t[k]` holds `beta~_k` for `k = 0..=nmax` and `gamma_t[k]` holds
/// `gamma~_k` for `k = 1..=nmax`; `gamma_t[0]` is unused and set to zero.
#[derive(Debug, Clone)]
pub struct PerturbedRecurrence {
    pub nmax: usize,
    pub beta_t: Vec<f64>,
    pub gamma_t: Vec<f64>,
    /// `Lambda_1 .. Lambda_{nmax+1}`
    pub lambdas: Vec<LambdaValue>,
}

impl PerturbedRecurrence {
    pub(crate) fn build(nmax: usize, table: &LambdaTable) -> Result<Self> {
        let alpha = table.params().alpha();
        let lam = table.values();
        let mut beta_t = Vec::with_capacity(nmax + 1);
        let mut gamma_t = Vec::with_capacity(nmax + 1);
        gamma_t.push(0.0);
        for n in 0..=nmax {
            let (b, _) = laguerre_recurrence_coeffs(n, alpha);
            beta_t.push(b + lam[n] - lam[n + 1]);
        }
        for n in 1..=nmax {
            let g = if n == 1 {
                let (b0, _) = laguerre_recurrence_coeffs(0, alpha);
                let (_, g1) = laguerre_recurrence_coeffs(1, alpha);
                g1 + lam[1] * b0 - beta_t[1] * lam[1]
            } else {
                let (_, g_prev) = laguerre_recurrence_coeffs(n - 1, alpha);
                lam[n] / lam[n - 1] * g_prev
            };
            if !(g > 0.0) {
                return Err(Error::Positivity {
                    op: "perturbed_recurrence",
                    n,
                    value: g,
                });
            }
            gamma_t.push(g);
        }
        let lambdas = (1..=nmax + 1).map(|n| table.get(n).expect("in table")).collect();
        Ok(Self {
            nmax,
            beta_t,
            gamma_t,
            lambdas,
        })
    }

    fn lambda(&self, n: usize) -> f64 {
        if n == 0 {
            0.0
        } else {
            self.lambdas[n - 1].value
        }
    }

    /// Relative residual of `gamma_n + Lambda_n beta_{n-1} = beta~_n Lambda_n + gamma~_n`
    /// for `1 <= n <= nmax`.
    pub fn closure_residual(&self, n: usize, alpha: f64) -> f64 {
        let (_, g) = laguerre_recurrence_coeffs(n, alpha);
        let (b_prev, _) = laguerre_recurrence_coeffs(n - 1, alpha);
        let lam = self.lambda(n);
        let terms = [g, lam * b_prev, -self.beta_t[n] * lam, -self.gamma_t[n]];
        let scale = terms.iter().fold(0.0f64, |m, t| m.max(t.abs()));
        terms.iter().sum::<f64>().abs() / scale
    }
}

/// Perturbed recurrence coefficients up to `nmax >= 2`.
pub fn perturbed_recurrence(nmax: usize, params: GeronimusParams) -> Result<PerturbedRecurrence> {
    if nmax < 2 {
        return Err(Error::domain("perturbed_recurrence", "nmax must be >= 2"));
    }
    let table = LambdaTable::new(params, nmax + 1)?;
    PerturbedRecurrence::build(nmax, &table)
}

/// `|Lambda_{n+1} - Lambda_n + gamma_n/Lambda_n - gamma_{n-1}/Lambda_{n-1} - 2|`
/// for `n >= 2`, with `lambdas[k] = Lambda_k`.
pub fn lambda_recursion_residual(n: usize, alpha: f64, lambdas: &[f64]) -> Result<f64> {
    if n < 2 || n + 1 >= lambdas.len() {
        return Err(Error::domain(
            "lambda_recursion_residual",
            "need 2 <= n and Lambda_{n+1} available",
        ));
    }
    let (l0, l1, l2) = (lambdas[n - 1], lambdas[n], lambdas[n + 1]);
    if l0 == 0.0 || l1 == 0.0 {
        return Err(Error::pole("lambda_recursion_residual", "Lambda vanished"));
    }
    let (_, g) = laguerre_recurrence_coeffs(n, alpha);
    let (_, g_prev) = laguerre_recurrence_coeffs(n - 1, alpha);
    Ok((l2 - l1 + g / l1 - g_prev / l0 - 2.0).abs())
}

/// `Lambda_0 .. Lambda_nmax` by forward use of
/// `Lambda_{n+1} = -n(n+a)/Lambda_n + 2(n-1) + gamma_1/Lambda_1 + Lambda_2`,
/// seeded with the tabulated `Lambda_1, Lambda_2`.
///
/// Stable only where `N L^_n(c)` dominates `F^_n(c)`.
pub fn lambda_nonlinear(nmax: usize, params: GeronimusParams) -> Result<Vec<f64>> {
    let seed = LambdaTable::new(params, nmax.max(2))?;
    let alpha = params.alpha();
    let (l1, l2) = (seed.lambda(1), seed.lambda(2));
    let k = (1.0 + alpha) / l1 + l2;
    let mut out = alloc::vec![0.0, l1, l2];
    for n in 2..nmax {
        let prev = out[n];
        if prev == 0.0 {
            return Err(Error::pole("lambda_nonlinear", "Lambda vanished"));
        }
        let nf = n as f64;
        out.push(-nf * (nf + alpha) / prev + 2.0 * (nf - 1.0) + k);
    }
    out.truncate(nmax + 1);
    Ok(out)
}

/// `Lambda_0 .. Lambda_nmax` as `rho_n / rho_{n-1}` with
/// `rho_{n+1} = K_n rho_n - n(n+a) rho_{n-1}`, `rho_0 = 1`, `rho_1 = Lambda_1`
/// and `K_n = 2(n-1) + gamma_1/Lambda_1 + Lambda_2`; run in log scale.
pub fn lambda_rho(nmax: usize, params: GeronimusParams) -> Result<Vec<f64>> {
    let seed = LambdaTable::new(params, nmax.max(2))?;
    let alpha = params.alpha();
    let (l1, l2) = (seed.lambda(1), seed.lambda(2));
    let k = (1.0 + alpha) / l1 + l2;
    let mut rho = alloc::vec![LogScaled::ONE, LogScaled::from_f64(l1)];
    for n in 1..nmax {
        let nf = n as f64;
        let next = rho[n] * (2.0 * (nf - 1.0) + k) - rho[n - 1] * (nf * (nf + alpha));
        rho.push(next);
    }
    let mut out = alloc::vec![0.0];
    for n in 1..=nmax {
        if rho[n - 1].is_zero() {
            return Err(Error::pole("lambda_rho", "rho vanished"));
        }
        out.push((rho[n] / rho[n - 1]).to_f64());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn p(a: f64, c: f64, m: f64) -> GeronimusParams {
        GeronimusParams::new(a, c, m).unwrap()
    }

    #[test]
    fn reproduces_connection_formula() {
        let params = p(0.5, -1.0, 2.0);
        let rec = perturbed_recurrence(30, params).unwrap();
        let table = LambdaTable::new(params, 31).unwrap();
        let z = Complex64::new(1.7, 0.9);
        let mut prev = table.eval_q(0, z).unwrap();
        let mut cur = table.eval_q(1, z).unwrap();
        assert!((cur.to_complex() - (z - rec.beta_t[0])).norm() < 1e-13);
        for n in 1..=30 {
            let next = cur * (z - rec.beta_t[n]) - prev * rec.gamma_t[n];
            let exact = table.eval_q(n + 1, z).unwrap();
            let rel = (next - exact).norm() / exact.norm();
            assert!(rel.to_f64() < 1e-10, "{n} {}", rel.to_f64());
            prev = cur;
            cur = exact;
        }
        for n in 1..=30 {
            assert!(rec.closure_residual(n, 0.5) < 1e-10);
        }
    }

    #[test]
    fn recursion_residual_small() {
        let t = LambdaTable::new(p(0.0, -1.0, 1.0), 51).unwrap();
        for n in 2..=50 {
            assert!(lambda_recursion_residual(n, 0.0, t.values()).unwrap() < 1e-9);
        }
        assert!(lambda_recursion_residual(1, 0.0, t.values()).is_err());
    }

    #[test]
    fn three_routes_agree_with_mass() {
        let params = p(0.0, -1.0, 1.0);
        let t = LambdaTable::new(params, 40).unwrap();
        let a = lambda_nonlinear(40, params).unwrap();
        let b = lambda_rho(40, params).unwrap();
        for n in 1..=40 {
            let d = t.lambda(n);
            assert!((a[n] - d).abs() < 1e-8 * d, "nl {n}");
            assert!((b[n] - d).abs() < 1e-8 * d, "rho {n}");
        }
    }

    #[test]
    fn rejects_small_nmax() {
        assert!(perturbed_recurrence(1, p(0.0, -1.0, 1.0)).is_err());
    }
}
