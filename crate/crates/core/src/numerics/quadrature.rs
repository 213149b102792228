//! Double-exponential quadrature.
//!
//! `tanh_sinh` integrates over a finite interval, `exp_sinh` over `[a, inf)`.
//! The half-line rule is the finite rule on `[0,1]` composed with
//! `t = a + s u/(1-u)`, written directly as `t = a + s e^{2v}` so that both
//! ends keep full relative accuracy. Each level halves the step; the
//! difference between consecutive levels is the error estimate.

use core::ops::{Add, Mul, Sub};

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// Values that can be integrated.
pub trait QuadValue: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
    fn magnitude(&self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// Stopping rule: `estimate <= max(abs_tol, rel_tol |I|)`.
#[derive(Debug, Clone, Copy)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_level: u32,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self {
            abs_tol: 0.0,
            rel_tol: 1e-12,
            max_level: 12,
        }
    }
}

impl QuadOptions {
    pub fn absolute(tol: f64) -> Self {
        Self {
            abs_tol: tol,
            rel_tol: 0.0,
            ..Self::default()
        }
    }

    pub fn relative(tol: f64) -> Self {
        Self {
            abs_tol: 0.0,
            rel_tol: tol,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult<T> {
    pub value: T,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub level: u32,
}

// Node for step index x = k h: returns (t, weight/h) or None past the ends.
trait Rule {
    fn node(&self, x: f64) -> Option<(f64, f64)>;
}

struct HalfLine {
    a: f64,
    s: f64,
}

impl Rule for HalfLine {
    fn node(&self, x: f64) -> Option<(f64, f64)> {
        let v = core::f64::consts::FRAC_PI_2 * x.sinh();
        let e = (2.0 * v).exp();
        let t = self.a + self.s * e;
        let w = self.s * e * core::f64::consts::PI * x.cosh();
        if !t.is_finite() || !w.is_finite() || w == 0.0 {
            return None;
        }
        Some((t, w))
    }
}

struct Finite {
    a: f64,
    b: f64,
}

impl Rule for Finite {
    fn node(&self, x: f64) -> Option<(f64, f64)> {
        let v = core::f64::consts::FRAC_PI_2 * x.sinh();
        let len = self.b - self.a;
        // distance to the nearer endpoint in relative form
        let d = 1.0 / (1.0 + (2.0 * v.abs()).exp());
        let t = if v <= 0.0 {
            self.a + len * d
        } else {
            self.b - len * d
        };
        let cv = v.cosh();
        let w = len * core::f64::consts::FRAC_PI_4 * x.cosh() / (cv * cv);
        if w == 0.0 || !w.is_finite() || d == 0.0 {
            return None;
        }
        Some((t, w))
    }
}

const X_MAX: f64 = 7.0;

fn integrate<T, F, R>(rule: &R, mut f: F, opts: QuadOptions, op: &'static str) -> Result<QuadResult<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
    R: Rule,
{
    let mut evaluations = 0usize;
    let mut sample = |x: f64, evals: &mut usize| -> Result<Option<(T, f64)>> {
        let Some((t, w)) = rule.node(x) else {
            return Ok(None);
        };
        *evals += 1;
        let y = f(t);
        let m = y.magnitude();
        if !m.is_finite() {
            // tolerated only far out in the tails where the weight is negligible
            if x.abs() < 2.0 {
                return Err(Error::domain(op, "integrand is not finite inside the interval"));
            }
            return Ok(Some((T::zero(), 0.0)));
        }
        Ok(Some((y * w, m * w)))
    };

    // level 0: integer nodes
    let mut h = 1.0f64;
    let mut sum = T::zero();
    let mut scale = 0.0f64;
    if let Some((y, m)) = sample(0.0, &mut evaluations)? {
        sum = y;
        scale = m;
    }
    let mut sweep = |start: f64, step: f64, sum: &mut T, scale: &mut f64, evals: &mut usize| -> Result<()> {
        for dir in [1.0f64, -1.0] {
            let mut x = start;
            let mut small = 0;
            while x <= X_MAX {
                match sample(dir * x, evals)? {
                    None => break,
                    Some((y, m)) => {
                        *sum = *sum + y;
                        *scale += m;
                        if x >= 3.0 && m <= 1e-20 * *scale {
                            small += 1;
                            if small >= 2 {
                                break;
                            }
                        } else {
                            small = 0;
                        }
                    }
                }
                x += step;
            }
        }
        Ok(())
    };
    sweep(1.0, 1.0, &mut sum, &mut scale, &mut evaluations)?;
    let mut prev = sum * h;
    let mut estimate = f64::INFINITY;
    for level in 1..=opts.max_level {
        h *= 0.5;
        sweep(h, 2.0 * h, &mut sum, &mut scale, &mut evaluations)?;
        let cur = sum * h;
        estimate = (cur - prev).magnitude();
        let target = opts.abs_tol.max(opts.rel_tol * cur.magnitude());
        prev = cur;
        if level >= 3 && estimate <= target {
            return Ok(QuadResult {
                value: cur,
                error_estimate: estimate,
                evaluations,
                level,
            });
        }
        // below rounding noise: further halving cannot improve the result
        if level >= 3 && estimate <= 4.0 * f64::EPSILON * scale * h {
            return Ok(QuadResult {
                value: cur,
                error_estimate: estimate,
                evaluations,
                level,
            });
        }
    }
    Err(Error::NonConvergence { op, estimate })
}

/// `int_a^b f(t) dt`.
pub fn tanh_sinh<T, F>(f: F, a: f64, b: f64, opts: QuadOptions) -> Result<QuadResult<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    if !(a.is_finite() && b.is_finite()) || !(b > a) {
        return Err(Error::domain("tanh_sinh", "need finite a < b"));
    }
    integrate(&Finite { a, b }, f, opts, "tanh_sinh")
}

/// `int_a^inf f(t) dt`; `scale` should be comparable to where the mass of `f` sits.
pub fn exp_sinh<T, F>(f: F, a: f64, scale: f64, opts: QuadOptions) -> Result<QuadResult<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    if !a.is_finite() || !(scale > 0.0) || !scale.is_finite() {
        return Err(Error::domain("exp_sinh", "need finite a and positive scale"));
    }
    integrate(&HalfLine { a, s: scale }, f, opts, "exp_sinh")
}

/// `int_0^inf f(t) dt` to absolute tolerance `tol`.
pub fn quadrature<F>(f: F, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let opts = QuadOptions {
        abs_tol: tol,
        rel_tol: 0.0,
        max_level: 14,
    };
    exp_sinh(f, 0.0, 1.0, opts).map(|r| r.value).map_err(|e| match e {
        Error::NonConvergence { estimate, .. } => Error::NonConvergence {
            op: "quadrature",
            estimate,
        },
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential() {
        let v = quadrature(|t| (-t).exp(), 1e-14).unwrap();
        assert!((v - 1.0).abs() < 1e-14);
    }

    #[test]
    fn half_gamma() {
        let v = quadrature(|t| t.sqrt() * (-t).exp(), 1e-14).unwrap();
        let expected = core::f64::consts::PI.sqrt() / 2.0;
        assert!((v - expected).abs() < 1e-14);
    }

    #[test]
    fn endpoint_singularity() {
        let r = tanh_sinh(|t: f64| 1.0 / t.sqrt(), 0.0, 1.0, QuadOptions::relative(1e-13)).unwrap();
        assert!((r.value - 2.0).abs() < 1e-13);
    }

    #[test]
    fn complex_integrand() {
        let z = Complex64::new(-1.0, 2.0);
        let r = exp_sinh(|t| Complex64::new((-t).exp(), 0.0) / (t - z), 0.0, 1.0, QuadOptions::relative(1e-13))
            .unwrap();
        assert!(r.value.norm() > 0.0);
        let c = exp_sinh(|t| (-t).exp() / (t - z).norm_sqr(), 0.0, 1.0, QuadOptions::relative(1e-13)).unwrap();
        // Im of 1/(t - z) is Im(z)/|t-z|^2
        assert!((r.value.im - 2.0 * c.value).abs() < 1e-13);
    }

    #[test]
    fn reports_nonconvergence() {
        let opts = QuadOptions {
            abs_tol: 0.0,
            rel_tol: 1e-300,
            max_level: 4,
        };
        let e = tanh_sinh(|t: f64| (50.0 * t).sin(), 0.0, 10.0, opts).unwrap_err();
        assert!(matches!(e, Error::NonConvergence { .. }));
    }
}
