use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use super::lambda::LambdaTable;
use super::params::GeronimusParams;
use crate::error::{Error, Result};
use crate::laguerre::monic_laguerre_derivative;
use crate::numerics::gamma::pochhammer;
use crate::numerics::hypergeom::pfq_2f2_contiguous;
use crate::numerics::{LogScaled, ScaledComplex};

/// `Q^_n(z) = C 2F2(-n, 1+e; a+1, e; z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeomRep {
    pub n: usize,
    pub alpha: f64,
    /// `C = (1 - Lambda_n/(n+a)) (-1)^n (a+1)_n`
    pub c: LogScaled,
    /// `e = n (n + a - Lambda_n) / Lambda_n`
    pub e: f64,
}

impl HypergeomRep {
    fn from_lambda(n: usize, alpha: f64, lam: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("hypergeom_rep", "n must be >= 1"));
        }
        let na = n as f64 + alpha;
        let tol = 64.0 * f64::EPSILON;
        if lam.abs() <= tol * na {
            return Err(Error::degenerate("hypergeom_rep", "Lambda_n = 0, e is undefined"));
        }
        if (lam - na).abs() <= tol * na {
            return Err(Error::degenerate("hypergeom_rep", "Lambda_n = n + alpha, C vanishes"));
        }
        let mut c = pochhammer(alpha + 1.0, n as u64) * (1.0 - lam / na);
        if n % 2 == 1 {
            c = -c;
        }
        Ok(Self {
            n,
            alpha,
            c,
            e: n as f64 * (na - lam) / lam,
        })
    }

    pub fn eval(&self, z: Complex64) -> Result<ScaledComplex> {
        let f = pfq_2f2_contiguous(self.n, self.alpha + 1.0, self.e, z)?;
        Ok(ScaledComplex::from(self.c) * f)
    }
}

pub fn hypergeom_rep(n: usize, params: GeronimusParams) -> Result<HypergeomRep> {
    if n == 0 {
        return Err(Error::domain("hypergeom_rep", "n must be >= 1"));
    }
    let t = LambdaTable::new(params, n)?;
    HypergeomRep::from_lambda(n, params.alpha(), t.lambda(n))
}

/// Residuals of `Q^_n` in the second- and third-order equations, each with
/// the largest term magnitude as its scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeResiduals {
    pub res2: Complex64,
    pub scale2: f64,
    pub res3: Complex64,
    pub scale3: f64,
}

impl OdeResiduals {
    pub fn relative(&self) -> (f64, f64) {
        (self.res2.norm() / self.scale2, self.res3.norm() / self.scale3)
    }
}

struct Coeffs {
    n: f64,
    alpha: f64,
    lam: f64,
    e: f64,
}

impl Coeffs {
    fn new(n: usize, alpha: f64, lam: f64, z: Complex64) -> Result<Self> {
        let nf = n as f64;
        let d = z * lam + (nf - lam) * (nf + alpha - lam);
        if z.norm() == 0.0 || d.norm() == 0.0 {
            return Err(Error::pole("ode_residuals", "z is a pole of R or S"));
        }
        if lam == 0.0 {
            return Err(Error::degenerate("ode_residuals", "Lambda_n = 0"));
        }
        Ok(Self {
            n: nf,
            alpha,
            lam,
            e: nf * (nf + alpha - lam) / lam,
        })
    }

    fn d(&self, z: Complex64) -> Complex64 {
        z * self.lam + (self.n - self.lam) * (self.n + self.alpha - self.lam)
    }

    fn r(&self, z: Complex64) -> Complex64 {
        -self.lam / self.d(z) + (self.alpha + 1.0) / z - 1.0
    }

    fn dr(&self, z: Complex64) -> Complex64 {
        let d = self.d(z);
        self.lam * self.lam / (d * d) - (self.alpha + 1.0) / (z * z)
    }

    fn p(&self, z: Complex64) -> Complex64 {
        z * self.lam + (self.n - self.lam) * (self.n + self.alpha)
    }

    fn s(&self, z: Complex64) -> Complex64 {
        self.p(z) / (z * self.d(z)) + (self.n - 1.0) / z
    }

    fn ds(&self, z: Complex64) -> Complex64 {
        let d = self.d(z);
        let zd = z * d;
        (zd * self.lam - self.p(z) * (d + z * self.lam)) / (zd * zd) - (self.n - 1.0) / (z * z)
    }

    // coefficients of y''', y'', y', y
    fn third(&self, z: Complex64) -> [Complex64; 4] {
        [
            z * z,
            -z * (z - self.e - self.alpha - 2.0),
            -((self.e - self.n + 2.0) * z - (self.alpha + 1.0) * self.e),
            Complex64::new(self.n * (self.e + 1.0), 0.0),
        ]
    }

    fn third_from_second(&self, z: Complex64) -> [Complex64; 4] {
        let z2 = z * z;
        let (r, s) = (self.r(z), self.s(z));
        let m = -z * (z - self.e - self.alpha - 2.0) - z2 * r;
        [z2, z2 * r + m, z2 * (self.dr(z) + s) + m * r, z2 * self.ds(z) + m * s]
    }
}

/// Coefficients `[z^2, -z(z-e-a-2), -((e-n+2)z - (a+1)e), n(e+1)]` of the
/// third-order equation.
pub fn ode3_coefficients(n: usize, params: GeronimusParams, z: Complex64) -> Result<[Complex64; 4]> {
    let t = LambdaTable::new(params, n.max(1))?;
    Ok(Coeffs::new(n, params.alpha(), t.lambda(n), z)?.third(z))
}

/// The same coefficients assembled as `z^2 (ODE2)' + (-z(z-e-a-2) - z^2 R) ODE2`.
pub fn ode3_from_ode2(n: usize, params: GeronimusParams, z: Complex64) -> Result<[Complex64; 4]> {
    let t = LambdaTable::new(params, n.max(1))?;
    Ok(Coeffs::new(n, params.alpha(), t.lambda(n), z)?.third_from_second(z))
}

/// Residuals of `Q^_n` (`n >= 1`) in `y'' + R y' + S y = 0` and in the
/// third-order equation, using exact derivatives of the connection formula.
pub fn ode_residuals(n: usize, params: GeronimusParams, z: Complex64) -> Result<OdeResiduals> {
    if n == 0 {
        return Err(Error::domain("ode_residuals", "n must be >= 1"));
    }
    let t = LambdaTable::new(params, n)?;
    let alpha = params.alpha();
    let lam = t.lambda(n);
    let k = Coeffs::new(n, alpha, lam, z)?;
    let mut y = [Complex64::new(0.0, 0.0); 4];
    for (j, yj) in y.iter_mut().enumerate() {
        let hi = monic_laguerre_derivative(n, alpha, j, z)?;
        let lo = monic_laguerre_derivative(n - 1, alpha, j, z)?;
        *yj = (hi + lo * lam).to_complex();
    }
    let t2 = [y[2], k.r(z) * y[1], k.s(z) * y[0]];
    let c3 = k.third(z);
    let t3 = [c3[0] * y[3], c3[1] * y[2], c3[2] * y[1], c3[3] * y[0]];
    let sum = |t: &[Complex64]| t.iter().fold(Complex64::new(0.0, 0.0), |a, b| a + b);
    let scale = |t: &[Complex64]| t.iter().fold(0.0f64, |a, b| a.max(b.norm()));
    Ok(OdeResiduals {
        res2: sum(&t2),
        scale2: scale(&t2),
        res3: sum(&t3),
        scale3: scale(&t3),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geronimus::inner::Polynomial;

    fn p(a: f64, c: f64, m: f64) -> GeronimusParams {
        GeronimusParams::new(a, c, m).unwrap()
    }

    #[test]
    fn matches_connection_formula() {
        let params = p(0.0, -1.0, 1.0);
        let t = LambdaTable::new(params, 4).unwrap();
        let rep = hypergeom_rep(4, params).unwrap();
        for z in [Complex64::new(-1.0, 0.0), Complex64::new(2.0, 1.0), Complex64::new(5.0, 0.0)] {
            let a = rep.eval(z).unwrap().to_complex();
            let b = t.eval_q(4, z).unwrap().to_complex();
            assert!((a - b).norm() < 1e-11 * b.norm(), "{z}");
        }
    }

    #[test]
    fn representation_is_monic() {
        let params = p(0.5, -2.0, 0.3);
        for n in 1..=6 {
            let rep = hypergeom_rep(n, params).unwrap();
            // leading term of 2F2: (-n)_n (1+e)_n / ((a+1)_n (e)_n n!) = (-1)^n (n+e)/(e (a+1)_n)
            let na = n as f64 + 0.5;
            let lead = if n % 2 == 1 { -1.0 } else { 1.0 } * (n as f64 + rep.e) / rep.e
                / pochhammer(1.5, n as u64).to_f64();
            assert!((rep.c.to_f64() * lead - 1.0).abs() < 1e-12, "{n} {na}");
        }
    }

    #[test]
    fn degenerate_cases_reported() {
        assert!(matches!(HypergeomRep::from_lambda(3, 0.5, 3.5), Err(Error::Degenerate { .. })));
        assert!(matches!(HypergeomRep::from_lambda(3, 0.5, 0.0), Err(Error::Degenerate { .. })));
        assert!(HypergeomRep::from_lambda(3, 0.5, 3.0).is_ok());
    }

    #[test]
    fn ode_residuals_vanish() {
        let params = p(0.5, -1.0, 2.0);
        for n in 1..=10 {
            for z in [Complex64::new(-1.0, 0.0), Complex64::new(1.0, 1.0), Complex64::new(3.0, 0.0)] {
                let (r2, r3) = ode_residuals(n, params, z).unwrap().relative();
                assert!(r2 < 1e-9 && r3 < 1e-9, "{n} {z} {r2} {r3}");
            }
        }
        assert!(ode_residuals(3, params, Complex64::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn third_order_from_second_order() {
        let params = p(0.5, -1.0, 2.0);
        for z in [Complex64::new(-1.5, 0.0), Complex64::new(0.7, 2.0), Complex64::new(4.0, -1.0)] {
            let a = ode3_coefficients(3, params, z).unwrap();
            let b = ode3_from_ode2(3, params, z).unwrap();
            for k in 0..4 {
                assert!((a[k] - b[k]).norm() < 1e-11 * a[k].norm().max(1.0), "{k} {z}");
            }
        }
    }

    #[test]
    fn coefficient_form_ode_check() {
        // the coefficient form satisfies the second-order equation too
        let params = p(0.0, -1.0, 1.0);
        let t = LambdaTable::new(params, 3).unwrap();
        let q = Polynomial::geronimus(3, &t);
        let c = q.coeffs();
        let z = Complex64::new(0.4, 0.8);
        let y = c.iter().rev().fold(Complex64::new(0.0, 0.0), |a, &b| a * z + b);
        let dy = c[1] + z * 2.0 * c[2] + z * z * 3.0 * c[3];
        let d2y = 2.0 * c[2] + z * 6.0 * c[3];
        let k = Coeffs::new(3, 0.0, t.lambda(3), z).unwrap();
        let res = d2y + k.r(z) * dy + k.s(z) * y;
        assert!(res.norm() < 1e-12 * d2y.norm().max(1.0));
    }
}
