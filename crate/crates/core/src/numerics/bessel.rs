//! Bessel functions `J_nu`, `K_nu` and the large-argument series of `K_nu`.
//!
//! Real arguments use Temme's series for small `x` and Steed's continued
//! fraction for large `x`, followed by recurrence in the order.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use super::gamma::gamma;
use super::quadrature::{exp_sinh, QuadOptions};
use super::scaled::{LogScaled, ScaledComplex};
use crate::error::{Error, Result};

const PI: f64 = core::f64::consts::PI;
const EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-300;
const MAXIT: usize = 100_000;
const XMIN: f64 = 2.0;

// Taylor coefficients of 1/Gamma(1+x) = sum_{k>=1} RG[k-1] x^{k-1}.
const RG: [f64; 30] = [
    1.0,
    0.577_215_664_901_532_860_61,
    -0.655_878_071_520_253_881_08,
    -0.042_002_635_034_095_235_529,
    0.166_538_611_382_291_489_5,
    -0.042_197_734_555_544_336_748,
    -0.009_621_971_527_876_973_562_1,
    0.007_218_943_246_663_099_542_4,
    -0.001_165_167_591_859_065_112_1,
    -0.000_215_241_674_114_950_972_82,
    0.000_128_050_282_388_116_186_15,
    -0.000_020_134_854_780_788_238_656,
    -1.250_493_482_142_670_657_3e-6,
    1.133_027_231_981_695_882_4e-6,
    -2.056_338_416_977_607_103_5e-7,
    6.116_095_104_481_415_817_9e-9,
    5.002_007_644_469_222_930_1e-9,
    -1.181_274_570_487_020_144_6e-9,
    1.043_426_711_691_100_510_5e-10,
    7.782_263_439_905_071_254e-12,
    -3.696_805_618_642_205_708_2e-12,
    5.100_370_287_454_475_979e-13,
    -2.058_326_053_566_506_783_2e-14,
    -5.348_122_539_423_017_982_4e-15,
    1.226_778_628_238_260_790_2e-15,
    -1.181_259_301_697_458_769_5e-16,
    1.186_692_254_751_600_332_6e-18,
    1.412_380_655_318_031_781_6e-18,
    -2.298_745_684_435_370_206_6e-19,
    1.714_406_321_927_337_433_4e-20,
];

/// Temme's auxiliary functions for `|mu| <= 1/2`:
/// `(gam1, gam2, 1/Gamma(1+mu), 1/Gamma(1-mu))`.
fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    let m2 = mu * mu;
    let mut even = 0.0; // sum over odd powers index: coefficients RG[1], RG[3], ...
    let mut odd = 0.0;
    for k in (0..15).rev() {
        even = even * m2 + RG[2 * k];
        odd = odd * m2 + RG[2 * k + 1];
    }
    let gam1 = -odd;
    let gam2 = even;
    (gam1, gam2, gam2 - mu * gam1, gam2 + mu * gam1)
}

/// `J_mu(x)` and `Y_mu(x)` for `mu >= 0`, `x > 0`.
fn bessel_jy(nu: f64, x: f64) -> Result<(f64, f64)> {
    let nl = if x < XMIN {
        (nu + 0.5) as i64
    } else {
        ((nu - x + 1.5) as i64).max(0)
    };
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;
    let mut isign = 1.0;
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAXIT {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence {
            op: "bessel_j",
            estimate: f64::NAN,
        });
    }
    let mut rjl = isign * 1e-30;
    let mut rjpl = h * rjl;
    let rjl1 = rjl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let t = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * t - rjl;
        rjl = t;
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;
    let (rjmu, mut rymu, mut ry1);
    if x < XMIN {
        let x2 = 0.5 * x;
        let pimu = PI * xmu;
        let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
        let d = -x2.ln();
        let e = xmu * d;
        let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
        let (gam1, gam2, gampl, gammi) = temme_gammas(xmu);
        let mut ff = 2.0 / PI * fact * (gam1 * e.cosh() + gam2 * fact2 * d);
        let ee = e.exp();
        let mut p = ee / (gampl * PI);
        let mut q = 1.0 / (ee * PI * gammi);
        let pimu2 = 0.5 * pimu;
        let fact3 = if pimu2.abs() < EPS { 1.0 } else { pimu2.sin() / pimu2 };
        let r = PI * pimu2 * fact3 * fact3;
        let mut cc = 1.0;
        let dd = -x2 * x2;
        let mut sum = ff + r * q;
        let mut sum1 = p;
        let mut ok = false;
        for i in 1..MAXIT {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - xmu2);
            cc *= dd / fi;
            p /= fi - xmu;
            q /= fi + xmu;
            let del = cc * (ff + r * q);
            sum += del;
            sum1 += cc * p - fi * del;
            if del.abs() < (1.0 + sum.abs()) * EPS {
                ok = true;
                break;
            }
        }
        if !ok {
            return Err(Error::NonConvergence {
                op: "bessel_j",
                estimate: f64::NAN,
            });
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
        let rymup = xmu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        let mut a = 0.25 - xmu2;
        let mut p = -0.5 * xi;
        let mut q = 1.0;
        let br = 2.0 * x;
        let mut bi = 2.0;
        let mut fact = a * xi / (p * p + q * q);
        let mut cr = br + q * fact;
        let mut ci = bi + p * fact;
        let mut den = br * br + bi * bi;
        let mut dr = br / den;
        let mut di = -bi / den;
        let mut dlr = cr * dr - ci * di;
        let mut dli = cr * di + ci * dr;
        let mut temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        let mut ok = false;
        for i in 2..MAXIT {
            a += 2.0 * (i as f64 - 1.0);
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if dr.abs() + di.abs() < FPMIN {
                dr = FPMIN;
            }
            fact = a / (cr * cr + ci * ci);
            cr = br + cr * fact;
            ci = bi - ci * fact;
            if cr.abs() + ci.abs() < FPMIN {
                cr = FPMIN;
            }
            den = dr * dr + di * di;
            dr /= den;
            di /= -den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (dlr - 1.0).abs() + dli.abs() < EPS {
                ok = true;
                break;
            }
        }
        if !ok {
            return Err(Error::NonConvergence {
                op: "bessel_j",
                estimate: f64::NAN,
            });
        }
        let gam = (p - f) / q;
        let r = (w / ((p - f) * gam + q)).sqrt();
        rjmu = if rjl < 0.0 { -r } else { r };
        rymu = rjmu * gam;
        let rymup = rymu * (p + q / gam);
        ry1 = xmu * xi * rymu - rymup;
    }
    let j = rjl1 * (rjmu / rjl);
    for i in 1..=nl {
        let t = (xmu + i as f64) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = t;
    }
    Ok((j, rymu))
}

/// `J_nu(x)` for `nu > -1`, `x >= 0`.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    if !(nu > -1.0) || !(x >= 0.0) || !x.is_finite() || !nu.is_finite() {
        return Err(Error::domain("bessel_j", "need nu > -1 and finite x >= 0"));
    }
    if x == 0.0 {
        return if nu == 0.0 {
            Ok(1.0)
        } else if nu > 0.0 {
            Ok(0.0)
        } else {
            Err(Error::pole("bessel_j", "J_nu(0) is infinite for -1 < nu < 0"))
        };
    }
    if nu >= 0.0 {
        return bessel_jy(nu, x).map(|(j, _)| j);
    }
    let mu = -nu;
    let (j, y) = bessel_jy(mu, x)?;
    Ok((mu * PI).cos() * j - (mu * PI).sin() * y)
}

/// `x^{-a/2} J_a(2 sqrt x)` as the entire series `sum (-x)^k / (k! Gamma(k+a+1))`.
///
/// Valid for complex `x` and any `a > -1`; the removable point `x = 0` gives
/// `1/Gamma(a+1)`. Intended for moderate `|x|` (up to a few hundred).
pub fn bessel_j_reduced(a: f64, x: Complex64) -> Result<Complex64> {
    if !(a > -1.0) {
        return Err(Error::domain("bessel_j_reduced", "need a > -1"));
    }
    let mut term = Complex64::new(1.0 / gamma(a + 1.0)?, 0.0);
    let mut sum = term;
    let mut k = 0.0;
    loop {
        k += 1.0;
        term = term * (-x) / (k * (k + a));
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() && k > x.norm().sqrt() {
            break;
        }
        if k > 10_000.0 {
            return Err(Error::NonConvergence {
                op: "bessel_j_reduced",
                estimate: term.norm(),
            });
        }
    }
    Ok(sum)
}

/// `K_nu(x)` for real `nu` and `x > 0`, log-scaled.
pub fn bessel_k(nu: f64, x: f64) -> Result<LogScaled> {
    if !(x > 0.0) || !x.is_finite() || !nu.is_finite() {
        return Err(Error::domain("bessel_k", "need finite x > 0"));
    }
    let nu = nu.abs();
    let nl = (nu + 0.5) as i64;
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let (mut rkmu, mut rk1, log_scale);
    if x < XMIN {
        let x2 = 0.5 * x;
        let pimu = PI * xmu;
        let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
        let d = -x2.ln();
        let e = xmu * d;
        let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
        let (gam1, gam2, gampl, gammi) = temme_gammas(xmu);
        let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
        let mut sum = ff;
        let ee = e.exp();
        let mut p = 0.5 * ee / gampl;
        let mut q = 0.5 / (ee * gammi);
        let mut c = 1.0;
        let dd = x2 * x2;
        let mut sum1 = p;
        let mut ok = false;
        for i in 1..MAXIT {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - xmu2);
            c *= dd / fi;
            p /= fi - xmu;
            q /= fi + xmu;
            let del = c * ff;
            sum += del;
            sum1 += c * (p - fi * ff);
            if del.abs() < sum.abs() * EPS {
                ok = true;
                break;
            }
        }
        if !ok {
            return Err(Error::NonConvergence {
                op: "bessel_k",
                estimate: f64::NAN,
            });
        }
        rkmu = sum;
        rk1 = sum1 * xi2;
        log_scale = 0.0;
    } else {
        let mut b = 2.0 * (1.0 + x);
        let mut d = 1.0 / b;
        let mut delh = d;
        let mut h = d;
        let mut q1 = 0.0;
        let mut q2 = 1.0;
        let a1 = 0.25 - xmu2;
        let mut q = a1;
        let mut c = a1;
        let mut a = -a1;
        let mut s = 1.0 + q * delh;
        let mut ok = false;
        for i in 2..MAXIT {
            let fi = i as f64;
            a -= 2.0 * (fi - 1.0);
            c = -a * c / fi;
            let qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh = (b * d - 1.0) * delh;
            h += delh;
            let dels = q * delh;
            s += dels;
            if (dels / s).abs() < EPS {
                ok = true;
                break;
            }
        }
        if !ok {
            return Err(Error::NonConvergence {
                op: "bessel_k",
                estimate: f64::NAN,
            });
        }
        h *= a1;
        // e^{-x} kept aside
        rkmu = (PI / (2.0 * x)).sqrt() / s;
        rk1 = rkmu * (xmu + x + 0.5 - h) * xi;
        log_scale = -x;
    }
    let mut scale = LogScaled::exp_of(log_scale);
    for i in 1..=nl {
        let t = (xmu + i as f64) * xi2 * rk1 + rkmu;
        rkmu = rk1;
        rk1 = t;
        if rk1.abs() > 1e250 {
            rkmu *= 1e-250;
            rk1 *= 1e-250;
            scale = scale * LogScaled::from_f64(1e250);
        }
    }
    Ok(LogScaled::from_f64(rkmu) * scale)
}

/// Coefficient `a_l(nu) = prod_{j=1..l} (4 nu^2 - (2j-1)^2) / (8^l l!)`.
pub fn bessel_k_asymptotic_coeff(nu: f64, l: usize) -> f64 {
    let m = 4.0 * nu * nu;
    let mut a = 1.0;
    for j in 1..=l {
        let o = (2 * j - 1) as f64;
        a *= (m - o * o) / (8.0 * j as f64);
    }
    a
}

/// `sqrt(pi/(2x)) e^{-x} sum_{l<L} a_l(nu)/x^l`.
pub fn bessel_k_asymptotic(nu: f64, x: f64, terms: usize) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain("bessel_k_asymptotic", "need x > 0"));
    }
    let mut s = 0.0;
    let mut xp = 1.0;
    for l in 0..terms {
        s += bessel_k_asymptotic_coeff(nu, l) / xp;
        xp *= x;
    }
    Ok((PI / (2.0 * x)).sqrt() * (-x).exp() * s)
}

/// `K_nu(w)` for complex `w` with `Re w > 0`, from
/// `e^{w} K_nu(w) = int_0^inf e^{-2w sinh^2(t/2)} cosh(nu t) dt`.
pub fn bessel_k_complex(nu: f64, w: Complex64) -> Result<ScaledComplex> {
    if !(w.re > 0.0) || !w.im.is_finite() {
        return Err(Error::domain("bessel_k_complex", "need Re w > 0"));
    }
    let nu = nu.abs();
    let integrand = |t: f64| -> Complex64 {
        let s = (0.5 * t).sinh();
        let a = -w * (2.0 * s * s);
        if a.re + nu * t < -745.0 {
            return Complex64::new(0.0, 0.0);
        }
        (a + nu * t).exp() * 0.5 + (a - nu * t).exp() * 0.5
    };
    let scale = (1.0 / w.re.sqrt()).min(1.0);
    let r = exp_sinh(integrand, 0.0, scale, QuadOptions::relative(1e-14))?;
    Ok(ScaledComplex::from_complex(r.value) * ScaledComplex::exp_of(-w))
}
