//! Gamma function, factorials and Pochhammer symbols.

#[allow(unused_imports)]
use num_traits::Float;

use super::scaled::LogScaled;
use crate::error::{Error, Result};

/// `ln Gamma(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("log_gamma", "x must be positive and finite"));
    }
    Ok(libm::lgamma_r(x).0)
}

/// `Gamma(x)` for `x > 0`, exact to a few ulp in the representable range.
pub fn gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("gamma", "x must be positive and finite"));
    }
    Ok(libm::tgamma(x))
}

/// `Gamma(x)` without overflow.
///
/// Shifts the argument into `(150, 151]` and multiplies the remaining factors
/// one by one, which keeps the rounding error at `O(sqrt(k))` ulp instead of
/// `O(x)` ulp for `exp(lgamma)`.
pub fn gamma_scaled(x: f64) -> Result<LogScaled> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("gamma_scaled", "x must be positive and finite"));
    }
    if x <= 151.0 {
        return Ok(LogScaled::from_f64(libm::tgamma(x)));
    }
    if x > 1.0e7 {
        return Ok(LogScaled::exp_of(log_gamma(x)?));
    }
    let k = (x - 150.0).floor() as u64;
    let base = x - k as f64;
    Ok(LogScaled::from_f64(libm::tgamma(base)) * pochhammer(base, k))
}

/// `(a)_n = a (a+1) ... (a+n-1)`.
pub fn pochhammer(a: f64, n: u64) -> LogScaled {
    let mut acc = LogScaled::ONE;
    let mut chunk = 1.0f64;
    for k in 0..n {
        chunk *= a + k as f64;
        if chunk.abs() > 1e280 || chunk.abs() < 1e-280 {
            acc = acc * LogScaled::from_f64(chunk);
            chunk = 1.0;
        }
    }
    acc * LogScaled::from_f64(chunk)
}

/// `n!`.
pub fn factorial(n: u64) -> LogScaled {
    pochhammer(1.0, n)
}

/// `Gamma(n + a + 1) = Gamma(a + 1) (a + 1)_n`, for `a > -1`.
pub fn gamma_shifted(a: f64, n: u64) -> Result<LogScaled> {
    Ok(gamma_scaled(a + 1.0)? * pochhammer(a + 1.0, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(log_gamma(1.0).unwrap(), 0.0);
        assert!((log_gamma(5.0).unwrap() - 24f64.ln()).abs() < 1e-15);
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-1.5).is_err());
        assert_eq!(factorial(5).to_f64(), 120.0);
        assert_eq!(factorial(0).to_f64(), 1.0);
    }

    #[test]
    fn scaled_gamma_matches_log_gamma() {
        for &x in &[0.5, 10.0, 151.5, 171.5, 400.25, 8192.5] {
            let g = gamma_scaled(x).unwrap();
            let l = log_gamma(x).unwrap();
            assert!((g.logmag() - l).abs() < 1e-12 * l.abs().max(1.0), "{x}");
        }
    }

    #[test]
    fn pochhammer_sign() {
        assert_eq!(pochhammer(-2.0, 2).to_f64(), 2.0);
        assert!(pochhammer(-2.0, 3).is_zero());
        assert_eq!(pochhammer(-0.5, 1).to_f64(), -0.5);
    }

    #[test]
    fn gamma_shifted_is_product() {
        let g = gamma_shifted(0.5, 3).unwrap().to_f64();
        let expected = gamma(4.5).unwrap();
        assert!((g - expected).abs() < 1e-14 * expected);
    }
}
