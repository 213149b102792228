//! Truncated and terminating `2F2` series.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

fn nonpositive_integer(a: f64) -> Option<usize> {
    if a <= 0.0 && a == a.round() && a > -1e9 {
        Some((-a) as usize)
    } else {
        None
    }
}

/// `sum_k (a1)_k (a2)_k / ((b1)_k (b2)_k) z^k / k!`.
///
/// Terminates after `-a1` terms when `a1` is a nonpositive integer; otherwise
/// `nterms` must be given. A vanishing denominator Pochhammer is an error unless
/// a numerator parameter has already terminated the series.
pub fn pfq_2f2(a1: f64, a2: f64, b1: f64, b2: f64, z: Complex64, nterms: Option<usize>) -> Result<Complex64> {
    let last = match (nonpositive_integer(a1), nterms) {
        (Some(m), Some(n)) => m.min(n.saturating_sub(1)),
        (Some(m), None) => m,
        (None, Some(n)) => n.saturating_sub(1),
        (None, None) => {
            return Err(Error::domain(
                "pfq_2f2",
                "series does not terminate; give nterms",
            ))
        }
    };
    let stop_a2 = nonpositive_integer(a2);
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..last {
        if stop_a2.is_some_and(|m| k >= m) {
            break;
        }
        let fk = k as f64;
        let den = (b1 + fk) * (b2 + fk) * (fk + 1.0);
        if den == 0.0 {
            return Err(Error::pole("pfq_2f2", "denominator Pochhammer vanishes"));
        }
        term = term * z * ((a1 + fk) * (a2 + fk) / den);
        sum += term;
    }
    Ok(sum)
}

/// `2F2(-n, 1+e; b, e; z)` with the contiguous ratio `(1+e)_k/(e)_k = (k+e)/e`,
/// so negative integer `e` is harmless. Requires `e != 0` and `b` not a
/// nonpositive integer `> -n`.
pub fn pfq_2f2_contiguous(n: usize, b: f64, e: f64, z: Complex64) -> Result<Complex64> {
    if e == 0.0 || !e.is_finite() {
        return Err(Error::degenerate("pfq_2f2_contiguous", "e must be finite and nonzero"));
    }
    let mut base = Complex64::new(1.0, 0.0);
    let mut sum = base;
    for k in 0..n {
        let fk = k as f64;
        let den = (b + fk) * (fk + 1.0);
        if den == 0.0 {
            return Err(Error::pole("pfq_2f2_contiguous", "denominator Pochhammer vanishes"));
        }
        base = base * z * ((fk - n as f64) / den);
        sum += base * ((fk + 1.0 + e) / e);
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_cases() {
        let z = Complex64::new(0.3, -2.0);
        assert_eq!(pfq_2f2(0.0, 2.0, 1.0, 1.0, z, None).unwrap(), Complex64::new(1.0, 0.0));
        let v = pfq_2f2(-1.0, 2.0, 1.0, 1.0, z, None).unwrap();
        assert!((v - (1.0 - 2.0 * z)).norm() < 1e-15);
    }

    #[test]
    fn pole_detected() {
        assert!(pfq_2f2(-3.0, 1.0, -1.0, 2.0, Complex64::new(1.0, 0.0), None).is_err());
        assert!(pfq_2f2(0.5, 1.0, 1.0, 2.0, Complex64::new(1.0, 0.0), None).is_err());
    }

    #[test]
    fn truncated_series_reduces_to_exponential() {
        // 2F2(a, b; a, b; z) = e^z
        let z = Complex64::new(1.5, 0.5);
        let v = pfq_2f2(0.7, 1.3, 0.7, 1.3, z, Some(60)).unwrap();
        assert!((v - z.exp()).norm() < 1e-14 * z.exp().norm());
    }

    #[test]
    fn contiguous_form_matches_general() {
        let z = Complex64::new(-0.7, 1.1);
        for &e in &[0.37, 2.5, -4.2] {
            let a = pfq_2f2_contiguous(5, 1.5, e, z).unwrap();
            let b = pfq_2f2(-5.0, 1.0 + e, 1.5, e, z, None).unwrap();
            assert!((a - b).norm() < 1e-13 * b.norm().max(1.0), "{e}");
        }
        // negative integer e: general form has a pole, contiguous form does not
        assert!(pfq_2f2_contiguous(5, 1.0, -2.0, z).is_ok());
    }
}
