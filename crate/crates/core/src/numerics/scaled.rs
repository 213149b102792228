//! Overflow-free real and complex numbers.
//!
//! Both types keep a binary mantissa next to an unbounded `i64` exponent, so
//! products are one rounding away from exact and conversions back to `f64`
//! are exact whenever the value is representable. The natural-log magnitude
//! is exposed through [`LogScaled::logmag`].

use core::cmp::Ordering;
use core::ops::{Add, Div, Mul, Neg, Sub};

use libm::{frexp, ldexp};
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

const LN2_HI: f64 = 6.931_471_803_691_238_2e-1;
const LN2_LO: f64 = 1.908_214_929_270_587_7e-10;

// exponents beyond these saturate on conversion to f64
const EXP_OVERFLOW: i64 = 1100;
const EXP_UNDERFLOW: i64 = -1200;

fn ldexp_sat(m: f64, e: i64) -> f64 {
    if e > EXP_OVERFLOW {
        m * f64::INFINITY
    } else if e < EXP_UNDERFLOW {
        m * 0.0
    } else {
        ldexp(m, e as i32)
    }
}

/// Splits `l` as `k ln 2 + r` with `0 <= r < ln 2` (Cody-Waite).
fn split_ln(l: f64) -> (i64, f64) {
    let k = (l / core::f64::consts::LN_2).floor();
    let r = (l - k * LN2_HI) - k * LN2_LO;
    (k as i64, r)
}

/// A signed real number that never overflows or underflows.
#[derive(Debug, Clone, Copy)]
pub struct LogScaled {
    // zero, or 0.5 <= |mant| < 1; non-finite values are carried as-is
    mant: f64,
    exp: i64,
}

impl LogScaled {
    pub const ZERO: Self = Self { mant: 0.0, exp: 0 };
    pub const ONE: Self = Self { mant: 0.5, exp: 1 };

    fn normalized(mant: f64, exp: i64) -> Self {
        if mant == 0.0 {
            return Self::ZERO;
        }
        if !mant.is_finite() {
            return Self { mant, exp: 0 };
        }
        let (m, e) = frexp(mant);
        Self {
            mant: m,
            exp: exp + e as i64,
        }
    }

    pub fn from_f64(x: f64) -> Self {
        Self::normalized(x, 0)
    }

    /// `sign * exp(logmag)`; `logmag = -inf` or `sign = 0` gives zero.
    pub fn new(sign: i8, logmag: f64) -> Self {
        if sign == 0 || logmag == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        if logmag.is_nan() {
            return Self {
                mant: f64::NAN,
                exp: 0,
            };
        }
        if logmag == f64::INFINITY {
            return Self::from_f64(f64::from(sign.signum()) * f64::INFINITY);
        }
        let (k, r) = split_ln(logmag);
        Self::normalized(f64::from(sign.signum()) * r.exp(), k)
    }

    /// `exp(l)`.
    pub fn exp_of(l: f64) -> Self {
        Self::new(1, l)
    }

    pub fn sign(&self) -> i8 {
        if self.mant > 0.0 {
            1
        } else if self.mant < 0.0 {
            -1
        } else {
            0
        }
    }

    /// Natural log of the magnitude (`-inf` for zero).
    pub fn logmag(&self) -> f64 {
        if self.mant == 0.0 {
            return f64::NEG_INFINITY;
        }
        self.mant.abs().ln() + self.exp as f64 * core::f64::consts::LN_2
    }

    pub fn to_f64(&self) -> f64 {
        ldexp_sat(self.mant, self.exp)
    }

    pub fn is_zero(&self) -> bool {
        self.mant == 0.0
    }

    pub fn is_finite(&self) -> bool {
        self.mant.is_finite()
    }

    pub fn abs(self) -> Self {
        Self {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    pub fn recip(self) -> Self {
        Self::normalized(1.0 / self.mant, -self.exp)
    }

    pub fn sqrt(self) -> Self {
        if self.mant < 0.0 {
            return Self {
                mant: f64::NAN,
                exp: 0,
            };
        }
        if self.exp % 2 == 0 {
            Self::normalized(self.mant.sqrt(), self.exp / 2)
        } else {
            Self::normalized((2.0 * self.mant).sqrt(), (self.exp - 1) / 2)
        }
    }

    pub fn powi(self, k: i32) -> Self {
        let mut base = self;
        let mut acc = Self::ONE;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        if k < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    pub fn scale(self, x: f64) -> Self {
        Self::normalized(self.mant * x, self.exp)
    }

    /// Compares magnitudes.
    pub fn cmp_abs(&self, other: &Self) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => self
                .exp
                .cmp(&other.exp)
                .then(self.mant.abs().total_cmp(&other.mant.abs())),
        }
    }
}

impl PartialEq for LogScaled {
    fn eq(&self, other: &Self) -> bool {
        self.mant == other.mant && (self.mant == 0.0 || self.exp == other.exp)
    }
}

impl PartialOrd for LogScaled {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (*self - *other).mant.partial_cmp(&0.0)
    }
}

impl From<f64> for LogScaled {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl Mul for LogScaled {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::normalized(self.mant * rhs.mant, self.exp + rhs.exp)
    }
}

impl Mul<f64> for LogScaled {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl Div for LogScaled {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        Self::normalized(self.mant / rhs.mant, self.exp - rhs.exp)
    }
}

impl Neg for LogScaled {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            mant: -self.mant,
            exp: self.exp,
        }
    }
}

impl Add for LogScaled {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.mant == 0.0 {
            return rhs;
        }
        if rhs.mant == 0.0 {
            return self;
        }
        let (big, small) = if self.exp >= rhs.exp {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let shift = small.exp - big.exp;
        if shift < -1100 {
            return big;
        }
        Self::normalized(big.mant + ldexp(small.mant, shift as i32), big.exp)
    }
}

impl Sub for LogScaled {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

/// A complex number stored as a scaled mantissa and an unbounded binary exponent.
///
/// Equivalent to a log-magnitude plus unit phase, see [`ScaledComplex::logmag`]
/// and [`ScaledComplex::phase`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledComplex {
    // zero, or 0.5 <= max(|re|, |im|) < 1
    mant: Complex64,
    exp: i64,
}

impl ScaledComplex {
    pub const ZERO: Self = Self {
        mant: Complex64::new(0.0, 0.0),
        exp: 0,
    };
    pub const ONE: Self = Self {
        mant: Complex64::new(0.5, 0.0),
        exp: 1,
    };

    fn normalized(mant: Complex64, exp: i64) -> Self {
        let big = mant.re.abs().max(mant.im.abs());
        if big == 0.0 {
            return Self::ZERO;
        }
        if !big.is_finite() {
            return Self { mant, exp: 0 };
        }
        let (_, e) = frexp(big);
        Self {
            mant: Complex64::new(ldexp(mant.re, -e), ldexp(mant.im, -e)),
            exp: exp + e as i64,
        }
    }

    pub fn from_complex(z: Complex64) -> Self {
        Self::normalized(z, 0)
    }

    /// `mant * 2^exp2`.
    pub fn from_parts(mant: Complex64, exp2: i64) -> Self {
        Self::normalized(mant, exp2)
    }

    /// `exp(w)` for complex `w`.
    pub fn exp_of(w: Complex64) -> Self {
        if w.re == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        let (k, r) = split_ln(w.re);
        Self::normalized(Complex64::from_polar(r.exp(), w.im), k)
    }

    /// Natural log of the modulus (`-inf` for zero).
    pub fn logmag(&self) -> f64 {
        let a = self.mant.norm();
        if a == 0.0 {
            return f64::NEG_INFINITY;
        }
        a.ln() + self.exp as f64 * core::f64::consts::LN_2
    }

    /// Unit complex number `z/|z|` (zero for zero).
    pub fn phase(&self) -> Complex64 {
        let a = self.mant.norm();
        if a == 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            self.mant / a
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(
            ldexp_sat(self.mant.re, self.exp),
            ldexp_sat(self.mant.im, self.exp),
        )
    }

    pub fn re(&self) -> LogScaled {
        LogScaled::normalized(self.mant.re, self.exp)
    }

    pub fn im(&self) -> LogScaled {
        LogScaled::normalized(self.mant.im, self.exp)
    }

    pub fn norm(&self) -> LogScaled {
        LogScaled::normalized(self.mant.norm(), self.exp)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.re == 0.0 && self.mant.im == 0.0
    }

    pub fn conj(self) -> Self {
        Self {
            mant: self.mant.conj(),
            exp: self.exp,
        }
    }

    pub fn scale(self, x: Complex64) -> Self {
        Self::normalized(self.mant * x, self.exp)
    }

    /// `self / other` as a plain complex number.
    pub fn ratio(self, other: Self) -> Complex64 {
        (self / other).to_complex()
    }
}

impl From<LogScaled> for ScaledComplex {
    fn from(x: LogScaled) -> Self {
        Self::normalized(Complex64::new(x.mant, 0.0), x.exp)
    }
}

impl From<Complex64> for ScaledComplex {
    fn from(z: Complex64) -> Self {
        Self::from_complex(z)
    }
}

impl Mul for ScaledComplex {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::normalized(self.mant * rhs.mant, self.exp + rhs.exp)
    }
}

impl Mul<LogScaled> for ScaledComplex {
    type Output = Self;
    fn mul(self, rhs: LogScaled) -> Self {
        Self::normalized(self.mant * rhs.mant, self.exp + rhs.exp)
    }
}

impl Mul<Complex64> for ScaledComplex {
    type Output = Self;
    fn mul(self, rhs: Complex64) -> Self {
        self.scale(rhs)
    }
}

impl Mul<f64> for ScaledComplex {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        Self::normalized(self.mant * rhs, self.exp)
    }
}

impl Div for ScaledComplex {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        Self::normalized(self.mant / rhs.mant, self.exp - rhs.exp)
    }
}

impl Div<LogScaled> for ScaledComplex {
    type Output = Self;
    fn div(self, rhs: LogScaled) -> Self {
        Self::normalized(self.mant / rhs.mant, self.exp - rhs.exp)
    }
}

impl Neg for ScaledComplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            mant: -self.mant,
            exp: self.exp,
        }
    }
}

impl Add for ScaledComplex {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (big, small) = if self.exp >= rhs.exp {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let shift = small.exp - big.exp;
        if shift < -1100 {
            return big;
        }
        let s = shift as i32;
        let m = Complex64::new(
            big.mant.re + ldexp(small.mant.re, s),
            big.mant.im + ldexp(small.mant.im, s),
        );
        Self::normalized(m, big.exp)
    }
}

impl Sub for ScaledComplex {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_exact() {
        for &x in &[1.0, -3.5, 1e-300, 7.25e300, f64::MIN_POSITIVE, -2.0f64.powi(-1070)] {
            assert_eq!(LogScaled::from_f64(x).to_f64(), x);
        }
        assert_eq!(LogScaled::ZERO.sign(), 0);
        assert_eq!(LogScaled::ONE.to_f64(), 1.0);
    }

    #[test]
    fn logmag_and_sign() {
        let x = LogScaled::from_f64(-24.0);
        assert_eq!(x.sign(), -1);
        assert!((x.logmag() - 24f64.ln()).abs() < 1e-15);
        let y = LogScaled::new(1, 1.0e6);
        assert!((y.logmag() - 1.0e6).abs() < 1e-9);
        let z = y + y;
        assert!((z.logmag() - 1.0e6 - 2f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn far_apart_addition_keeps_larger() {
        let a = LogScaled::new(1, 5000.0);
        let b = LogScaled::new(-1, 1.0);
        assert_eq!(a + b, a);
        assert_eq!((b + a).logmag(), a.logmag());
    }

    #[test]
    fn saturating_conversion() {
        assert_eq!(LogScaled::new(1, 800.0).to_f64(), f64::INFINITY);
        assert_eq!(LogScaled::new(-1, -800.0).to_f64(), 0.0);
    }

    #[test]
    fn sqrt_and_powi() {
        let x = LogScaled::from_f64(8.0);
        assert_eq!(x.sqrt().to_f64(), 8f64.sqrt());
        assert_eq!(x.powi(3).to_f64(), 512.0);
        assert_eq!(x.powi(-1).to_f64(), 0.125);
    }

    #[test]
    fn ordering() {
        let a = LogScaled::from_f64(-2.0);
        let b = LogScaled::from_f64(1.0);
        assert!(a < b);
        assert_eq!(a.cmp_abs(&b), Ordering::Greater);
    }

    #[test]
    fn complex_basics() {
        let z = ScaledComplex::from_complex(Complex64::new(3.0, -4.0));
        assert!((z.logmag() - 5f64.ln()).abs() < 1e-15);
        assert_eq!(z.to_complex(), Complex64::new(3.0, -4.0));
        let w = ScaledComplex::exp_of(Complex64::new(2000.0, 1.0));
        let q = w / ScaledComplex::exp_of(Complex64::new(1999.0, 0.0));
        let expected = Complex64::new(1.0, 1.0).exp();
        assert!((q.to_complex() - expected).norm() < 1e-12);
        let s = z + (-z);
        assert!(s.is_zero());
    }
}
