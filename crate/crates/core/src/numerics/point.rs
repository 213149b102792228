//! Points of the slit plane `C \ [0, inf)` and their branch bookkeeping.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A point off the cut `[0, inf)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPoint {
    pub re: f64,
    pub im: f64,
}

/// The factor `e^{+pi i}` or `e^{-pi i}` that maps `z` onto the positive axis side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfTurn {
    Plus,
    Minus,
}

impl ComplexPoint {
    /// Rejects points on `[0, inf)` and non-finite input.
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !(re.is_finite() && im.is_finite()) || (im == 0.0 && re >= 0.0) {
            return Err(Error::Branch {
                op: "ComplexPoint::new",
                re,
                im,
            });
        }
        Ok(Self { re, im })
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    pub fn z(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    /// Principal argument in `(-pi, pi]`.
    pub fn arg(&self) -> f64 {
        self.z().arg()
    }

    /// `+pi i` for `-pi < arg z <= 0`, `-pi i` for `0 < arg z <= pi`.
    pub fn half_turn(&self) -> HalfTurn {
        if self.arg() <= 0.0 {
            HalfTurn::Plus
        } else {
            HalfTurn::Minus
        }
    }

    /// `z e^{+-pi i}`, numerically `-z`; its argument lies in `(-pi, pi)`, so
    /// principal powers of the result are the ones the branch rule selects.
    pub fn rotated(&self) -> Complex64 {
        -self.z()
    }

    /// Principal `(-z)^p`.
    pub fn neg_pow(&self, p: f64) -> Complex64 {
        self.rotated().powf(p)
    }

    /// Principal `sqrt(-z)`, with positive real part.
    pub fn neg_sqrt(&self) -> Complex64 {
        self.rotated().sqrt()
    }
}

pub(crate) fn checked_point(op: &'static str, z: Complex64) -> Result<ComplexPoint> {
    ComplexPoint::from_complex(z).map_err(|_| Error::Branch {
        op,
        re: z.re,
        im: z.im,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_cut() {
        assert!(ComplexPoint::new(0.0, 0.0).is_err());
        assert!(ComplexPoint::new(2.0, 0.0).is_err());
        assert!(ComplexPoint::new(2.0, 1e-300).is_ok());
        assert!(ComplexPoint::new(-1.0, 0.0).is_ok());
    }

    #[test]
    fn branch_rule() {
        assert_eq!(ComplexPoint::new(-1.0, 0.0).unwrap().half_turn(), HalfTurn::Minus);
        assert_eq!(ComplexPoint::new(1.0, -1.0).unwrap().half_turn(), HalfTurn::Plus);
        assert_eq!(ComplexPoint::new(1.0, 1.0).unwrap().half_turn(), HalfTurn::Minus);
    }

    #[test]
    fn negative_axis_powers_are_real() {
        let p = ComplexPoint::new(-4.0, 0.0).unwrap();
        assert_eq!(p.neg_sqrt(), Complex64::new(2.0, 0.0));
        assert!(p.neg_pow(0.25).im.abs() < 1e-16);
    }
}
