use crate::error::{Error, Result};

/// Which of the two large-`n` regimes applies: a positive mass at `c` or none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    NPositive,
    NZero,
}

impl Branch {
    /// `+1` for `N > 0`, `-1` for `N = 0`; the sign in front of `sqrt(-c)`
    /// in every large-`n` formula.
    pub fn sign(self) -> f64 {
        match self {
            Branch::NPositive => 1.0,
            Branch::NZero => -1.0,
        }
    }
}

/// `(alpha, c, N)` with `alpha > -1`, `c < 0`, `N >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeronimusParams {
    alpha: f64,
    c: f64,
    mass: f64,
}

impl GeronimusParams {
    pub fn new(alpha: f64, c: f64, mass: f64) -> Result<Self> {
        if !(alpha > -1.0) || !alpha.is_finite() {
            return Err(Error::domain("GeronimusParams", "alpha must be finite and > -1"));
        }
        if !(c < 0.0) || !c.is_finite() {
            return Err(Error::domain("GeronimusParams", "c must be finite and < 0"));
        }
        if !(mass >= 0.0) || !mass.is_finite() {
            return Err(Error::domain("GeronimusParams", "N must be finite and >= 0"));
        }
        Ok(Self { alpha, c, mass })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// The mass `N` at `c`.
    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn branch(&self) -> Branch {
        if self.mass > 0.0 {
            Branch::NPositive
        } else {
            Branch::NZero
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(GeronimusParams::new(0.0, -1.0, 0.0).is_ok());
        assert!(GeronimusParams::new(-1.0, -1.0, 0.0).is_err());
        assert!(GeronimusParams::new(0.0, 0.0, 0.0).is_err());
        assert!(GeronimusParams::new(0.0, 1.0, 0.0).is_err());
        assert!(GeronimusParams::new(0.0, -1.0, -1e-3).is_err());
        assert!(GeronimusParams::new(f64::NAN, -1.0, 0.0).is_err());
        assert_eq!(GeronimusParams::new(0.0, -1.0, 2.0).unwrap().branch(), Branch::NPositive);
        assert_eq!(Branch::NZero.sign(), -1.0);
    }
}
