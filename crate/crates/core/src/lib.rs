//! Laguerre-Geronimus orthogonal polynomials.
//!
//! The family `Q_n` is orthogonal with respect to `x^a e^{-x}/(x-c) dx + N delta_c`
//! on `[0, inf)` with `c < 0`. Everything is expressed through the classical
//! monic Laguerre polynomials, the Laguerre functions of the second kind and a
//! single connection coefficient per degree.
//!
//! The crate is `no_std` (it needs `alloc`). Large factorial-scale magnitudes
//! are carried in [`LogScaled`] and [`ScaledComplex`].

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod asymptotics;
pub mod error;
pub mod geronimus;
pub mod laguerre;
pub mod numerics;
pub mod second_kind;

pub use error::{Error, Result};
pub use geronimus::GeronimusParams;

pub use num_complex::Complex64;
pub use numerics::{ComplexPoint, LogScaled, ScaledComplex};
