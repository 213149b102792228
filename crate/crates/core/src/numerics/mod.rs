//! Scale-safe arithmetic and the background special functions.

pub mod bessel;
pub mod gamma;
pub mod hypergeom;
pub mod kummer;
pub mod point;
pub mod quadrature;
pub mod scaled;
pub mod tridiag;

pub use bessel::{bessel_j, bessel_j_reduced, bessel_k, bessel_k_asymptotic, bessel_k_asymptotic_coeff, bessel_k_complex};
pub use gamma::{factorial, gamma, gamma_scaled, gamma_shifted, log_gamma, pochhammer};
pub use hypergeom::{pfq_2f2, pfq_2f2_contiguous};
pub use kummer::kummer_u;
pub use point::{ComplexPoint, HalfTurn};
pub use quadrature::{exp_sinh, quadrature, tanh_sinh, QuadOptions, QuadResult, QuadValue};
pub use scaled::{LogScaled, ScaledComplex};
pub use tridiag::symmetric_tridiagonal_eigenvalues;
