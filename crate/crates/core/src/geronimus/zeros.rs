use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::lambda::LambdaTable;
use super::params::GeronimusParams;
use super::recurrence::PerturbedRecurrence;
use crate::error::{Error, Result};
use crate::numerics::tridiag::symmetric_tridiagonal_eigenvalues;

/// Largest degree accepted by [`zeros_q`].
pub const MAX_ZEROS_DEGREE: usize = 60;

/// Zeros of `Q^_n`, ascending: eigenvalues of the Jacobi matrix with diagonal
/// `beta~_0 .. beta~_{n-1}` and off-diagonal `sqrt(gamma~_1) .. sqrt(gamma~_{n-1})`.
pub fn zeros_q(n: usize, params: GeronimusParams) -> Result<Vec<f64>> {
    if n > MAX_ZEROS_DEGREE {
        return Err(Error::DegreeOverflow {
            op: "zeros_Q",
            degree: n,
            limit: MAX_ZEROS_DEGREE,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let table = LambdaTable::new(params, n)?;
    let rec = PerturbedRecurrence::build(n - 1, &table)?;
    let off: Vec<f64> = rec.gamma_t[1..].iter().map(|g| g.sqrt()).collect();
    symmetric_tridiagonal_eigenvalues(&rec.beta_t, &off)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn p(a: f64, c: f64, m: f64) -> GeronimusParams {
        GeronimusParams::new(a, c, m).unwrap()
    }

    #[test]
    fn single_zero() {
        let params = p(0.5, -1.0, 2.0);
        let t = LambdaTable::new(params, 1).unwrap();
        let z = zeros_q(1, params).unwrap();
        assert_eq!(z.len(), 1);
        assert!((z[0] - (1.5 - t.lambda(1))).abs() < 1e-14);
    }

    #[test]
    fn zeros_are_roots_and_interlace() {
        let params = p(0.0, -1.0, 1.0);
        let t = LambdaTable::new(params, 21).unwrap();
        let mut prev = zeros_q(1, params).unwrap();
        for n in 2..=21 {
            let z = zeros_q(n, params).unwrap();
            assert!(z.iter().all(|&x| x > params.c()));
            assert!(z.windows(2).all(|w| w[0] < w[1]));
            for k in 0..prev.len() {
                assert!(z[k] < prev[k] && prev[k] < z[k + 1], "{n} {k}");
            }
            for &x in &z {
                let q = t.eval_q(n, Complex64::new(x, 0.0)).unwrap();
                let dq = (t.eval_q(n, Complex64::new(x * (1.0 + 1e-7) + 1e-7, 0.0)).unwrap() - q).norm();
                assert!(q.norm() < dq, "{n} {x}");
            }
            prev = z;
        }
        assert!(zeros_q(61, params).is_err());
    }
}
