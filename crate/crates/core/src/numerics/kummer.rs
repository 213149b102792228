//! Confluent hypergeometric `U(a, b, x)` on the positive real axis.
//!
//! `U(a,b,x) = 1/Gamma(a) int_0^inf e^{-xt} t^{a-1} (1+t)^{b-a-1} dt`. The
//! integrand is unimodal; it is normalised by its peak value, cut where it has
//! dropped below `e^{-760}` and integrated piecewise on both sides of the peak.

#[allow(unused_imports)]
use num_traits::Float;

use super::gamma::log_gamma;
use super::quadrature::{tanh_sinh, QuadOptions};
use super::scaled::LogScaled;
use crate::error::{Error, Result};

const CUT: f64 = -760.0;

/// `U(a, b, x)` for `a > 0`, `x > 0`.
pub fn kummer_u(a: f64, b: f64, x: f64) -> Result<LogScaled> {
    if !(a > 0.0) || !(x > 0.0) || !a.is_finite() || !b.is_finite() || !x.is_finite() {
        return Err(Error::domain("kummer_u", "need a > 0, x > 0, finite b"));
    }
    let g = |t: f64| (a - 1.0) * t.ln() + (b - a - 1.0) * t.ln_1p() - x * t;
    // stationary point of g on (0, inf), if any
    let t_peak = if a > 1.0 {
        let p = x + 2.0 - b;
        let disc = (p * p + 4.0 * x * (a - 1.0)).sqrt();
        if p >= 0.0 {
            2.0 * (a - 1.0) / (p + disc)
        } else {
            (disc - p) / (2.0 * x)
        }
    } else {
        0.0
    };
    let g_ref = if t_peak > 0.0 { g(t_peak) } else { 0.0 };
    let h = |t: f64| {
        if t <= 0.0 {
            return if a == 1.0 { 1.0 } else { 0.0 };
        }
        let v = g(t) - g_ref;
        if v < -745.0 {
            0.0
        } else {
            v.exp()
        }
    };
    // right cut: g is decreasing beyond the peak
    let mut t_hi = (2.0 * t_peak).max(t_peak + 1.0 / x).max(1.0);
    let mut guard = 0;
    while g(t_hi) - g_ref > CUT {
        t_hi *= 2.0;
        guard += 1;
        if guard > 200 {
            return Err(Error::NonConvergence {
                op: "kummer_u",
                estimate: f64::INFINITY,
            });
        }
    }
    let opts = QuadOptions {
        abs_tol: 0.0,
        rel_tol: 1e-14,
        max_level: 12,
    };
    let map_err = |e: Error| match e {
        Error::NonConvergence { estimate, .. } => Error::NonConvergence {
            op: "kummer_u",
            estimate,
        },
        other => other,
    };
    let mut total = tanh_sinh(h, t_peak, t_hi, opts).map_err(map_err)?.value;
    if t_peak > 0.0 {
        let mut t_lo = 0.5 * t_peak;
        let mut guard = 0;
        while t_lo > 1e-300 && g(t_lo) - g_ref > CUT {
            t_lo *= 0.5;
            guard += 1;
            if guard > 2000 {
                break;
            }
        }
        let lo = if t_lo <= 1e-300 { 0.0 } else { t_lo };
        total += tanh_sinh(h, lo, t_peak, opts).map_err(map_err)?.value;
    }
    Ok(LogScaled::from_f64(total) * LogScaled::exp_of(g_ref - log_gamma(a)?))
}
