use geronimus_core::numerics::{
    bessel_k, bessel_k_asymptotic, exp_sinh, kummer_u, pfq_2f2, LogScaled, QuadOptions,
};
use geronimus_core::Complex64;
use proptest::prelude::*;

fn pow2(e: i32) -> LogScaled {
    // 2^e exactly, composed from in-range factors
    let mut acc = LogScaled::ONE;
    let mut left = e;
    while left != 0 {
        let step = left.clamp(-1000, 1000);
        acc = acc * LogScaled::from_f64(2f64.powi(step));
        left -= step;
    }
    acc
}

fn ulps(a: f64, b: f64) -> u64 {
    (a.to_bits() as i64 - b.to_bits() as i64).unsigned_abs()
}

fn signed_mag(sign: bool, l: f64) -> f64 {
    let m = l.exp();
    if sign {
        -m
    } else {
        m
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn log_scaled_products_are_correctly_rounded(
        lx in -600.0f64..600.0, ly in -600.0f64..600.0, sx: bool, sy: bool,
    ) {
        let x = signed_mag(sx, lx);
        let y = signed_mag(sy, ly);
        let ex = x.abs().log2().floor() as i32;
        let ey = y.abs().log2().floor() as i32;
        // reduced operands are exact, their product rounds once
        let xr = x / 2f64.powi(ex);
        let yr = y / 2f64.powi(ey);
        let expected = xr * yr;
        let prod = LogScaled::from_f64(x) * LogScaled::from_f64(y);
        let got = (prod / pow2(ex + ey)).to_f64();
        prop_assert!(ulps(got, expected) <= 2, "{x} * {y}: {got} vs {expected}");
        let back = (prod / LogScaled::from_f64(y)).to_f64();
        prop_assert!(ulps(back, x) <= 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kummer_u_satisfies_contiguous_relation(a in 2u32..=50, b in -0.9f64..3.0, x in 0.2f64..12.0) {
        let a = a as f64;
        let um = kummer_u(a - 1.0, b, x).unwrap();
        let u0 = kummer_u(a, b, x).unwrap();
        let up = kummer_u(a + 1.0, b, x).unwrap();
        let t0 = u0 * (b - 2.0 * a - x);
        let t1 = up * (a * (a - b + 1.0));
        let res = um + t0 + t1;
        let scale = [um, t0, t1].iter().map(|t| t.logmag()).fold(f64::NEG_INFINITY, f64::max);
        let rel = if res.is_zero() { 0.0 } else { (res.logmag() - scale).exp() };
        prop_assert!(rel < 1e-7, "a={a} b={b} x={x}: {rel:e}");
    }

    #[test]
    fn kummer_u_matches_integral_of_laplace_form(a in 0.3f64..6.0, x in 0.3f64..8.0) {
        // U(a, a+1, x) = x^{-a}
        let u = kummer_u(a, a + 1.0, x).unwrap().to_f64();
        let exact = x.powf(-a);
        prop_assert!((u - exact).abs() < 1e-10 * exact);
    }

    #[test]
    fn bessel_k_asymptotic_improves_with_terms(nu in 0.0f64..2.5, x in 20.0f64..80.0) {
        let exact = bessel_k(nu, x).unwrap().to_f64();
        let errs: Vec<f64> = (1..=4)
            .map(|l| (bessel_k_asymptotic(nu, x, l).unwrap() - exact).abs() / exact)
            .collect();
        for w in errs.windows(2) {
            // once the truncation error reaches rounding level there is nothing left to gain
            prop_assert!(w[1] <= w[0] || w[1] < 1e-13, "nu={nu} x={x}: {errs:?}");
        }
    }

    #[test]
    fn terminating_2f2_is_a_polynomial_of_degree_n(
        n in 0usize..25, a2 in -3.0f64..3.0, b1 in 0.5f64..4.0, b2 in 0.5f64..4.0,
        re in -3.0f64..3.0, im in -3.0f64..3.0,
    ) {
        let z = Complex64::new(re, im);
        let a1 = -(n as f64);
        let exact = pfq_2f2(a1, a2, b1, b2, z, None).unwrap();
        let padded = pfq_2f2(a1, a2, b1, b2, z, Some(n + 20)).unwrap();
        prop_assert_eq!(exact, padded);

        // explicit coefficients, Horner
        let mut coeffs = vec![1.0f64];
        for k in 0..n {
            let fk = k as f64;
            let next = coeffs[k] * (a1 + fk) * (a2 + fk) / ((b1 + fk) * (b2 + fk) * (fk + 1.0));
            coeffs.push(next);
        }
        let horner = coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
        let scale: f64 = coeffs.iter().enumerate().map(|(k, c)| c.abs() * z.norm().powi(k as i32)).sum();
        prop_assert!((horner - exact).norm() <= 1e-13 * scale.max(1.0));
    }
}

#[test]
fn half_line_quadrature_of_gamma_integrand() {
    for &a in &[-0.5, 0.0, 0.5, 2.0, 7.5] {
        let r = exp_sinh(
            |t: f64| if t > 0.0 { (a * t.ln() - t).exp() } else { 0.0 },
            0.0,
            1.0,
            QuadOptions::relative(1e-13),
        )
        .unwrap();
        let exact = libm::tgamma(a + 1.0);
        assert!((r.value - exact).abs() < 1e-12 * exact, "a={a}: {} vs {exact}", r.value);
    }
}
