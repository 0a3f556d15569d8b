mod common;

use common::{assert_abs, assert_rel};
use fraclag_core::quadrature::*;
use fraclag_core::specfun::{gamma, ln_gamma_value};
use std::f64::consts::PI;

#[test]
fn gauss_legendre_exactness() {
    for n in [2usize, 5, 16, 33] {
        let gl = gauss_legendre::<f64>(n);
        let wsum: f64 = gl.iter().map(|p| p.1).sum();
        assert_abs(wsum, 2.0, 1e-14);
        for k in 0..(2 * n) {
            let got: f64 = gl.iter().map(|&(x, w)| w * x.powi(k as i32)).sum();
            let want = if k % 2 == 1 {
                0.0
            } else {
                2.0 / (k as f64 + 1.0)
            };
            assert_abs(got, want, 1e-13);
        }
    }
}

#[test]
fn composite_rule() {
    let r = QuadratureRule::<f64>::composite(0.0, PI, 8, 16);
    assert_eq!(r.len(), 128);
    assert_abs(r.integrate(|x| x.sin()), 2.0, 1e-14);
    let mu = r.mu_weights(0.5).unwrap();
    let got: f64 = mu.iter().sum();
    assert_rel(got, PI.powi(3) / 3.0, 1e-13);
}

#[test]
fn adaptive_endpoint_singularities() {
    let r = Integrator::new(1e-12)
        .left_exponent(-0.5)
        .integrate(|x: f64| x.powf(-0.5) * x.cos(), 0.0, 1.0)
        .unwrap();
    // mpmath quad(cos(x)/sqrt(x), [0,1])
    assert_rel(r.value, 1.809_048_475_800_538_574_1, 1e-11);
    let r = Integrator::new(1e-12)
        .right_exponent(-0.3)
        .integrate(|x: f64| (1.0 - x).powf(-0.3), 0.0, 1.0)
        .unwrap();
    assert_rel(r.value, 1.0 / 0.7, 1e-10);
    let r = Integrator::new(1e-12)
        .integrate(|x: f64| (-x * x).exp(), 0.0, f64::INFINITY)
        .unwrap();
    assert_rel(r.value, PI.sqrt() / 2.0, 1e-12);
    let r = adaptive_integrate(|x: f64| x.powi(3), 2.0, 0.0, 1e-12).unwrap();
    assert_rel(r.value, -4.0, 1e-14);
}

#[test]
fn adaptive_reports_failure() {
    let err = Integrator::new(1e-14)
        .max_intervals(3)
        .integrate(|x: f64| (50.0 * x).sin().abs(), 0.0, 10.0)
        .unwrap_err();
    assert!(err.is_accuracy());
    let err = adaptive_integrate(|x: f64| 1.0 / x, 0.0, 1.0, 1e-10).unwrap_err();
    assert!(!err.is_accuracy());
}

#[test]
fn radial_rule_exactness() {
    for &alpha in &[-0.4f64, 0.0, 0.5, 1.3, 4.0] {
        for n in [2usize, 10, 40, 120] {
            let rule = radial_rule(alpha, n).unwrap();
            assert_eq!(rule.len(), n);
            // ∫ r^{2k} e^{-r²} dμ_α = Γ(k+α+1)/2, exact for k < 2n
            for k in [0usize, 1, n / 2, 2 * n - 1] {
                let got = rule.integrate(|r| {
                    (2.0 * k as f64 * r.ln() - r * r - 0.5 * ln_gamma_value(k as f64 + alpha + 1.0))
                        .exp()
                });
                let want = 0.5 * (0.5 * ln_gamma_value(k as f64 + alpha + 1.0)).exp();
                assert_rel(got, want, 1e-11 * (1.0 + k as f64 / 10.0));
            }
        }
    }
    assert!(radial_rule(-0.6f64, 10).is_err());
    assert!(radial_rule(0.0f64, 1).is_err());
}

#[test]
fn radial_rule_mu_weights() {
    let rule = radial_rule(0.5f64, 20).unwrap();
    assert!(rule.mu_weights(0.5).is_ok());
    assert!(rule.mu_weights(0.25).is_err());
    let gauss = rule.integrate(|r| (-r * r).exp());
    assert_rel(gauss, gamma(1.5f64).unwrap() / 2.0, 1e-13);
}

#[test]
fn meda_round_trip() {
    let mut t = 1e-6f64;
    while t <= 30.0 {
        let (p, jac) = meda_map(t);
        let back = meda_inverse(&p);
        assert!((back - t).abs() <= 1e-13 * t.max(1e-3), "t={t} back={back}");
        assert_rel(jac, (t.cosh()).powi(2), 1e-12);
        assert_rel(p.sinh2t(), (2.0 * t).sinh(), 1e-12);
        if t < 15.0 {
            assert_rel(p.cosh2t_minus_one(), 2.0 * t.sinh().powi(2), 1e-12);
            assert_rel(p.coth2t(), 1.0 / (2.0 * t).tanh(), 1e-12);
        }
        assert_rel(p.tanh2t(), (2.0 * t).tanh(), 1e-14);
        assert_rel(p.ln_cosh2t(), (2.0 * t.sinh().powi(2)).ln_1p(), 1e-12);
        t *= 1.37;
    }
}

#[test]
fn meda_beta_integral() {
    // ∫_0^∞ (sinh 2t)^{-σ-1} (cosh 2t − 1) dt = 2^{-σ-1} B(1 − σ/2, σ)
    for &sigma in &[0.1f64, 0.5, 0.9] {
        let want = 2f64.powf(-sigma - 1.0)
            * (ln_gamma_value(1.0 - sigma / 2.0) + ln_gamma_value(sigma)
                - ln_gamma_value(1.0 + sigma / 2.0))
            .exp();
        let r = MedaIntegral::new(sigma)
            .left_exponent(1.0 - sigma)
            .right_exponent(sigma - 1.0)
            .integrate(|p| p.cosh2t_minus_one())
            .unwrap();
        assert_rel(r.value, want, 1e-10);
    }
}

#[test]
fn meda_weight_matches_t_form() {
    for &t in &[0.01f64, 0.4, 2.0, 9.0] {
        let p = MedaPoint::from_t(t);
        let sigma = 0.3;
        let w = p.weight(sigma) / p.dt_dxi();
        assert_rel(w, (2.0 * t).sinh().powf(-sigma - 1.0), 1e-11);
    }
}

#[test]
fn elementary_integrals() {
    let r = Integrator::new(1e-12)
        .left_exponent(-0.5)
        .integrate(|x: f64| x.powf(-0.5), 0.0, 1.0)
        .unwrap();
    assert_abs(r.value, 2.0, 1e-10);
    let r = adaptive_integrate(|x: f64| (-x).exp(), 0.0, f64::INFINITY, 1e-12).unwrap();
    assert_abs(r.value, 1.0, 1e-12);
    let r = adaptive_integrate(|t: f64| t.sin().powi(2), 0.0, PI, 1e-12).unwrap();
    assert_abs(r.value, PI / 2.0, 1e-12);
}

#[test]
fn meda_inverse_is_identity_on_log_grid() {
    let (lo, hi) = (1e-6f64.ln(), 30f64.ln());
    for i in 0..100 {
        let t = (lo + (hi - lo) * i as f64 / 99.0).exp();
        let back = meda_inverse(&meda_map(t).0);
        assert!((back - t).abs() <= 1e-14 * t.max(1.0), "t={t} back={back}");
    }
    let (p, _) = meda_map(0.5 * 3f64.ln());
    assert_abs(p.xi, 0.5, 1e-15);
    let (p, _) = meda_map(1e-9f64);
    assert_rel(p.xi, 1e-9, 1e-15);
}

#[test]
fn radial_gamma_moments_improve_with_nodes() {
    let alpha = 0.5f64;
    let want = gamma(1.5f64).unwrap() / 2.0;
    let mut prev = f64::INFINITY;
    for n in [2usize, 4, 8, 16, 32, 64] {
        // a non-polynomial moment so the error is not already at rounding
        let rule = radial_rule(alpha, n).unwrap();
        let got = rule.integrate(|r| (-r * r).exp() / (1.0 + r * r));
        let oracle = Integrator::new(1e-14)
            .integrate(
                |r: f64| r.powf(2.0 * alpha + 1.0) * (-r * r).exp() / (1.0 + r * r),
                0.0,
                f64::INFINITY,
            )
            .unwrap()
            .value;
        let err = (got - oracle).abs();
        assert!(
            err <= prev.max(1e-15),
            "n={n}: error {err:e} grew from {prev:e}"
        );
        prev = err;
        assert_rel(rule.integrate(|r| (-r * r).exp()), want, 1e-12);
    }
}
