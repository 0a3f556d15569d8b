mod common;

use common::{assert_abs, assert_rel};
use fraclag_core::laguerre::*;
use fraclag_core::quadrature::radial_rule;
use fraclag_core::specfun::{gamma, ln_gamma_value};

fn lp(alpha: f64) -> LaguerreParams<f64> {
    LaguerreParams::new(alpha).unwrap()
}

fn phi_fn(alpha: f64, n: usize) -> RadialFunction<f64> {
    let p = lp(alpha);
    RadialFunction::from_fn(
        format!("phi{n}"),
        Smoothness::SchwartzLike,
        Support::Unbounded,
        move |r| eval_phi(&p, n, r),
    )
}

fn psi_fn(alpha: f64, n: usize) -> RadialFunction<f64> {
    let p = lp(alpha);
    RadialFunction::from_fn(
        format!("psi{n}"),
        Smoothness::SchwartzLike,
        Support::Unbounded,
        move |r| eval_psi(&p, n, r),
    )
}

#[test]
fn params_validation() {
    assert!(LaguerreParams::new(-0.5f64).is_err());
    let msg = LaguerreParams::new(-0.7f64).unwrap_err().to_string();
    assert!(msg.contains("α > −1/2"), "{msg}");
    assert_eq!(lp(0.5).eigenvalue(3), 15.0);
}

#[test]
fn phi_values() {
    assert_eq!(eval_phi(&lp(0.3), 0, 0.0), 1.0);
    assert_abs(eval_phi(&lp(0.5), 1, 0.0), 1.5, 1e-15);
    // mpmath laguerre(5, 0.5, 1.69) * exp(-0.845)
    assert_rel(
        eval_phi(&lp(0.5), 5, 1.3),
        -0.054_080_836_149_380_887_281,
        1e-13,
    );
}

#[test]
fn psi_values() {
    assert_rel(eval_psi(&lp(1.0), 0, 0.0), 2f64.sqrt(), 1e-15);
    let p = lp(0.5);
    for n in [0usize, 1, 5, 17, 40] {
        for &r in &[0.2f64, 1.3, 3.0] {
            let want = eval_phi(&p, n, r) * p.ln_psi_norm(n).exp();
            assert!((eval_psi(&p, n, r) - want).abs() < 1e-12 * (1.0 + want.abs()));
        }
    }
    let all = eval_psi_all(&p, 12, 1.1);
    assert_eq!(all.len(), 12);
    assert_rel(all[11], eval_psi(&p, 11, 1.1), 1e-14);
}

#[test]
fn orthonormality() {
    for &alpha in &[-0.4f64, 0.0, 0.5, 2.0, 5.0] {
        let p = lp(alpha);
        let rule = radial_rule(alpha, 40).unwrap();
        let table: Vec<Vec<f64>> = rule
            .nodes
            .iter()
            .map(|&r| eval_psi_all(&p, 21, r))
            .collect();
        for n in 0..=20 {
            for m in 0..=20 {
                let ip: f64 = table
                    .iter()
                    .zip(&rule.weights)
                    .map(|(row, &w)| w * row[n] * row[m])
                    .sum();
                let want = if n == m { 1.0 } else { 0.0 };
                assert!(
                    (ip - want).abs() <= 1e-10,
                    "alpha={alpha} n={n} m={m}: {ip}"
                );
            }
        }
    }
    let rule = radial_rule(2.0, 60).unwrap();
    let p = lp(2.0);
    assert_abs(rule.integrate(|r| eval_psi(&p, 3, r).powi(2)), 1.0, 1e-11);
}

#[test]
fn psi_survives_underflow_of_the_ground_mode() {
    // nodes reach r² ≈ 2800, where ψ_0 underflows
    let p = lp(0.5);
    let rule = radial_rule(0.5f64, 700).unwrap();
    assert!(rule.nodes[rule.len() - 1].powi(2) > 1500.0);
    for n in [400usize, 650] {
        let nn = rule.integrate(|r| eval_psi(&p, n, r).powi(2));
        assert_abs(nn, 1.0, 1e-9);
    }
}

#[test]
fn analyze_examples() {
    let alpha = 0.5;
    let p = lp(alpha);
    let rule = radial_rule(alpha, 60).unwrap();
    let v = analyze(&psi_fn(alpha, 3), &p, 10, &rule).unwrap();
    for (n, c) in v.coeffs.iter().enumerate() {
        assert_abs(*c, if n == 3 { 1.0 } else { 0.0 }, 1e-10);
    }
    let p0 = lp(0.0);
    let rule0 = radial_rule(0.0, 40).unwrap();
    let v = analyze(&phi_fn(0.0, 1), &p0, 5, &rule0).unwrap();
    assert_abs(v.coeffs[0], 0.0, 1e-12);
    assert_abs(v.coeffs[1], 0.5f64.sqrt(), 1e-12);
    assert_abs(v.coeffs[2], 0.0, 1e-12);
}

#[test]
fn bump_coefficients_match_oracle() {
    // mpmath quad of bump(1,2) against psi_n^{0.5}
    let p = lp(0.5);
    let f = RadialFunction::bump(1.0, 2.0).unwrap();
    let rule = default_rule(&f, &p, 64).unwrap();
    let v = analyze(&f, &p, 64, &rule).unwrap();
    assert_eq!(v.truncation(), 64);
    assert_rel(v.coeffs[0], 0.007_578_954_551_456_477_247_6, 1e-10);
    assert_rel(v.coeffs[1], -0.004_702_014_632_261_867_468_4, 1e-10);
    assert_rel(v.coeffs[5], 0.003_449_509_794_034_146_561_3, 1e-10);
    assert_rel(v.coeffs[20], 0.001_595_721_464_246_116_817_1, 1e-9);
}

#[test]
fn parseval_tail_decreases() {
    let p = lp(0.5);
    for (a, b) in [(1.0, 2.0), (0.5, 2.5), (0.2, 2.2)] {
        let f = RadialFunction::bump(a, b).unwrap();
        let rule = default_rule(&f, &p, 128).unwrap();
        let total = norm_sq(&f, &p, &rule).unwrap();
        let mut prev = f64::INFINITY;
        for n in [16usize, 32, 64, 128] {
            let v = analyze(&f, &p, n, &rule).unwrap();
            let tail = total - v.norm_sq();
            assert!(tail >= -1e-14 * total, "negative tail {tail}");
            assert!(tail < prev, "tail did not decrease at N={n}");
            prev = tail;
        }
        assert!(prev / total < 1e-3);
    }
    let f = RadialFunction::bump(1.0, 2.0).unwrap();
    let rule = default_rule(&f, &p, 8).unwrap();
    assert!(analyze_checked(&f, &p, 8, &rule, 1e-6)
        .unwrap_err()
        .is_accuracy());
}

#[test]
fn synthesize_round_trip() {
    let alpha = 0.5;
    let p = lp(alpha);
    let coeffs: Vec<f64> = (0..30)
        .map(|k| ((k * 7 % 11) as f64 - 5.0) / (1.0 + k as f64))
        .collect();
    let v = SpectralVector::new(p, coeffs.clone()).unwrap();
    let vv = v.clone();
    let f = RadialFunction::from_fn(
        "synth",
        Smoothness::SchwartzLike,
        Support::Unbounded,
        move |r| synthesize(&vv, r),
    );
    let rule = radial_rule(alpha, 60).unwrap();
    let back = analyze(&f, &p, 30, &rule).unwrap();
    for (a, b) in back.coeffs.iter().zip(&coeffs) {
        assert_abs(*a, *b, 1e-9);
    }
    // single-mode round trips
    let e3 = SpectralVector::unit(p, 3, 8);
    assert_rel(synthesize(&e3, 0.9), eval_psi(&p, 3, 0.9), 1e-14);
    let many = synthesize_many(&v, &[0.3, 1.7]);
    assert_rel(many[1], synthesize(&v, 1.7), 1e-14);
}

#[test]
fn stream_matches_stored_expansion() {
    let p = lp(0.5);
    let f = RadialFunction::bump(0.5, 2.5).unwrap();
    let rule = default_rule(&f, &p, 200).unwrap();
    let v = analyze(&f, &p, 200, &rule).unwrap();
    let m = |n: usize| 1.0 + n as f64;
    let out = stream_multiplier(&f, &p, 200, &rule, m, &[1.0, 2.0]).unwrap();
    let mv = v.map_diagonal(m);
    assert_rel(out.values[0], synthesize(&mv, 1.0), 1e-12);
    assert_rel(out.energy, v.norm_sq(), 1e-13);
    assert_rel(out.form, mv.dot(&v), 1e-13);
    assert_eq!(out.last_coeff, v.coeffs[199]);
}

#[test]
fn samples_spline_reproduces_cubic() {
    let r: Vec<f64> = (0..40).map(|i| 0.5 + i as f64 * 0.05).collect();
    let v: Vec<f64> = r.iter().map(|x| (x * 2.0).sin()).collect();
    let f = RadialFunction::samples("sin", r, v).unwrap();
    assert_eq!(f.smoothness(), Smoothness::RawSamples);
    assert_abs(f.eval(1.234), (2.468f64).sin(), 1e-5);
    assert_eq!(f.eval(3.0), 0.0);
    assert!(RadialFunction::samples("x", vec![1.0, 0.5, 2.0], vec![0.0; 3]).is_err());
}

#[test]
fn product_formula_rising_reading() {
    let p = lp(0.5);
    let phi3 = phi_fn(0.5, 3);
    let t = translate(&p, &phi3, 0.7, 1.1).unwrap().value;
    let want = product_formula_constant(&p, 3, true) * eval_phi(&p, 3, 0.7) * eval_phi(&p, 3, 1.1);
    assert_rel(t, want, 1e-8);
    for n in 0..=10 {
        let f = phi_fn(0.5, n);
        for &r in &[0.3f64, 0.9, 1.6] {
            for &s in &[0.4f64, 1.1, 2.0] {
                let t = translate(&p, &f, r, s).unwrap().value;
                let want =
                    product_formula_constant(&p, n, true) * eval_phi(&p, n, r) * eval_phi(&p, n, s);
                assert!(
                    (t - want).abs() <= 1e-8 * (1.0 + want.abs()),
                    "n={n} r={r} s={s}: {t} vs {want}"
                );
            }
        }
    }
}

#[test]
fn product_formula_falling_reading_fails() {
    let p = lp(0.5);
    let mut worst = 0f64;
    for n in 0..=3 {
        let f = phi_fn(0.5, n);
        let t = translate(&p, &f, 0.7, 1.1).unwrap().value;
        let want =
            product_formula_constant(&p, n, false) * eval_phi(&p, n, 0.7) * eval_phi(&p, n, 1.1);
        worst = worst.max((t - want).abs() / t.abs());
    }
    assert!(
        worst > 0.5,
        "falling reading unexpectedly consistent: {worst}"
    );
}

#[test]
fn translation_at_zero_is_identity() {
    let p = lp(1.0);
    let f = RadialFunction::bump(0.5, 2.0).unwrap();
    for &s in &[0.7f64, 1.2, 1.9] {
        assert_eq!(translate(&p, &f, 0.0, s).unwrap().value, f.eval(s));
        // continuity as r → 0 from the integral side
        let t = translate(&p, &f, 1e-6, s).unwrap().value;
        assert_rel(t, f.eval(s), 1e-5);
    }
}

#[test]
fn translation_positivity() {
    let p = lp(0.5);
    let f = RadialFunction::bump(0.6, 1.4).unwrap();
    for i in 0..8 {
        for j in 0..8 {
            let r = 0.1 + 0.3 * i as f64;
            let s = 0.15 + 0.3 * j as f64;
            assert!(translate(&p, &f, r, s).unwrap().value >= -1e-10);
        }
    }
}

#[test]
fn convolution_projection_identity() {
    let alpha = 0.5;
    let p = lp(alpha);
    let c = 2.0 / gamma(alpha + 1.0).unwrap();
    let phi2 = phi_fn(alpha, 2);
    let phi3 = phi_fn(alpha, 3);
    let same = c * convolve(&p, &phi2, &phi2, 0.8).unwrap().value;
    assert_abs(same, eval_phi(&p, 2, 0.8), 1e-8);
    let cross = c * convolve(&p, &phi2, &phi3, 0.8).unwrap().value;
    assert_abs(cross, 0.0, 1e-8);
}

#[test]
fn convolution_symmetry() {
    let p = lp(0.5);
    let f = RadialFunction::bump(0.4, 1.3).unwrap();
    let g = RadialFunction::bump(0.9, 2.1).unwrap();
    for &r in &[0.5f64, 1.0, 1.8] {
        let a = convolve(&p, &f, &g, r).unwrap().value;
        let b = convolve(&p, &g, &f, r).unwrap().value;
        assert!(
            (a - b).abs() <= 1e-8 * a.abs().max(1e-6),
            "r={r}: {a} vs {b}"
        );
    }
}

#[test]
fn rising_factorial() {
    let p = lp(0.5);
    assert_rel(p.rising(3), 1.5 * 2.5 * 3.5, 1e-14);
    assert_rel(
        p.ln_psi_norm(2),
        0.5 * (2f64 * 2.0).ln() - 0.5 * ln_gamma_value(3.5),
        1e-14,
    );
}
