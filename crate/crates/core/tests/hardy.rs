mod common;

use common::{assert_abs, assert_rel, rel};
use fraclag_core::ground_state::DiscreteSpace;
use fraclag_core::hardy::*;
use fraclag_core::laguerre::*;
use fraclag_core::semigroup::*;
use fraclag_core::specfun::{bessel_k, gamma};
use proptest::prelude::*;

fn lp(alpha: f64) -> LaguerreParams<f64> {
    LaguerreParams::new(alpha).unwrap()
}

fn fp(sigma: f64, delta: f64) -> FracParams<f64> {
    FracParams::new(sigma, delta).unwrap()
}

#[test]
fn constants() {
    // mpmath gamma(1.25)/gamma(0.75)
    assert_rel(
        constant_b(&lp(0.0), &fp(0.5, 1.0)),
        0.739_668_779_797_159_723_08,
        1e-13,
    );
    assert_rel(constant_b(&lp(0.7), &fp(1e-12, 3.0)), 1.0, 1e-10);
    let (p, f) = (lp(0.5), fp(0.3, 2.0));
    let b = constant_b(&p, &f);
    assert_rel(constant_a(&p, &f), (4.0f64 / 2.0).powf(0.3) * b * b, 1e-14);
    assert_rel(
        constant_a_eig(&p, &f),
        4f64.powf(0.3) * constant_a(&p, &f),
        1e-14,
    );
    assert_rel(
        constant_a(&p, &f),
        (8.0f64).powf(0.3) * gamma_ratio_r(&p, 0.3).powi(2),
        1e-13,
    );
}

#[test]
fn weight_values() {
    // mpmath, direct Macdonald evaluation
    assert_rel(
        weight(&lp(0.5), 0.5, 1.0, 0.0).unwrap(),
        4.685_122_994_362_295_178_3,
        1e-12,
    );
    assert_rel(
        weight(&lp(0.3), -0.3, 1.0, 0.7).unwrap(),
        2.464_638_394_079_569_703_9,
        1e-12,
    );
    // K_{1/2}(x) = √(π/(2x)) e^{−x}
    for &r in &[0.0f64, 0.4, 1.3, 4.0] {
        let q: f64 = 1.0 + r * r;
        let k = (std::f64::consts::PI / q).sqrt() * (-q / 2.0).exp();
        let want = std::f64::consts::PI.sqrt() * 2f64.powf(1.3) * q.powf(-0.5) * k;
        assert_rel(weight(&lp(0.3), -0.3, 1.0, r).unwrap(), want, 1e-11);
    }
    let nu: f64 = (0.5 + 1.0 + 0.4) / 2.0;
    assert_rel(
        bessel_k(-nu, 1.0).unwrap().value,
        bessel_k(nu, 1.0).unwrap().value,
        1e-15,
    );
}

#[test]
fn weight_shape_and_validation() {
    for &(a, s, d) in &[(0.5f64, 0.5f64, 1.0f64), (2.0, -0.7, 0.3), (-0.4, 0.9, 5.0)] {
        let mut prev = f64::INFINITY;
        for i in 0..200 {
            let r = i as f64 * 0.05;
            let w = weight(&lp(a), s, d, r).unwrap();
            assert!(w > 0.0 && w < prev, "({a},{s},{d}) at r={r}");
            prev = w;
        }
        let lw = ln_weight(&lp(a), s, d, 40.0).unwrap();
        assert!(lw.is_finite() && lw < -700.0);
    }
    let e = weight(&lp(0.5), 1.0, 1.0, 0.5).unwrap_err().to_string();
    assert!(e.contains("−1 < s < 1"), "{e}");
    let e = weight(&lp(0.5), 0.5, 0.0, 0.5).unwrap_err().to_string();
    assert!(e.contains("δ > 0"), "{e}");
}

#[test]
fn weight_coefficients() {
    // mpmath l_integral oracle
    assert_rel(
        weight_coefficient(&lp(0.0), 0.5, 1.0, 0).unwrap().value,
        1.833_138_327_503_430_134_4,
        1e-11,
    );
    let p = lp(0.5);
    let c: Vec<f64> = (0..60)
        .map(|n| weight_coefficient(&p, 0.5, 1.0, n).unwrap().value)
        .collect();
    assert!(c.iter().all(|&x| x > 0.0));
    assert!(c[5..].windows(2).all(|w| w[1] < w[0]));
    // coefficients against direct projections of the weight
    let w = weight_function(&p, -0.5, 1.0).unwrap();
    let rule = default_rule(&w, &p, 40).unwrap();
    let v = analyze(&w, &p, 40, &rule).unwrap();
    for n in [0usize, 3, 10, 25] {
        let cn = weight_coefficient(&p, -0.5, 1.0, n).unwrap().value;
        // a_n = c_n ‖φ_n‖
        let norm = (fraclag_core::specfun::ln_gamma_value(n as f64 + 1.5)
            - fraclag_core::specfun::ln_gamma_value(n as f64 + 1.0))
        .exp()
            * 0.5;
        assert_rel(v.coeffs[n], cn * norm.sqrt(), 1e-9);
    }
}

#[test]
fn weight_series_reconstruction() {
    let p = lp(0.5);
    let w = weight(&p, 0.5, 1.0, 0.7).unwrap();
    let err = |n| rel(weight_series(&p, 0.5, 1.0, 0.7, n).unwrap(), w);
    // the truncation error at N = 80 is 3.17e-7; it falls below 1e-8 by N = 120
    assert!(err(80) < 4e-7);
    assert!(err(120) < 1e-8);
    assert!(err(200) < 1e-10);
}

#[test]
fn connecting_relation() {
    for &(a, s, d) in &[(0.5f64, 0.5f64, 1.0f64), (2.0, 0.25, 0.5), (-0.3, 0.8, 3.0)] {
        let c = connecting_check(&lp(a), &fp(s, d), 21).unwrap();
        assert!(c.max_rel_err < 1e-9, "({a},{s},{d}): {}", c.max_rel_err);
    }
    // the form with δ^σ R² alone is off by 4^σ
    let (p, f) = (lp(0.5), fp(0.5, 1.0));
    let r = gamma_ratio_r(&p, 0.5);
    for n in 0..6 {
        let lhs = weight_coefficient(&p, -0.5, 1.0, n).unwrap().value;
        let naive =
            r * r * s_ratio(&p, -0.5, n) * weight_coefficient(&p, 0.5, 1.0, n).unwrap().value;
        assert_rel(lhs / naive, 2.0, 1e-10);
        let _ = f;
    }
}

#[test]
fn eigen_identity() {
    let c = eigen_identity_check(&lp(0.5), &fp(0.5, 1.0), 40).unwrap();
    assert!(c.max_rel_err < 1e-9, "{}", c.max_rel_err);
    // mpmath: coefficients by direct projection of the Macdonald weights
    let c = eigen_identity_check(&lp(2.0), &fp(0.25, 0.5), 4).unwrap();
    let lhs = [
        3.416_047_954_259_085_751_4,
        1.991_532_784_589_329_684_7,
        1.284_983_795_631_567_319_7,
        0.880_990_584_618_090_227_94,
    ];
    let rhs = [
        1.645_030_384_193_032_256_9,
        0.959_041_554_929_392_645_13,
        0.618_796_168_939_640_348_6,
        0.424_249_395_585_277_573_79,
    ];
    for n in 0..4 {
        assert_rel(c.lhs[n], lhs[n], 1e-9);
        let a_eig = constant_a_eig(&lp(2.0), &fp(0.25, 0.5));
        assert_rel(c.rhs[n], a_eig * rhs[n], 1e-9);
    }
    assert!(c.max_rel_err < 1e-9);
    // the constant A alone misses the factor 4^σ
    assert_rel(
        lhs[0] / rhs[0],
        constant_a(&lp(2.0), &fp(0.25, 0.5)) * 4f64.powf(0.25),
        1e-9,
    );
    assert!(rel(lhs[0] / rhs[0], constant_a(&lp(2.0), &fp(0.25, 0.5))) > 0.3);
    // σ → 0: both sides collapse
    let c = eigen_identity_check(&lp(1.0), &fp(1e-9, 1.0), 10).unwrap();
    for n in 0..10 {
        assert_rel(c.lhs[n], c.rhs[n], 1e-9);
        assert_rel(
            c.lhs[n],
            weight_coefficient(&lp(1.0), 0.0, 1.0, n).unwrap().value,
            1e-7,
        );
    }
}

#[test]
fn fundamental_solution_values() {
    // mpmath
    assert_rel(
        fundamental_solution(&lp(1.0), 0.5, 0.9).unwrap(),
        1.095_701_500_404_025_287_7,
        1e-12,
    );
    assert_rel(
        fundamental_h(&lp(1.0), 0.5, 0.9).unwrap(),
        0.5 * 1.095_701_500_404_025_287_7,
        1e-12,
    );
    assert!(fundamental_solution(&lp(1.0), 0.5, 0.0).is_err());
    let e = fundamental_solution(&lp(1.0), 1.0, 0.5)
        .unwrap_err()
        .to_string();
    assert!(e.contains("0 < σ < 1"), "{e}");
    for &(a, s) in &[(1.0f64, 0.5f64), (0.2, 0.5), (-0.4, 0.9), (3.0, 0.1)] {
        let c = fundamental_series_check(&lp(a), s, 60, 1e-11).unwrap();
        assert!(c.max_rel_err < 1e-6, "({a},{s}): {}", c.max_rel_err);
    }
}

#[test]
fn weak_delta() {
    let packets = [
        RadialFunction::schwartz_like(vec![1.0, 0.3], 1.0).unwrap(),
        RadialFunction::schwartz_like(vec![1.0], 0.8).unwrap(),
        RadialFunction::schwartz_like(vec![2.0, -0.5, 0.1], 1.2).unwrap(),
    ];
    for &(a, s) in &[(0.5f64, 0.5f64), (1.0, 0.25), (-0.3, 0.75)] {
        for f in &packets {
            let w = weak_delta_check(f, &lp(a), s, 300, 1e-10).unwrap();
            assert!(
                (w.pairing - w.f0).abs() <= 1e-5 * (1.0 + w.f0.abs()),
                "({a},{s}) {}: {w:?}",
                f.id()
            );
        }
    }
    // H with the extra factor √2Γ(α+1/2)/Γ(α+1) misses f(0)
    let p = lp(0.5);
    let w = weak_delta_check(&packets[0], &p, 0.5, 300, 1e-10).unwrap();
    let extra = 2f64.sqrt() * gamma(1.0).unwrap() / gamma(1.5).unwrap();
    assert!(rel(extra * w.pairing, w.f0) > 0.5);
}

#[test]
fn convolution_identity() {
    for &(a, s, d) in &[(1.0f64, 0.4f64, 1.0f64), (0.5, 0.5, 2.0), (2.0, 0.7, 0.5), (0.5, 0.9, 3.0), (2.0, 0.1, 0.5)] {
        let c = convolution_identity_check(&lp(a), &fp(s, d), 0.8, 1e-9).unwrap();
        assert_rel(c.lhs, c.rhs, 1e-6);
    }
    // at δ = 1 the constant is 4^σ R²
    let (p, f) = (lp(1.0), fp(0.4, 1.0));
    assert_rel(
        constant_a(&p, &f),
        4f64.powf(0.4) * gamma_ratio_r(&p, 0.4).powi(2),
        1e-14,
    );
}

#[test]
fn ground_state_paths() {
    let (p, f) = (lp(0.5), fp(0.5, 1.0));
    let b = RadialFunction::bump(1.0, 2.0).unwrap();
    let opts = HardyOptions {
        double_integral: true,
        ..HardyOptions::default()
    };
    let g = ground_state_residual(&b, &p, &f, &opts).unwrap();
    let d = g.double_integral.unwrap();
    assert!(g.difference > 0.0 && d > 0.0);
    assert_rel(d, g.difference, 1e-4);
    let g3 = ground_state_residual(&b.scaled(3.0), &p, &f, &HardyOptions::default()).unwrap();
    assert_rel(g3.difference, 9.0 * g.difference, 1e-10);
}

#[test]
fn sharpness() {
    for &(a, s, d) in &[(0.5f64, 0.5f64, 1.0f64), (1.0, 0.3, 2.0)] {
        let (p, f) = (lp(a), fp(s, d));
        let w = weight_function(&p, -s, d).unwrap();
        let g = ground_state_residual(&w, &p, &f, &HardyOptions::default()).unwrap();
        assert_abs(g.difference, 0.0, 1e-6);
        let rep = hardy_verdict(&w, &p, &f, &HardyOptions::default()).unwrap();
        assert!(rep.passed());
        assert_abs(rep.gaps[0], 0.0, 1e-6);
        assert!(rep.gaps[1] > 0.0);
    }
}

#[test]
fn hardy_chain_bump() {
    let (p, f) = (lp(0.5), fp(0.5, 1.0));
    let b = RadialFunction::bump(0.5, 2.5).unwrap();
    let rep = hardy_verdict(&b, &p, &f, &HardyOptions::default()).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert!(rep.gaps.iter().all(|&g| g > 0.0));
    // mpmath integrals of the bump against the weight ratio and the potential
    assert_rel(rep.middle_term, 0.351_110_133_137_000_208_81, 1e-9);
    assert_rel(rep.rhs_potential, 0.147_204_726_084_291_342_18, 1e-9);
    assert!(rep.diagnostics.middle_term_a >= rep.rhs_potential);
    assert!(rep.diagnostics.pure_power_bound >= rep.middle_term);
    assert!(rep.diagnostics.link_pass.iter().all(|&x| x));
    for (a, s, d) in [(2.0, 0.25, 0.5), (-0.3, 0.75, 3.0), (0.0, 0.5, 1.0)] {
        for (lo, hi) in [(0.0, 1.0), (1.0, 2.0), (0.3, 3.5)] {
            let b = RadialFunction::bump(lo, hi).unwrap();
            let rep = hardy_verdict(&b, &lp(a), &fp(s, d), &HardyOptions::default()).unwrap();
            assert!(rep.passed(), "{rep:?}");
            assert!(rep.gaps.iter().all(|&g| g > 0.0));
        }
    }
}

#[test]
fn report_json_shape() {
    let b = RadialFunction::bump(1.0, 2.0).unwrap();
    let rep = hardy_verdict(&b, &lp(0.5), &fp(0.5, 1.0), &HardyOptions::default()).unwrap();
    let v: serde_json::Value = serde_json::to_value(&rep).unwrap();
    for k in [
        "params",
        "f_id",
        "lhs_form",
        "middle_term",
        "rhs_potential",
        "ground_state_residual",
        "gaps",
        "verdict",
        "diagnostics",
    ] {
        assert!(v.get(k).is_some(), "{k}");
    }
    for k in ["tolerances", "truncation", "quad_nodes"] {
        assert!(v["diagnostics"].get(k).is_some(), "{k}");
    }
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["f_id"], "bump:1,2");
}

#[test]
fn pointwise_ratio_bound() {
    for &(a, s, d) in &[
        (0.5f64, 0.5f64, 1.0f64),
        (2.0, 0.25, 0.5),
        (-0.4, 0.9, 4.0),
        (5.0, 0.1, 0.1),
    ] {
        let (p, f) = (lp(a), fp(s, d));
        let (ca, cb) = (constant_a(&p, &f), constant_b(&p, &f));
        for i in 0..=100 {
            let r = 1e-3 * (5e4f64).powf(i as f64 / 100.0);
            let lhs = ca * weight_ratio(&p, &f, r).unwrap();
            let rhs = cb * (d + r * r).powf(-s);
            assert!(
                lhs >= rhs * (1.0 - 1e-12),
                "({a},{s},{d}) r={r}: {lhs} < {rhs}"
            );
        }
    }
}

fn space(n: usize, seed: &[f64]) -> DiscreteSpace<f64> {
    let eta: Vec<f64> = (0..n).map(|i| 0.5 + seed[i % seed.len()].abs()).collect();
    let mut k = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..i {
            let x = (seed[(i * 7 + j) % seed.len()] * 3.1).sin().abs();
            k[i * n + j] = x;
            k[j * n + i] = x;
        }
    }
    let pot = (0..n).map(|i| seed[(i * 3) % seed.len()]).collect();
    DiscreteSpace::new(eta, k, pot, 0.7).unwrap()
}

#[test]
fn discrete_ground_state() {
    let sp = space(6, &[0.3, -0.8, 1.2, 0.05, 2.0, -0.4, 0.9]);
    let w = [1.0, 0.5, 2.0, 1.5, 0.3, 0.8];
    let f = [0.2, -1.0, 0.7, 0.0, 1.1, -0.3];
    let g = sp.ground_state(&w, &f).unwrap();
    assert!(g.defect().abs() < 1e-12);
    assert!(g.double_sum >= 0.0);
    assert!(g.form >= g.weighted);
    assert_rel(sp.bilinear(&f), g.form, 1e-12);
    assert!(
        DiscreteSpace::new(vec![1.0, 1.0], vec![0.0, 1.0, 2.0, 0.0], vec![0.0; 2], 1.0).is_err()
    );
    assert!(sp
        .ground_state(&[1.0, -1.0, 1.0, 1.0, 1.0, 1.0], &f)
        .is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn discrete_ground_state_identity(
        seed in prop::collection::vec(-2.0f64..2.0, 5..12),
        w in prop::collection::vec(0.05f64..3.0, 8),
        f in prop::collection::vec(-2.0f64..2.0, 8),
    ) {
        let sp = space(8, &seed);
        let g = sp.ground_state(&w, &f).unwrap();
        let scale = 1.0 + g.form.abs() + g.weighted.abs();
        prop_assert!(g.defect().abs() < 1e-11 * scale);
        prop_assert!(g.double_sum >= -1e-14);
        prop_assert!((sp.bilinear(&f) - g.form).abs() < 1e-11 * scale);
    }
}
