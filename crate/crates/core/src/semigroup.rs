//! Heat semigroup e^{−tL_α}, the fractional operators L_{α,σ} and L_α^σ,
//! the subordination kernel 𝒦_{α,σ} and the pointwise and bilinear-form
//! representations of L_{α,σ}.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laguerre::{
    analyze, default_rule, eval_phi, LaguerreParams, RadialFunction, SpectralVector, Support,
};
use crate::quadrature::{Integrator, MedaIntegral, MedaPoint};
use crate::specfun::{
    bessel_i_reduced_scaled, gamma, gamma_abs_reflect, ln_gamma_ratio, ln_gamma_value, EvalResult,
};
use crate::Real;

/// (σ, δ) with 0 < σ < 1 and δ > 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FracParams<T> {
    sigma: T,
    delta: T,
}

impl<T: Real> FracParams<T> {
    pub fn new(sigma: T, delta: T) -> Result<Self> {
        check_sigma(sigma)?;
        if !(delta > T::zero()) || !delta.is_finite() {
            return Err(Error::Constraint {
                name: "delta",
                constraint: "δ > 0",
                value: delta.f64(),
            });
        }
        Ok(FracParams { sigma, delta })
    }

    pub fn sigma(&self) -> T {
        self.sigma
    }

    pub fn delta(&self) -> T {
        self.delta
    }
}

pub(crate) fn check_sigma<T: Real>(sigma: T) -> Result<()> {
    if !(sigma > T::zero() && sigma < T::one()) {
        return Err(Error::Constraint {
            name: "sigma",
            constraint: "0 < σ < 1",
            value: sigma.f64(),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FracKind {
    /// 4^σ Γ(L/4 + (1+σ)/2)/Γ(L/4 + (1−σ)/2)
    Conformal,
    /// L^σ
    Pure,
}

/// S_n^{α,σ} = Γ(n + (α+1)/2 + (1+σ)/2)/Γ(n + (α+1)/2 + (1−σ)/2), for
/// −1 < σ ≤ 1.
pub fn s_ratio<T: Real>(params: &LaguerreParams<T>, sigma: T, n: usize) -> T {
    let w = T::of(n) + (params.alpha() + T::one()) * T::half();
    ln_gamma_ratio(
        w + (T::one() + sigma) * T::half(),
        w + (T::one() - sigma) * T::half(),
    )
    .exp()
}

/// 4^σ S_n^{α,σ}, the symbol of L_{α,σ} on φ_n^α.
pub fn multiplier<T: Real>(params: &LaguerreParams<T>, sigma: T, n: usize) -> T {
    let w = T::of(n) + (params.alpha() + T::one()) * T::half();
    (sigma * T::lit(4.0).ln()
        + ln_gamma_ratio(
            w + (T::one() + sigma) * T::half(),
            w + (T::one() - sigma) * T::half(),
        ))
    .exp()
}

/// (4n + 2α + 2)^σ.
pub fn pure_multiplier<T: Real>(params: &LaguerreParams<T>, sigma: T, n: usize) -> T {
    params.eigenvalue(n).powf(sigma)
}

/// Conformal multiplier values for n < len.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultiplierTable<T> {
    pub params: LaguerreParams<T>,
    pub sigma: T,
    pub values: Vec<T>,
}

impl<T: Real> MultiplierTable<T> {
    pub fn new(params: LaguerreParams<T>, sigma: T, len: usize) -> Self {
        MultiplierTable {
            params,
            sigma,
            values: (0..len).map(|n| multiplier(&params, sigma, n)).collect(),
        }
    }
}

/// Heat kernel q_{t,α}(r) = (sinh 2t)^{−α−1} e^{−coth(2t) r²/2} / (2^α Γ(α+1)).
pub fn heat_kernel<T: Real>(params: &LaguerreParams<T>, t: T, r: T) -> Result<T> {
    if !(t > T::zero()) {
        return Err(Error::domain("heat_kernel", "t > 0", t.f64()));
    }
    let p = MedaPoint::from_t(t);
    let a = params.alpha();
    let l = -(a * T::two().ln() + ln_gamma_value(a + T::one()))
        - (a + T::one()) * p.sinh2t().ln()
        - p.coth2t() * r * r * T::half();
    Ok(l.exp())
}

/// Truncated expansion (2/Γ(α+1)) Σ_{n<N} e^{−(4n+2α+2)t} φ_n^α(r).
pub fn heat_kernel_series<T: Real>(params: &LaguerreParams<T>, t: T, r: T, terms: usize) -> T {
    let c = T::two() / gamma(params.alpha() + T::one()).unwrap_or(T::nan());
    (0..terms)
        .map(|n| (-params.eigenvalue(n) * t).exp() * eval_phi(params, n, r))
        .sum::<T>()
        * c
}

/// 𝒯_r^α q_{t,α}(s) at a Meda point ξ = tanh t:
/// (2 sinh 2t)^{−α} / sinh 2t · e^{−[(r−s)² + ξ²(r+s)²]/(4ξ)} · e^{−z}(z/2)^{−α}I_α(z),
/// z = rs/sinh 2t.
pub fn translated_heat_kernel_at<T: Real>(
    params: &LaguerreParams<T>,
    p: &MedaPoint<T>,
    r: T,
    s: T,
) -> T {
    let a = params.alpha();
    let sh = p.sinh2t();
    let d = r - s;
    let e = r + s;
    let four_xi = T::lit(4.0) * p.xi;
    let expo = -(d * d + p.xi * p.xi * e * e) / four_xi - a * (T::two() * sh).ln() - sh.ln();
    let z = r * s / sh;
    // the reduced Bessel function is entire and positive, ν = α > −1/2
    let bes = bessel_i_reduced_scaled(a, z)
        .map(|v| v.value)
        .unwrap_or(T::nan());
    expo.exp() * bes
}

/// 𝒯_r^α q_{t,α}(s) = e^{−coth(2t)(r²+s²)/2} I_α(rs/sinh 2t) / ((rs)^α sinh 2t).
pub fn translated_heat_kernel<T: Real>(params: &LaguerreParams<T>, t: T, r: T, s: T) -> Result<T> {
    if !(t > T::zero()) {
        return Err(Error::domain("translated_heat_kernel", "t > 0", t.f64()));
    }
    if !(r >= T::zero()) || !(s >= T::zero()) {
        return Err(Error::domain(
            "translated_heat_kernel",
            "r, s >= 0",
            r.min(s).f64(),
        ));
    }
    Ok(translated_heat_kernel_at(
        params,
        &MedaPoint::from_t(t),
        r,
        s,
    ))
}

/// 𝒯_{α,t}1(r) = (cosh 2t)^{−α−1} e^{−tanh(2t) r²/2}.
pub fn semigroup_on_one<T: Real>(params: &LaguerreParams<T>, t: T, r: T) -> T {
    let p = MedaPoint::from_t(t);
    (-(params.alpha() + T::one()) * p.ln_cosh2t() - p.tanh2t() * r * r * T::half()).exp()
}

/// c_n ↦ e^{−t(4n+2α+2)} c_n.
pub fn apply_semigroup<T: Real>(v: &SpectralVector<T>, t: T) -> SpectralVector<T> {
    let p = v.params;
    v.map_diagonal(|n| (-t * p.eigenvalue(n)).exp())
}

pub fn apply_fractional<T: Real>(
    v: &SpectralVector<T>,
    sigma: T,
    kind: FracKind,
) -> SpectralVector<T> {
    let p = v.params;
    match kind {
        FracKind::Conformal => v.map_diagonal(|n| multiplier(&p, sigma, n)),
        FracKind::Pure => v.map_diagonal(|n| pure_multiplier(&p, sigma, n)),
    }
}

/// ‖U_σ‖ = sup_n 4^σ S_n^{α,σ}/(4n+2α+2)^σ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct USigmaNorm<T> {
    pub norm: T,
    pub argmax: usize,
    /// |ratio(n_max) − 1|; the ratio tends to 1 as n → ∞.
    pub tail_deviation: T,
    pub n_max: usize,
}

pub fn u_sigma_ratio<T: Real>(params: &LaguerreParams<T>, sigma: T, n: usize) -> T {
    let w = T::of(n) + (params.alpha() + T::one()) * T::half();
    (ln_gamma_ratio(
        w + (T::one() + sigma) * T::half(),
        w + (T::one() - sigma) * T::half(),
    ) - sigma * w.ln())
    .exp()
}

pub fn u_sigma_norm<T: Real>(
    params: &LaguerreParams<T>,
    sigma: T,
    n_max: usize,
) -> Result<USigmaNorm<T>> {
    if !(sigma > T::zero() && sigma <= T::one()) {
        return Err(Error::Constraint {
            name: "sigma",
            constraint: "0 < σ ≤ 1",
            value: sigma.f64(),
        });
    }
    let mut best = T::neg_infinity();
    let mut arg = 0;
    for n in 0..=n_max {
        let v = u_sigma_ratio(params, sigma, n);
        if v > best {
            best = v;
            arg = n;
        }
    }
    let dev = (u_sigma_ratio(params, sigma, n_max) - T::one()).abs();
    if dev > T::lit(1e-6) {
        return Err(Error::Bracket {
            context: "u_sigma_norm",
            n_max,
            deviation: dev.f64(),
        });
    }
    Ok(USigmaNorm {
        norm: best.max(T::one()),
        argmax: arg,
        tail_deviation: dev,
        n_max,
    })
}

/// c_σ = 2^{σ+1}/|Γ(−σ)|, the subordination constant of L_{α,σ}.
pub fn c_sigma<T: Real>(sigma: T) -> Result<T> {
    check_sigma(sigma)?;
    Ok((sigma + T::one()).exp2() / gamma_abs_reflect(sigma)?)
}

/// E_σ = 4^σ Γ((1+σ)/2)/Γ((1−σ)/2).
pub fn e_sigma<T: Real>(sigma: T) -> Result<T> {
    check_sigma(sigma)?;
    let h = T::half();
    Ok(
        (sigma * T::lit(4.0).ln() + ln_gamma_value((T::one() + sigma) * h)
            - ln_gamma_value((T::one() - sigma) * h))
        .exp(),
    )
}

/// ∫_0^∞ (cosh 2t − 1)(sinh 2t)^{−σ−1} dt by the Meda substitution.
pub fn cosh_moment<T: Real>(sigma: T, tol: T) -> Result<EvalResult<T>> {
    check_sigma(sigma)?;
    MedaIntegral::new(sigma)
        .tol(tol * T::lit(0.01), tol)
        .left_exponent(T::one() - sigma)
        .right_exponent(sigma - T::one())
        .integrate(|p| p.cosh2t_minus_one())
}

/// E_σ from its defining integral, c_σ ∫(cosh 2t − 1)(sinh 2t)^{−σ−1} dt.
pub fn e_sigma_integral<T: Real>(sigma: T, tol: T) -> Result<EvalResult<T>> {
    let c = c_sigma(sigma)?;
    let r = cosh_moment(sigma, tol)?;
    Ok(EvalResult::new(r.value * c, r.abs_err * c))
}

/// Both sides of the subordination identity
/// 2^{σ−1}|Γ(−σ)| Γ(λ/4+(1+σ)/2)/Γ(λ/4+(1−σ)/2)
///   = ∫(cosh 2t − 1)(sinh 2t)^{−σ−1}dt + ∫(1 − e^{−tλ})(sinh 2t)^{−σ−1}dt.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdentityCheck<T> {
    pub lhs: T,
    pub rhs: T,
    pub first: T,
    pub second: T,
    pub rhs_err: T,
}

pub fn numerical_identity_check<T: Real>(sigma: T, lambda: T, tol: T) -> Result<IdentityCheck<T>> {
    check_sigma(sigma)?;
    if !(lambda + T::two() * sigma > -T::two()) {
        return Err(Error::Constraint {
            name: "lambda",
            constraint: "λ + 2σ > −2",
            value: lambda.f64(),
        });
    }
    let h = T::half();
    let q = lambda * T::lit(0.25);
    let (ga, gb) = (q + (T::one() + sigma) * h, q + (T::one() - sigma) * h);
    let ratio = if gb > T::zero() {
        (ln_gamma_value(ga) - ln_gamma_value(gb)).exp()
    } else {
        gamma(ga)? / gamma(gb)?
    };
    let lhs = (sigma - T::one()).exp2() * gamma_abs_reflect(sigma)? * ratio;
    let first = cosh_moment(sigma, tol)?;
    let second = if lambda == T::zero() {
        EvalResult::exact(T::zero())
    } else {
        // e^{−tλ} ~ η^{λ/2} as ξ → 1
        let right = if lambda < T::zero() {
            sigma + lambda * h
        } else {
            sigma
        };
        MedaIntegral::new(sigma)
            .tol(tol * T::lit(0.01), tol)
            .left_exponent(-sigma)
            .right_exponent(right)
            .integrate(|p| -(-lambda * p.t()).exp_m1())?
    };
    Ok(IdentityCheck {
        lhs,
        rhs: first.value + second.value,
        first: first.value,
        second: second.value,
        rhs_err: first.abs_err + second.abs_err,
    })
}

const XI_CUT: f64 = 1e-4;

/// Default tolerance for the subordination integrals.
pub const KERNEL_TOL: f64 = 1e-10;

fn kernel_breakpoints<T: Real>(r: T, s: T) -> Vec<T> {
    // e^{−(r−s)²/(4ξ)} switches on near ξ ≈ (r−s)²/4
    let d2 = (r - s) * (r - s) * T::lit(0.25);
    [0.02, 0.1, 0.3, 1.0, 3.0, 10.0, 40.0]
        .iter()
        .map(|&k| d2 * T::lit(k))
        .filter(|&x| x > T::zero() && x < T::one())
        .collect()
}

/// 𝒦_{α,σ}(r, s) = ∫_0^∞ 𝒯_r^α q_{t,α}(s) dt/(sinh 2t)^{σ+1}.
pub fn frac_kernel<T: Real>(
    params: &LaguerreParams<T>,
    sigma: T,
    r: T,
    s: T,
) -> Result<EvalResult<T>> {
    check_sigma(sigma)?;
    let floor = T::lit(1e-7) * (r + s).max(T::lit(1e-3));
    if !((r - s).abs() > floor) {
        return Err(Error::domain(
            "frac_kernel",
            "|r − s| above the diagonal resolution floor",
            (r - s).abs().f64(),
        ));
    }
    if !(r >= T::zero()) || !(s >= T::zero()) {
        return Err(Error::domain("frac_kernel", "r, s >= 0", r.min(s).f64()));
    }
    let tol = T::lit(KERNEL_TOL);
    let (res, ok) = frac_kernel_tol(params, sigma, r, s, tol)?;
    if !ok {
        return Err(Error::Accuracy {
            context: "frac_kernel",
            partial: res.value.f64(),
            estimate: res.abs_err.f64(),
            tolerance: (tol * res.value.abs()).f64(),
        });
    }
    Ok(res)
}

pub(crate) fn frac_kernel_tol<T: Real>(
    params: &LaguerreParams<T>,
    sigma: T,
    r: T,
    s: T,
    tol: T,
) -> Result<(EvalResult<T>, bool)> {
    MedaIntegral::new(sigma)
        .tol(T::lit(1e-300), tol)
        .right_exponent(params.alpha() + T::one() + sigma)
        .breakpoints(kernel_breakpoints(r, s))
        .integrate_best_effort(&mut |p: &MedaPoint<T>| translated_heat_kernel_at(params, p, r, s))
}

/// F_{α,σ}(r) = ∫_0^∞ (1 − 𝒯_{α,t}1(r)) dt/(sinh 2t)^{σ+1}.
pub fn f_alpha_sigma<T: Real>(params: &LaguerreParams<T>, sigma: T, r: T) -> Result<EvalResult<T>> {
    f_alpha_sigma_tol(params, sigma, r, T::lit(KERNEL_TOL))
}

pub fn f_alpha_sigma_tol<T: Real>(
    params: &LaguerreParams<T>,
    sigma: T,
    r: T,
    tol: T,
) -> Result<EvalResult<T>> {
    check_sigma(sigma)?;
    if !(r >= T::zero()) {
        return Err(Error::domain("f_alpha_sigma", "r >= 0", r.f64()));
    }
    let a1 = params.alpha() + T::one();
    let h = T::half();
    MedaIntegral::new(sigma)
        .tol(tol * T::lit(1e-3), tol)
        .left_exponent(-sigma)
        .integrate(|p| -(-a1 * p.ln_cosh2t() - p.tanh2t() * r * r * h).exp_m1())
}

/// L_{α,σ}f(r) through the subordination representation
/// c_σ ∫(f(r) − f(s))𝒦(r,s)dμ_α(s) + f(r)(E_σ + c_σ F_{α,σ}(r)).
///
/// The t-integral is taken outermost; for each t the s-integral of
/// (f(r) − f(s)) 𝒯_r q_t(s) is smooth, so the diagonal never appears.
pub fn apply_fractional_pointwise<T: Real>(
    f: &RadialFunction<T>,
    params: &LaguerreParams<T>,
    sigma: T,
    r: T,
) -> Result<EvalResult<T>> {
    apply_fractional_pointwise_tol(f, params, sigma, r, T::lit(1e-9))
}

pub fn apply_fractional_pointwise_tol<T: Real>(
    f: &RadialFunction<T>,
    params: &LaguerreParams<T>,
    sigma: T,
    r: T,
    tol: T,
) -> Result<EvalResult<T>> {
    check_sigma(sigma)?;
    if !(r >= T::zero()) {
        return Err(Error::domain(
            "apply_fractional_pointwise",
            "r >= 0",
            r.f64(),
        ));
    }
    let c = c_sigma(sigma)?;
    let fr = f.eval(r);
    let (flo, fhi) = f.range();
    let scale = sup_abs(f);
    let mut inner_err = None;
    let two_a1 = T::two() * params.alpha() + T::one();
    let inner = |p: &MedaPoint<T>| -> Result<T> {
        let w = p.xi.sqrt();
        let mut lo = (r - T::lit(40.0) * w).max(T::zero());
        let mut hi = r + T::lit(40.0) * w;
        if fr == T::zero() {
            lo = lo.max(flo);
            hi = hi.min(fhi);
            if !(hi > lo) {
                return Ok(T::zero());
            }
        }
        let mut bps = vec![r];
        for k in [2.0, 6.0, 14.0] {
            bps.push(r - T::lit(k) * w);
            bps.push(r + T::lit(k) * w);
        }
        if let Support::Compact { min, max } = f.support() {
            bps.push(min);
            bps.push(max);
        }
        let mut integ = Integrator::new(tol)
            .abs_tol(scale * (tol * T::lit(0.1) * p.xi).max(T::lit(1e-15)))
            .breakpoints(&bps);
        if lo == T::zero() {
            integ = integ.left_exponent(two_a1);
        }
        Ok(integ
            .integrate(
                |s| (fr - f.eval(s)) * translated_heat_kernel_at(params, p, r, s) * s.powf(two_a1),
                lo,
                hi,
            )?
            .value)
    };
    // Below XI_CUT the inner value is O(ξ) and its rounding floor, weighted
    // by ξ^{−σ−1}, stops being integrable. It vanishes at ξ = 0 and is smooth
    // in ξ = tanh t, so a cubic through three nodes replaces it there.
    let x0 = T::lit(XI_CUT);
    let (v1, v2, v4) = (
        inner(&MedaPoint::from_xi(x0))?,
        inner(&MedaPoint::from_xi(x0 * T::half()))?,
        inner(&MedaPoint::from_xi(x0 * T::lit(0.25)))?,
    );
    // v(ξ) = aξ + bξ² + cξ³ with u = ξ/ξ0 at u = 1, 1/2, 1/4
    let (y1, y2, y4) = (v1, v2 * T::two(), v4 * T::lit(4.0));
    let k3 = (y1 - T::lit(3.0) * y2 + T::two() * y4) * T::lit(8.0) / T::lit(3.0);
    let k2 = T::two() * (y1 - y2) - T::lit(1.5) * k3;
    let k1 = y1 - k2 - k3;
    let model = |x: T| {
        let u = x / x0;
        u * (k1 + u * (k2 + u * k3))
    };
    let mut outer = MedaIntegral::new(sigma)
        .tol(tol * scale * T::lit(1e-3), tol)
        .left_exponent(-sigma)
        .breakpoints(vec![x0]);
    // each outer panel costs a full inner integral per node
    outer.max_intervals = 400;
    let diff = outer.integrate(|p| {
        if p.xi <= x0 {
            return model(p.xi);
        }
        match inner(p) {
            Ok(v) => v,
            Err(e) => {
                inner_err.get_or_insert(e);
                T::zero()
            }
        }
    })?;
    if let Some(e) = inner_err {
        return Err(e);
    }
    let local = if fr == T::zero() {
        EvalResult::exact(T::zero())
    } else {
        let fa = f_alpha_sigma_tol(params, sigma, r, tol * T::lit(0.1))?;
        let es = e_sigma(sigma)?;
        EvalResult::new(fr * (es + c * fa.value), fr.abs() * c * fa.abs_err)
    };
    Ok(EvalResult::new(
        c * diff.value + local.value,
        c * diff.abs_err + local.abs_err,
    ))
}

// max |f| on a coarse probe of its range, used to scale absolute tolerances
fn sup_abs<T: Real>(f: &RadialFunction<T>) -> T {
    let (lo, hi) = f.range();
    let hi = if hi.is_finite() { hi } else { T::lit(12.0) };
    let mut m = T::zero();
    for i in 0..=400 {
        let r = lo + (hi - lo) * T::of(i) / T::lit(400.0);
        m = m.max(f.eval(r).abs());
    }
    if m > T::zero() {
        m
    } else {
        T::one()
    }
}

/// ⟨L_{α,σ}f, f⟩ or ⟨L_α^σ f, f⟩ from the coefficients.
pub fn quadratic_form_spectral<T: Real>(v: &SpectralVector<T>, sigma: T, kind: FracKind) -> T {
    apply_fractional(v, sigma, kind).dot(v)
}

/// The spectral path on a radial profile, N terms with the default rule.
pub fn quadratic_form<T: Real>(
    f: &RadialFunction<T>,
    params: &LaguerreParams<T>,
    sigma: T,
    kind: FracKind,
    terms: usize,
) -> Result<T> {
    let rule = default_rule(f, params, terms)?;
    let v = analyze(f, params, terms, &rule)?;
    Ok(quadratic_form_spectral(&v, sigma, kind))
}

/// The bilinear-form path for a compactly supported f:
/// (c_σ/2)∬|f(r) − f(s)|²𝒦 dμdμ + ∫|f|²(E_σ + c_σF) dμ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FormIntegral<T> {
    pub value: T,
    pub double_integral: T,
    pub potential_term: T,
    pub abs_err: T,
}

pub fn quadratic_form_integral<T: Real>(
    f: &RadialFunction<T>,
    params: &LaguerreParams<T>,
    sigma: T,
    tol: T,
) -> Result<FormIntegral<T>> {
    let c = c_sigma(sigma)?;
    let es = e_sigma(sigma)?;
    let (a, b) = match f.support() {
        Support::Compact { min, max } => (min, max),
        Support::Unbounded => {
            return Err(Error::Construction {
                what: "quadratic_form_integral",
                reason: "the double-integral path needs a compactly supported profile".into(),
            })
        }
    };
    let one = |_: T| T::one();
    let dbl = ground_state_double_integral(params, sigma, a, b, &|x| f.eval(x), &one, tol)?;
    let two_a1 = T::two() * params.alpha() + T::one();
    let mut err = None;
    let pot = Integrator::new(tol).abs_tol(T::lit(1e-300)).integrate(
        |r| {
            let v = f.eval(r);
            if v == T::zero() {
                return T::zero();
            }
            let fa = match f_alpha_sigma_tol(params, sigma, r, tol * T::lit(0.1)) {
                Ok(x) => x.value,
                Err(e) => {
                    err.get_or_insert(e);
                    T::zero()
                }
            };
            v * v * (es + c * fa) * r.powf(two_a1)
        },
        a,
        b,
    )?;
    if let Some(e) = err {
        return Err(e);
    }
    let d = dbl.value * c * T::half();
    Ok(FormIntegral {
        value: d + pot.value,
        double_integral: d,
        potential_term: pot.value,
        abs_err: dbl.abs_err * c * T::half() + pot.abs_err,
    })
}

/// ∬ |g(r) − g(s)|² 𝒦(r,s) w(r) w(s) dμ(r) dμ(s) for g supported in [a, b],
/// computed as ∫_{r∈[a,b]} [∫_{s∈[a,b]} + 2∫_{s∉[a,b]}].
pub(crate) fn ground_state_double_integral<T: Real>(
    params: &LaguerreParams<T>,
    sigma: T,
    a: T,
    b: T,
    g: &dyn Fn(T) -> T,
    w: &dyn Fn(T) -> T,
    tol: T,
) -> Result<EvalResult<T>> {
    let two_a1 = T::two() * params.alpha() + T::one();
    let ktol = tol * T::lit(0.01);
    let floor = T::lit(1e-13);
    let mut err = None;
    let mut kernel = |r: T, s: T| -> T {
        if (r - s).abs() <= floor * (r + s) {
            return T::zero();
        }
        match frac_kernel_tol(params, sigma, r, s, ktol) {
            Ok((v, _)) => v.value,
            Err(e) => {
                err.get_or_insert(e);
                T::zero()
            }
        }
    };
    let p_diag = T::one() - T::two() * sigma;
    let res = {
        let inner = |r: T, kernel: &mut dyn FnMut(T, T) -> T| -> Result<T> {
            let gr = g(r);
            let wr = w(r);
            let mut f_in = |s: T| {
                let d = gr - g(s);
                d * d * kernel(r, s) * w(s) * s.powf(two_a1)
            };
            let left = Integrator::new(ktol)
                .abs_tol(T::lit(1e-300))
                .right_exponent(p_diag)
                .integrate_best_effort(&mut f_in, a, r)?
                .0;
            let right = Integrator::new(ktol)
                .abs_tol(T::lit(1e-300))
                .left_exponent(p_diag)
                .integrate_best_effort(&mut f_in, r, b)?
                .0;
            let mut out = left.value + right.value;
            if gr != T::zero() {
                let mut f_out = |s: T| kernel(r, s) * w(s) * s.powf(two_a1);
                let mut outside = T::zero();
                if a > T::zero() {
                    let lo = Integrator::new(ktol)
                        .abs_tol(T::lit(1e-300))
                        .left_exponent(two_a1)
                        .integrate_best_effort(&mut f_out, T::zero(), a)?
                        .0;
                    outside = outside + lo.value;
                }
                let hi = Integrator::new(ktol)
                    .abs_tol(T::lit(1e-300))
                    .tail_scale(T::two())
                    .integrate_best_effort(&mut f_out, b, T::infinity())?
                    .0;
                outside = outside + hi.value;
                out = out + T::two() * gr * gr * outside;
            }
            Ok(out * wr * r.powf(two_a1))
        };
        let mut inner_err = None;
        let r = Integrator::new(tol).abs_tol(T::lit(1e-300)).integrate(
            |r| match inner(r, &mut kernel) {
                Ok(v) => v,
                Err(e) => {
                    inner_err.get_or_insert(e);
                    T::zero()
                }
            },
            a,
            b,
        );
        if let Some(e) = inner_err {
            return Err(e);
        }
        r?
    };
    if let Some(e) = err {
        return Err(e);
    }
    Ok(res)
}
