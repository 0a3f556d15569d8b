//! Laguerre functions φ_n^α(r) = L_n^α(r²)e^{−r²/2}, their orthonormal
//! versions ψ_n^α on L²((0,∞), r^{2α+1}dr), expansions, and the Laguerre
//! translation and convolution.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::{radial_rule, Integrator, QuadratureRule};
use crate::specfun::{bessel_j_reduced, laguerre_poly, ln_gamma_value, EvalResult};
use crate::Real;

/// Order α of the Laguerre system, α > −1/2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LaguerreParams<T> {
    alpha: T,
}

impl<T: Real> LaguerreParams<T> {
    pub fn new(alpha: T) -> Result<Self> {
        if !(alpha > -T::half()) || !alpha.is_finite() {
            return Err(Error::Constraint {
                name: "alpha",
                constraint: "α > −1/2",
                value: alpha.f64(),
            });
        }
        Ok(LaguerreParams { alpha })
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    /// Eigenvalue 4n + 2α + 2 of L_α on φ_n^α.
    pub fn eigenvalue(&self, n: usize) -> T {
        T::of(4 * n) + T::two() * self.alpha + T::two()
    }

    /// r^{2α+1}.
    pub fn density(&self, r: T) -> T {
        r.powf(T::two() * self.alpha + T::one())
    }

    /// ln of (2 n!/Γ(n+α+1))^{1/2}, the factor taking φ_n to ψ_n.
    pub fn ln_psi_norm(&self, n: usize) -> T {
        let nn = T::of(n);
        T::half()
            * (T::two().ln() + ln_gamma_value(nn + T::one())
                - ln_gamma_value(nn + self.alpha + T::one()))
    }

    /// Rising factorial (α+1)_n = Γ(α+n+1)/Γ(α+1).
    pub fn rising(&self, n: usize) -> T {
        let a = self.alpha + T::one();
        (ln_gamma_value(a + T::of(n)) - ln_gamma_value(a)).exp()
    }
}

pub fn eval_phi<T: Real>(params: &LaguerreParams<T>, n: usize, r: T) -> T {
    let x = r * r;
    // α > −1/2 and x ≥ 0 are guaranteed, so the polynomial cannot fail
    laguerre_poly(n, params.alpha, x).unwrap_or(T::nan()) * (-x * T::half()).exp()
}

pub fn eval_psi<T: Real>(params: &LaguerreParams<T>, n: usize, r: T) -> T {
    let mut rec = PsiRecurrence::new(params, &[r]);
    for _ in 0..n {
        rec.advance();
    }
    rec.current()[0]
}

/// ψ_0^α(r), …, ψ_{n−1}^α(r).
pub fn eval_psi_all<T: Real>(params: &LaguerreParams<T>, n: usize, r: T) -> Vec<T> {
    let mut rec = PsiRecurrence::new(params, &[r]);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push(rec.current()[0]);
        rec.advance();
    }
    out
}

/// Three-term recurrence for ψ_n^α run simultaneously at many radii.
///
/// Values are carried with a per-point exponent so that ψ_0 = c e^{−r²/2}
/// may underflow without losing the later, larger members.
pub struct PsiRecurrence<T> {
    alpha: T,
    xs: Vec<T>,
    prev: Vec<T>,
    cur: Vec<T>,
    lscale: Vec<T>,
    factor: Vec<T>,
    out: Vec<T>,
    n: usize,
}

const RESCALE: f64 = 1e150;

impl<T: Real> PsiRecurrence<T> {
    pub fn new(params: &LaguerreParams<T>, radii: &[T]) -> Self {
        let alpha = params.alpha;
        let xs: Vec<T> = radii.iter().map(|&r| r * r).collect();
        let l0 = T::half() * (T::two().ln() - ln_gamma_value(alpha + T::one()));
        let lscale: Vec<T> = xs.iter().map(|&x| l0 - x * T::half()).collect();
        let factor: Vec<T> = lscale.iter().map(|l| l.exp()).collect();
        let m = xs.len();
        let mut rec = PsiRecurrence {
            alpha,
            xs,
            prev: vec![T::zero(); m],
            cur: vec![T::one(); m],
            lscale,
            factor,
            out: vec![T::zero(); m],
            n: 0,
        };
        rec.refresh();
        rec
    }

    fn refresh(&mut self) {
        for i in 0..self.xs.len() {
            self.out[i] = self.cur[i] * self.factor[i];
        }
    }

    /// Index n of the values returned by `current`.
    pub fn index(&self) -> usize {
        self.n
    }

    /// ψ_n^α at every radius.
    pub fn current(&self) -> &[T] {
        &self.out
    }

    pub fn advance(&mut self) {
        let nn = T::of(self.n);
        let a0 = T::two() * nn + T::one() + self.alpha;
        let b = (nn * (nn + self.alpha)).sqrt();
        let c = ((nn + T::one()) * (nn + self.alpha + T::one()))
            .sqrt()
            .recip();
        let big = T::lit(RESCALE);
        for i in 0..self.xs.len() {
            let next = ((a0 - self.xs[i]) * self.cur[i] - b * self.prev[i]) * c;
            self.prev[i] = self.cur[i];
            self.cur[i] = next;
            if next.abs() > big {
                self.prev[i] = self.prev[i] / big;
                self.cur[i] = self.cur[i] / big;
                self.lscale[i] = self.lscale[i] + big.ln();
                self.factor[i] = self.lscale[i].exp();
            }
        }
        self.n += 1;
        self.refresh();
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Smoothness {
    Bump,
    SchwartzLike,
    RawSamples,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Support<T> {
    Compact { min: T, max: T },
    Unbounded,
}

/// A radial profile on (0, ∞) with an identifier and support metadata.
#[derive(Clone)]
pub struct RadialFunction<T> {
    id: String,
    smoothness: Smoothness,
    support: Support<T>,
    eval: Arc<dyn Fn(T) -> T + Send + Sync>,
}

impl<T> fmt::Debug for RadialFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RadialFunction")
            .field("id", &self.id)
            .finish()
    }
}

impl<T: Real> RadialFunction<T> {
    pub fn from_fn<F>(
        id: impl Into<String>,
        smoothness: Smoothness,
        support: Support<T>,
        f: F,
    ) -> Self
    where
        F: Fn(T) -> T + Send + Sync + 'static,
    {
        RadialFunction {
            id: id.into(),
            smoothness,
            support,
            eval: Arc::new(f),
        }
    }

    /// exp(−1/((r−a)(b−r))) on (a, b), zero elsewhere.
    pub fn bump(a: T, b: T) -> Result<Self> {
        if !(a >= T::zero()) || !(b > a) || !b.is_finite() {
            return Err(Error::Constraint {
                name: "bump",
                constraint: "0 ≤ a < b",
                value: a.f64(),
            });
        }
        Ok(Self::from_fn(
            format!("bump:{},{}", a, b),
            Smoothness::Bump,
            Support::Compact { min: a, max: b },
            move |r| {
                if r <= a || r >= b {
                    T::zero()
                } else {
                    (-T::one() / ((r - a) * (b - r))).exp()
                }
            },
        ))
    }

    /// (Σ_k p_k r^{2k}) e^{−r²/(2w²)}.
    pub fn schwartz_like(poly: Vec<T>, width: T) -> Result<Self> {
        if !(width > T::zero()) || poly.is_empty() {
            return Err(Error::Constraint {
                name: "width",
                constraint: "width > 0 and a nonempty polynomial",
                value: width.f64(),
            });
        }
        let id = format!(
            "packet:{}:{}",
            poly.iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(","),
            width
        );
        let inv = T::half() / (width * width);
        Ok(Self::from_fn(
            id,
            Smoothness::SchwartzLike,
            Support::Unbounded,
            move |r| {
                let x = r * r;
                let p = poly.iter().rev().fold(T::zero(), |acc, &c| acc * x + c);
                p * (-x * inv).exp()
            },
        ))
    }

    /// e^{−r²/2}.
    pub fn gaussian() -> Self {
        Self::from_fn(
            "gaussian",
            Smoothness::SchwartzLike,
            Support::Unbounded,
            |r: T| (-r * r * T::half()).exp(),
        )
    }

    /// Natural cubic spline through (r_i, v_i), zero outside [r_0, r_last].
    pub fn samples(id: impl Into<String>, r: Vec<T>, v: Vec<T>) -> Result<Self> {
        let n = r.len();
        if n < 3 || v.len() != n || r.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Construction {
                what: "RadialFunction::samples",
                reason: "need at least 3 strictly increasing abscissae with matching values".into(),
            });
        }
        // second derivatives by the tridiagonal sweep
        let mut m = vec![T::zero(); n];
        let mut u = vec![T::zero(); n];
        for i in 1..n - 1 {
            let sig = (r[i] - r[i - 1]) / (r[i + 1] - r[i - 1]);
            let p = sig * m[i - 1] + T::two();
            m[i] = (sig - T::one()) / p;
            let d = (v[i + 1] - v[i]) / (r[i + 1] - r[i]) - (v[i] - v[i - 1]) / (r[i] - r[i - 1]);
            u[i] = (T::lit(6.0) * d / (r[i + 1] - r[i - 1]) - sig * u[i - 1]) / p;
        }
        for i in (0..n - 1).rev() {
            m[i] = m[i] * m[i + 1] + u[i];
        }
        let support = Support::Compact {
            min: r[0],
            max: r[n - 1],
        };
        Ok(Self::from_fn(
            id,
            Smoothness::RawSamples,
            support,
            move |x| {
                if x < r[0] || x > r[n - 1] {
                    return T::zero();
                }
                let k = match r.binary_search_by(|p| p.partial_cmp(&x).unwrap()) {
                    Ok(i) => return v[i],
                    Err(i) => i.clamp(1, n - 1),
                };
                let h = r[k] - r[k - 1];
                let a = (r[k] - x) / h;
                let b = (x - r[k - 1]) / h;
                a * v[k - 1]
                    + b * v[k]
                    + ((a * a * a - a) * m[k - 1] + (b * b * b - b) * m[k]) * h * h / T::lit(6.0)
            },
        ))
    }

    /// c·f.
    pub fn scaled(&self, c: T) -> Self {
        let inner = self.eval.clone();
        RadialFunction {
            id: format!("{}*{}", c, self.id),
            smoothness: self.smoothness,
            support: self.support,
            eval: Arc::new(move |r| c * inner(r)),
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn smoothness(&self) -> Smoothness {
        self.smoothness
    }

    pub fn support(&self) -> Support<T> {
        self.support
    }

    pub fn eval(&self, r: T) -> T {
        (self.eval)(r)
    }

    /// Integration range: the support, or (0, ∞).
    pub fn range(&self) -> (T, T) {
        match self.support {
            Support::Compact { min, max } => (min, max),
            Support::Unbounded => (T::zero(), T::infinity()),
        }
    }
}

/// Coefficients against ψ_0^α, …, ψ_{N−1}^α.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralVector<T> {
    pub params: LaguerreParams<T>,
    pub coeffs: Vec<T>,
}

impl<T: Real> SpectralVector<T> {
    pub fn new(params: LaguerreParams<T>, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::Construction {
                what: "SpectralVector",
                reason: "coefficients must be finite and nonempty".into(),
            });
        }
        Ok(SpectralVector { params, coeffs })
    }

    /// The n-th unit vector in a space of dimension `len`.
    pub fn unit(params: LaguerreParams<T>, n: usize, len: usize) -> Self {
        let mut coeffs = vec![T::zero(); len.max(n + 1)];
        coeffs[n] = T::one();
        SpectralVector { params, coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    pub fn norm_sq(&self) -> T {
        self.coeffs.iter().map(|&c| c * c).sum()
    }

    /// Diagonal action c_n ↦ m(n) c_n.
    pub fn map_diagonal<M: Fn(usize) -> T>(&self, m: M) -> Self {
        SpectralVector {
            params: self.params,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, &c)| m(n) * c)
                .collect(),
        }
    }

    pub fn dot(&self, other: &Self) -> T {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| a * b)
            .sum()
    }
}

/// Nodes needed to resolve ψ_n for n < N on an interval of length `len`.
fn panels_for<T: Real>(params: &LaguerreParams<T>, n: usize, len: T) -> usize {
    let lam = params.eigenvalue(n).sqrt();
    let waves = T::two() * len * lam / (T::two() * T::PI());
    waves.ceil().to_usize().unwrap_or(0) + 16
}

/// A rule adequate for expanding `f` up to N terms: composite Gauss on the
/// support for compact profiles, the radial Gauss rule otherwise.
pub fn default_rule<T: Real>(
    f: &RadialFunction<T>,
    params: &LaguerreParams<T>,
    n: usize,
) -> Result<QuadratureRule<T>> {
    match f.support() {
        Support::Compact { min, max } => {
            let panels = panels_for(params, n, max - min);
            let mut rule = QuadratureRule::composite(min, max, panels, 16);
            rule.weights = rule.mu_weights(params.alpha)?;
            rule.domain = crate::quadrature::DomainTag::RadialMuAlpha;
            rule.alpha = Some(params.alpha);
            Ok(rule)
        }
        Support::Unbounded => radial_rule(params.alpha, (2 * n + 40).max(80)),
    }
}

fn rule_mu_weights<T: Real>(
    rule: &QuadratureRule<T>,
    params: &LaguerreParams<T>,
) -> Result<Vec<T>> {
    rule.mu_weights(params.alpha)
}

/// a_n = ∫ f ψ_n^α dμ_α for n < N, by the given rule.
pub fn analyze<T: Real>(
    f: &RadialFunction<T>,
    params: &LaguerreParams<T>,
    n: usize,
    rule: &QuadratureRule<T>,
) -> Result<SpectralVector<T>> {
    if n == 0 {
        return Err(Error::Construction {
            what: "analyze",
            reason: "truncation N must be positive".into(),
        });
    }
    let w = rule_mu_weights(rule, params)?;
    let fw: Vec<T> = rule
        .nodes
        .iter()
        .zip(&w)
        .map(|(&r, &wi)| f.eval(r) * wi)
        .collect();
    let mut rec = PsiRecurrence::new(params, &rule.nodes);
    let mut coeffs = Vec::with_capacity(n);
    for _ in 0..n {
        coeffs.push(rec.current().iter().zip(&fw).map(|(&p, &q)| p * q).sum());
        rec.advance();
    }
    SpectralVector::new(*params, coeffs)
}

/// ‖f‖² by the same rule.
pub fn norm_sq<T: Real>(
    f: &RadialFunction<T>,
    params: &LaguerreParams<T>,
    rule: &QuadratureRule<T>,
) -> Result<T> {
    let w = rule_mu_weights(rule, params)?;
    Ok(rule
        .nodes
        .iter()
        .zip(&w)
        .map(|(&r, &wi)| {
            let v = f.eval(r);
            v * v * wi
        })
        .sum())
}

/// `analyze` plus the relative Parseval tail (‖f‖² − Σ a_n²)/‖f‖²; fails
/// with an accuracy error when the tail exceeds `max_tail`.
pub fn analyze_checked<T: Real>(
    f: &RadialFunction<T>,
    params: &LaguerreParams<T>,
    n: usize,
    rule: &QuadratureRule<T>,
    max_tail: T,
) -> Result<(SpectralVector<T>, T)> {
    let v = analyze(f, params, n, rule)?;
    let total = norm_sq(f, params, rule)?;
    let tail = if total > T::zero() {
        (total - v.norm_sq()) / total
    } else {
        T::zero()
    };
    if tail > max_tail {
        return Err(Error::Accuracy {
            context: "analyze",
            partial: v.norm_sq().f64(),
            estimate: tail.f64(),
            tolerance: max_tail.f64(),
        });
    }
    Ok((v, tail))
}

/// Σ_n a_n ψ_n^α(r).
pub fn synthesize<T: Real>(v: &SpectralVector<T>, r: T) -> T {
    synthesize_many(v, &[r])[0]
}

pub fn synthesize_many<T: Real>(v: &SpectralVector<T>, radii: &[T]) -> Vec<T> {
    let mut rec = PsiRecurrence::new(&v.params, radii);
    let mut out = vec![T::zero(); radii.len()];
    for &c in &v.coeffs {
        for (o, &p) in out.iter_mut().zip(rec.current()) {
            *o = *o + c * p;
        }
        rec.advance();
    }
    out
}

/// Result of `stream_multiplier`.
#[derive(Debug, Clone, Serialize)]
pub struct StreamOutput<T> {
    /// Σ_{n<N} m(n) a_n ψ_n(probe).
    pub values: Vec<T>,
    /// Σ a_n².
    pub energy: T,
    /// Σ m(n) a_n².
    pub form: T,
    pub terms: usize,
    pub last_coeff: T,
}

/// Evaluate the multiplier operator m(L) f at the probe radii without
/// storing the coefficient vector; suited to N in the tens of thousands.
pub fn stream_multiplier<T: Real, M: Fn(usize) -> T>(
    f: &RadialFunction<T>,
    params: &LaguerreParams<T>,
    n: usize,
    rule: &QuadratureRule<T>,
    multiplier: M,
    probes: &[T],
) -> Result<StreamOutput<T>> {
    let w = rule_mu_weights(rule, params)?;
    let nq = rule.len();
    let fw: Vec<T> = rule
        .nodes
        .iter()
        .zip(&w)
        .map(|(&r, &wi)| f.eval(r) * wi)
        .collect();
    let mut pts = rule.nodes.clone();
    pts.extend_from_slice(probes);
    let mut rec = PsiRecurrence::new(params, &pts);
    let mut values = vec![T::zero(); probes.len()];
    let mut energy = T::zero();
    let mut form = T::zero();
    let mut last = T::zero();
    for k in 0..n {
        let psi = rec.current();
        let a: T = psi[..nq].iter().zip(&fw).map(|(&p, &q)| p * q).sum();
        let m = multiplier(k);
        let ma = m * a;
        for (v, &p) in values.iter_mut().zip(&psi[nq..]) {
            *v = *v + ma * p;
        }
        energy = energy + a * a;
        form = form + ma * a;
        last = a;
        rec.advance();
    }
    Ok(StreamOutput {
        values,
        energy,
        form,
        terms: n,
        last_coeff: last,
    })
}

/// Default tolerance for the angular and radial integrals.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Laguerre translation 𝒯_r^α f(s), normalised so that 𝒯_0 is the identity:
///
/// 𝒯_r f(s) = Γ(α+1)2^α/√(2π) ∫_0^π f(√(r²+s²+2rs cosθ)) j_{α−1/2}(rs sinθ) sin^{2α}θ dθ
///
/// with j_ν(z) = J_ν(z) z^{−ν}.
pub fn translate<T: Real>(
    params: &LaguerreParams<T>,
    f: &RadialFunction<T>,
    r: T,
    s: T,
) -> Result<EvalResult<T>> {
    translate_tol(params, f, r, s, T::lit(DEFAULT_TOL))
}

pub fn translate_tol<T: Real>(
    params: &LaguerreParams<T>,
    f: &RadialFunction<T>,
    r: T,
    s: T,
    tol: T,
) -> Result<EvalResult<T>> {
    translate_with(params, |x| f.eval(x), f.range(), r, s, tol)
}

/// Translation of an arbitrary closure; `range` is where it may be nonzero.
pub fn translate_with<T: Real, F: Fn(T) -> T>(
    params: &LaguerreParams<T>,
    f: F,
    range: (T, T),
    r: T,
    s: T,
    tol: T,
) -> Result<EvalResult<T>> {
    let alpha = params.alpha;
    if !(r >= T::zero()) || !(s >= T::zero()) {
        return Err(Error::domain("translate", "r, s >= 0", r.min(s).f64()));
    }
    if r == T::zero() || s == T::zero() {
        return Ok(EvalResult::exact(f(r.max(s))));
    }
    let nu = alpha - T::half();
    let pre = (ln_gamma_value(alpha + T::one()) + alpha * T::two().ln()
        - T::half() * (T::two() * T::PI()).ln())
    .exp();
    let rs = r * s;
    let rad = |th: T| {
        (r * r + s * s + T::two() * rs * th.cos())
            .max(T::zero())
            .sqrt()
    };
    // θ-window where the argument lies in the support: |r−s| ≤ ρ ≤ r+s
    let (lo, hi) = range;
    let cos_of = |rho: T| {
        ((rho * rho - r * r - s * s) / (T::two() * rs))
            .max(-T::one())
            .min(T::one())
    };
    let th_hi = if lo > (r - s).abs() {
        cos_of(lo).acos()
    } else {
        T::PI()
    };
    let th_lo = if hi < r + s {
        cos_of(hi).acos()
    } else {
        T::zero()
    };
    if !(th_hi > th_lo) {
        return Ok(EvalResult::exact(T::zero()));
    }
    let mut err = None;
    let mut integ = Integrator::new(tol).abs_tol(tol * T::lit(1e-3));
    let p = T::two() * alpha;
    if th_lo == T::zero() && p != T::zero() {
        integ = integ.left_exponent(p);
    }
    if th_hi == T::PI() && p != T::zero() {
        integ = integ.right_exponent(p);
    }
    let res = integ.integrate(
        |th: T| {
            let sn = th.sin();
            let j = match bessel_j_reduced(nu, rs * sn) {
                Ok(v) => v,
                Err(e) => {
                    err.get_or_insert(e);
                    T::zero()
                }
            };
            f(rad(th)) * j * sn.powf(p)
        },
        th_lo,
        th_hi,
    )?;
    if let Some(e) = err {
        return Err(e);
    }
    Ok(EvalResult::new(res.value * pre, res.abs_err * pre))
}

/// (f ∗_α g)(r) = ∫_0^∞ 𝒯_r^α f(s) g(s) dμ_α(s).
pub fn convolve<T: Real>(
    params: &LaguerreParams<T>,
    f: &RadialFunction<T>,
    g: &RadialFunction<T>,
    r: T,
) -> Result<EvalResult<T>> {
    convolve_tol(params, f, g, r, T::lit(DEFAULT_TOL))
}

pub fn convolve_tol<T: Real>(
    params: &LaguerreParams<T>,
    f: &RadialFunction<T>,
    g: &RadialFunction<T>,
    r: T,
    tol: T,
) -> Result<EvalResult<T>> {
    let (flo, fhi) = f.range();
    let (glo, ghi) = g.range();
    // 𝒯_r f(s) vanishes unless |r − s| < fhi and r + s > flo
    let lo = glo.max(flo - r).max((r - fhi).max(T::zero()));
    let hi = ghi.min(r + fhi);
    if !(hi > lo) {
        return Ok(EvalResult::exact(T::zero()));
    }
    let inner_tol = tol * T::lit(0.1);
    let mut err = None;
    let mut integ = Integrator::new(tol)
        .abs_tol(tol * T::lit(1e-3))
        .tail_scale(T::two());
    let mut bps = Vec::new();
    for c in [r, (r - flo).abs(), flo - r, r + flo] {
        if c > lo && c < hi {
            bps.push(c);
        }
    }
    integ = integ.breakpoints(&bps);
    let res = integ.integrate(
        |s: T| {
            if s == T::zero() {
                return T::zero();
            }
            let t = match translate_tol(params, f, r, s, inner_tol) {
                Ok(v) => v.value,
                Err(e) => {
                    err.get_or_insert(e);
                    T::zero()
                }
            };
            t * g.eval(s) * params.density(s)
        },
        lo,
        hi,
    )?;
    if let Some(e) = err {
        return Err(e);
    }
    Ok(res)
}

/// n!/(α+1)_n under the rising reading, or n!/[(α+1)(α)···(α−n+2)] under
/// the falling one; the product formula holds only for the former.
pub fn product_formula_constant<T: Real>(params: &LaguerreParams<T>, n: usize, rising: bool) -> T {
    let lf = ln_gamma_value(T::of(n) + T::one());
    if rising {
        (lf - (params.rising(n)).ln()).exp()
    } else {
        let a = params.alpha + T::one();
        let mut p = T::one();
        for k in 0..n {
            p = p * (a - T::of(k));
        }
        lf.exp() / p
    }
}
