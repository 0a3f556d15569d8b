//! Reduction of the Dunkl–Hermite operator to Laguerre modes.
//!
//! An h-harmonic expansion f(rx') = Σ f_{m,j}(r) Y_{m,j}(x') is stored through
//! the reduced profiles g_{m,j} = r^{−m} f_{m,j}; each of them lives at
//! Laguerre order λ+m with λ = d/2 + γ − 1.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hardy::{constant_b, hardy_verdict, Diagnostics, HardyOptions, HardyReport, ReportParams, Tolerances, Verdict, HARDY_SLACK};
use crate::laguerre::{
    analyze, convolve_tol, default_rule, eval_phi, synthesize, LaguerreParams, RadialFunction, Smoothness,
    SpectralVector, Support,
};
use crate::quadrature::{gauss_legendre, Integrator, QuadratureRule};
use crate::semigroup::{apply_fractional, apply_semigroup, check_sigma, FracKind, FracParams};
use crate::specfun::{bessel_i, gamma, hermite_function, ln_gamma_ratio, ln_gamma_value, ultraspherical_poly};
use crate::{Exact, Real};

/// Dimension d, multiplicity sum γ and λ = d/2 + γ − 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DunklParams<T> {
    d: usize,
    gamma: T,
    lambda: T,
}

impl<T: Real> DunklParams<T> {
    pub fn new(d: usize, gamma: T) -> Result<Self> {
        if d == 0 {
            return Err(Error::Constraint {
                name: "d",
                constraint: "d ≥ 1",
                value: 0.0,
            });
        }
        if !(gamma >= T::zero()) || !gamma.is_finite() {
            return Err(Error::Constraint {
                name: "gamma",
                constraint: "γ ≥ 0",
                value: gamma.f64(),
            });
        }
        let lambda = T::of(d) * T::half() + gamma - T::one();
        if !(lambda > -T::half()) {
            return Err(Error::Constraint {
                name: "lambda",
                constraint: "λ = d/2 + γ − 1 > −1/2",
                value: lambda.f64(),
            });
        }
        Ok(DunklParams { d, gamma, lambda })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn gamma(&self) -> T {
        self.gamma
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    /// Laguerre system of the degree-m modes.
    pub fn mode_params(&self, m: usize) -> LaguerreParams<T> {
        LaguerreParams::new(self.lambda + T::of(m)).expect("λ + m > −1/2")
    }

    /// 2k + d + 2γ, the eigenvalue at level |μ| = k.
    pub fn level_eigenvalue(&self, k: usize) -> T {
        T::of(2 * k + self.d) + T::two() * self.gamma
    }
}

/// dim of the degree-m (h-)harmonics in d variables.
pub fn harmonic_dim(d: usize, m: usize) -> usize {
    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut c = 1usize;
        for i in 0..k {
            c = c * (n - i) / (i + 1);
        }
        c
    }
    if d == 1 {
        return usize::from(m < 2);
    }
    let a = binom(m + d - 1, d - 1);
    let b = if m >= 2 { binom(m + d - 3, d - 1) } else { 0 };
    a - b
}

/// 4n + 2(λ+m) + 2 = 2(2n+m) + d + 2γ in exact arithmetic.
pub fn eigenvalue_correspondence(n: usize, m: usize, d: usize, gamma: &Exact) -> (Exact, Exact) {
    let int = |k: usize| Exact::from_integer(BigInt::from(k));
    let two = int(2);
    let lambda = int(d) / &two + gamma - int(1);
    let radial = int(4 * n) + &two * (lambda + int(m)) + &two;
    let level = &two * int(2 * n + m) + int(d) + &two * gamma;
    (radial, level)
}

/// Both sides of ∫_{−1}^1 e^{zu} P_m^λ(u)(1−u²)^{λ−1/2} du = √π Γ(λ+1/2)(z/2)^{−λ} I_{λ+m}(z),
/// with P_m^λ(1) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FunkHecke<T> {
    pub lhs: T,
    pub rhs: T,
    /// ∫ e^{zu}|P_m^λ|(1−u²)^{λ−1/2} du, the natural error scale.
    pub scale: T,
}

pub fn funk_hecke_bessel_check<T: Real>(lambda: T, m: usize, z: T, tol: T) -> Result<FunkHecke<T>> {
    if !(lambda > -T::half()) {
        return Err(Error::Constraint {
            name: "lambda",
            constraint: "λ > −1/2",
            value: lambda.f64(),
        });
    }
    if !(z > T::zero()) {
        return Err(Error::domain("funk_hecke_bessel_check", "z > 0", z.f64()));
    }
    // u = cos θ: the weight becomes sin^{2λ}θ dθ
    let e = T::two() * lambda;
    let mut integ = Integrator::new(tol).abs_tol(T::lit(1e-300));
    if e != T::zero() {
        integ = integ.left_exponent(e).right_exponent(e);
    }
    let bps: Vec<T> = (1..2 * m + 2)
        .map(|k| T::PI() * T::of(k) / T::of(2 * m + 2))
        .collect();
    integ = integ.breakpoints(&bps);
    let mut err = None;
    // P_m^λ is orthogonal to degree < m, so e^{zu} may be replaced by its
    // Taylor remainder from order m on; this removes the cancellation at small z
    let mut f = |th: T, absolute: bool| {
        let u = th.cos();
        let p = match ultraspherical_poly(m, lambda, u.max(-T::one()).min(T::one())) {
            Ok(p) => p,
            Err(x) => {
                err.get_or_insert(x);
                T::zero()
            }
        };
        let p = if absolute { p.abs() } else { p };
        p * exp_remainder(z * u, m) * th.sin().powf(e)
    };
    let lhs = integ.integrate(|th| f(th, false), T::zero(), T::PI())?;
    let scale = integ.integrate(|th| f(th, true), T::zero(), T::PI())?;
    if let Some(x) = err {
        return Err(x);
    }
    let rhs = (T::half() * T::PI().ln() + ln_gamma_value(lambda + T::half()) - lambda * (z * T::half()).ln()).exp()
        * bessel_i(lambda + T::of(m), z)?.value;
    Ok(FunkHecke {
        lhs: lhs.value,
        rhs,
        scale: scale.value,
    })
}

// e^x − Σ_{k<m} x^k/k!
fn exp_remainder<T: Real>(x: T, m: usize) -> T {
    if x >= T::zero() || -x <= T::of(m + 1) {
        let mut term = T::one();
        for k in 1..=m {
            term = term * x / T::of(k);
        }
        let mut sum = term;
        let mut k = m;
        loop {
            k += 1;
            term = term * x / T::of(k);
            sum = sum + term;
            if term.abs() <= T::epsilon() * sum.abs() || k > m + 400 {
                return sum;
            }
        }
    }
    let mut term = T::one();
    let mut partial = T::zero();
    for k in 0..m {
        partial = partial + term;
        term = term * x / T::of(k + 1);
    }
    x.exp() - partial
}

// associated Legendre P_m^k without the Condon–Shortley phase
fn assoc_legendre<T: Real>(m: usize, k: usize, x: T) -> T {
    let s = ((T::one() - x) * (T::one() + x)).max(T::zero()).sqrt();
    let mut pkk = T::one();
    for i in 0..k {
        pkk = pkk * T::of(2 * i + 1) * s;
    }
    if m == k {
        return pkk;
    }
    let mut prev = pkk;
    let mut cur = x * T::of(2 * k + 1) * pkk;
    for l in k + 2..=m {
        let next = (T::of(2 * l - 1) * x * cur - T::of(l + k - 1) * prev) / T::of(l - k);
        prev = cur;
        cur = next;
    }
    cur
}

/// Real spherical harmonic Y_{m,j}, orthonormal on S^{d−1}, for d ∈ {2, 3};
/// `omega` is a unit vector.
///
/// d = 2: j = 0 is cos mθ (or the constant), j = 1 is sin mθ.
/// d = 3: j = 0 is P_m(cos θ); j = 2k−1, 2k are P_m^k(cos θ) cos kφ, sin kφ.
pub fn spherical_harmonic<T: Real>(d: usize, m: usize, j: usize, omega: &[T]) -> Result<T> {
    if omega.len() != d {
        return Err(Error::Construction {
            what: "spherical_harmonic",
            reason: format!("expected a point of S^{}", d.saturating_sub(1)),
        });
    }
    if j >= harmonic_dim(d, m) {
        return Err(Error::Constraint {
            name: "j",
            constraint: "0 ≤ j < dim of the degree-m harmonics",
            value: j as f64,
        });
    }
    let pi = T::PI();
    match d {
        2 => {
            let th = omega[1].atan2(omega[0]);
            if m == 0 {
                return Ok((T::two() * pi).sqrt().recip());
            }
            let a = T::of(m) * th;
            Ok(if j == 0 { a.cos() } else { a.sin() } / pi.sqrt())
        }
        3 => {
            let ct = omega[2].max(-T::one()).min(T::one());
            let ph = omega[1].atan2(omega[0]);
            let k = j.div_ceil(2);
            let ln_ratio = ln_gamma_value(T::of(m - k + 1)) - ln_gamma_value(T::of(m + k + 1));
            let mut norm = (T::of(2 * m + 1) / (T::lit(4.0) * pi)).sqrt() * (T::half() * ln_ratio).exp();
            if k > 0 {
                norm = norm * T::two().sqrt();
            }
            let ang = if k == 0 {
                T::one()
            } else if j % 2 == 1 {
                (T::of(k) * ph).cos()
            } else {
                (T::of(k) * ph).sin()
            };
            Ok(norm * assoc_legendre(m, k, ct) * ang)
        }
        _ => Err(Error::Construction {
            what: "spherical_harmonic",
            reason: "explicit harmonics are provided for d = 2 and d = 3".into(),
        }),
    }
}

/// Angular rule on S^{d−1} (d = 2, 3) exact for polynomials of degree ≤ deg.
fn sphere_rule<T: Real>(d: usize, deg: usize) -> Vec<(Vec<T>, T)> {
    let nphi = deg + 2;
    let two_pi = T::two() * T::PI();
    let hphi = two_pi / T::of(nphi);
    match d {
        2 => (0..nphi)
            .map(|i| {
                let a = hphi * T::of(i);
                (vec![a.cos(), a.sin()], hphi)
            })
            .collect(),
        _ => {
            let gl = gauss_legendre::<T>(deg / 2 + 2);
            let mut out = Vec::with_capacity(gl.len() * nphi);
            for &(ct, w) in &gl {
                let st = (T::one() - ct * ct).sqrt();
                for i in 0..nphi {
                    let a = hphi * T::of(i);
                    out.push((vec![st * a.cos(), st * a.sin(), ct], w * hphi));
                }
            }
            out
        }
    }
}

fn multi_indices(d: usize, l: usize) -> Vec<Vec<usize>> {
    if d == 1 {
        return vec![vec![l]];
    }
    let mut out = Vec::new();
    for first in 0..=l {
        for mut rest in multi_indices(d - 1, l - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Hermite projections P_ℓ(f₀(|x|) Y_{m,j}) at the points x = r ω, κ = 0.
#[derive(Debug, Clone, Serialize)]
pub struct HeckeBochner<T> {
    pub radii: Vec<T>,
    /// Unit vectors ω of the probe points r ω.
    pub directions: Vec<Vec<T>>,
    /// P_{2n+m} f by tensor-Hermite expansion.
    pub projection_direct: Vec<T>,
    /// F_n(r) Y_{m,j}(ω) with F_n = (2/Γ(λ+m+1)) r^m (g ∗_{λ+m} φ_n^{λ+m}).
    pub projection_formula: Vec<T>,
    /// P_{2n+m+1} f by tensor-Hermite expansion; identically zero.
    pub off_ladder: Vec<T>,
    pub max_err: T,
}

/// Direct Hermite projection of f(x) = r^m g(r) Y(x') onto level ℓ, evaluated at `points`.
fn hermite_projection<T: Real>(
    d: usize,
    m: usize,
    j: usize,
    g: &RadialFunction<T>,
    l: usize,
    points: &[Vec<T>],
) -> Result<Vec<T>> {
    let (lo, hi) = match g.support() {
        Support::Compact { min, max } => (min, max),
        Support::Unbounded => (T::zero(), T::lit(14.0)),
    };
    let radial = QuadratureRule::composite(lo, hi, 48, 16);
    let sphere = sphere_rule::<T>(d, l + m + 2);
    let mus = multi_indices(d, l);
    let ys: Vec<T> = sphere
        .iter()
        .map(|(w, _)| spherical_harmonic(d, m, j, w))
        .collect::<Result<_>>()?;
    let mut coef = vec![T::zero(); mus.len()];
    let mut h = vec![vec![T::zero(); l + 1]; d];
    for (&r, &wr) in radial.nodes.iter().zip(&radial.weights) {
        let gr = g.eval(r);
        if gr == T::zero() {
            continue;
        }
        let fr = gr * r.powi(m as i32) * r.powi(d as i32 - 1) * wr;
        for ((omega, wo), &y) in sphere.iter().zip(&ys) {
            for i in 0..d {
                for k in 0..=l {
                    h[i][k] = hermite_function(k, r * omega[i]);
                }
            }
            let base = fr * *wo * y;
            for (c, mu) in coef.iter_mut().zip(&mus) {
                let mut p = base;
                for i in 0..d {
                    p = p * h[i][mu[i]];
                }
                *c = *c + p;
            }
        }
    }
    Ok(points
        .iter()
        .map(|x| {
            coef.iter()
                .zip(&mus)
                .map(|(&c, mu)| {
                    let mut p = c;
                    for i in 0..d {
                        p = p * hermite_function(mu[i], x[i]);
                    }
                    p
                })
                .sum()
        })
        .collect())
}

fn probe_direction<T: Real>(d: usize, i: usize) -> Vec<T> {
    let a = T::lit(0.37) + T::lit(1.91) * T::of(i);
    match d {
        2 => vec![a.cos(), a.sin()],
        _ => {
            let ct = T::lit(0.8) - T::lit(0.53) * T::of(i % 3);
            let st = (T::one() - ct * ct).sqrt();
            vec![st * a.cos(), st * a.sin(), ct]
        }
    }
}

/// Hecke–Bochner at κ = 0 for the input r^m g(r) Y_{m,j}, radial index n.
pub fn hecke_bochner_check<T: Real>(
    dunkl: &DunklParams<T>,
    m: usize,
    j: usize,
    n: usize,
    g: &RadialFunction<T>,
    radii: &[T],
    tol: T,
) -> Result<HeckeBochner<T>> {
    if dunkl.gamma() != T::zero() {
        return Err(Error::Constraint {
            name: "gamma",
            constraint: "γ = 0 for the explicit harmonic check",
            value: dunkl.gamma().f64(),
        });
    }
    let d = dunkl.d();
    if d != 2 && d != 3 {
        return Err(Error::Constraint {
            name: "d",
            constraint: "d ∈ {2, 3} for the explicit harmonic check",
            value: d as f64,
        });
    }
    let p = dunkl.mode_params(m);
    let pp = p;
    let phi = RadialFunction::from_fn(
        format!("phi:{n}"),
        Smoothness::SchwartzLike,
        Support::Unbounded,
        move |r| eval_phi(&pp, n, r),
    );
    let pre = T::two() / gamma(p.alpha() + T::one())?;
    let points: Vec<Vec<T>> = radii
        .iter()
        .enumerate()
        .map(|(i, &r)| probe_direction::<T>(d, i).into_iter().map(|w| w * r).collect())
        .collect();
    let mut formula = Vec::with_capacity(radii.len());
    for (i, &r) in radii.iter().enumerate() {
        let c = convolve_tol(&p, g, &phi, r, tol)?;
        let y = spherical_harmonic(d, m, j, &probe_direction::<T>(d, i))?;
        formula.push(pre * r.powi(m as i32) * c.value * y);
    }
    let direct = hermite_projection(d, m, j, g, 2 * n + m, &points)?;
    let off = hermite_projection(d, m, j, g, 2 * n + m + 1, &points)?;
    let scale = formula.iter().fold(T::zero(), |s, x| s.max(x.abs())).max(T::lit(1e-300));
    let max_err = direct
        .iter()
        .zip(&formula)
        .map(|(a, b)| (*a - *b).abs())
        .chain(off.iter().map(|x| x.abs()))
        .fold(T::zero(), |s, e| s.max(e))
        / scale;
    Ok(HeckeBochner {
        radii: radii.to_vec(),
        directions: (0..radii.len()).map(|i| probe_direction::<T>(d, i)).collect(),
        projection_direct: direct,
        projection_formula: formula,
        off_ladder: off,
        max_err,
    })
}

/// Reduced radial profile of one mode.
#[derive(Debug, Clone)]
pub enum ModeProfile<T> {
    Radial(RadialFunction<T>),
    /// Coefficients against ψ_n^{λ+m}.
    Spectral(SpectralVector<T>),
}

#[derive(Debug, Clone)]
pub struct Mode<T> {
    pub m: usize,
    pub j: usize,
    pub profile: ModeProfile<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileKind {
    /// [a, b]
    Bump,
    /// []
    Gaussian,
    /// [width, p0, p1, ...]
    SchwartzLike,
    /// [n]: ψ_n^{λ+m}
    LaguerreMode,
    /// [c0, c1, ...] against ψ_n^{λ+m}
    Spectral,
}

/// One entry of the JSON decomposition format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModeSpec {
    pub m: usize,
    pub j: usize,
    pub profile_kind: ProfileKind,
    #[serde(default)]
    pub profile_params: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct HHarmonicDecomposition<T> {
    pub dunkl: DunklParams<T>,
    pub modes: Vec<Mode<T>>,
}

fn spec_error(reason: String) -> Error {
    Error::Construction {
        what: "HHarmonicDecomposition",
        reason,
    }
}

impl<T: Real> HHarmonicDecomposition<T> {
    pub fn new(dunkl: DunklParams<T>, modes: Vec<Mode<T>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for md in &modes {
            if md.j >= harmonic_dim(dunkl.d(), md.m) {
                return Err(Error::Constraint {
                    name: "j",
                    constraint: "0 ≤ j < dim of the degree-m harmonics",
                    value: md.j as f64,
                });
            }
            if !seen.insert((md.m, md.j)) {
                return Err(spec_error(format!("mode (m={}, j={}) given twice", md.m, md.j)));
            }
            if let ModeProfile::Spectral(v) = &md.profile {
                if v.params != dunkl.mode_params(md.m) {
                    return Err(spec_error(format!(
                        "spectral profile of mode (m={}, j={}) is not at order λ+m",
                        md.m, md.j
                    )));
                }
            }
        }
        Ok(HHarmonicDecomposition { dunkl, modes })
    }

    pub fn from_specs(dunkl: DunklParams<T>, specs: &[ModeSpec]) -> Result<Self> {
        let mut modes = Vec::with_capacity(specs.len());
        for s in specs {
            let p = dunkl.mode_params(s.m);
            let q: Vec<T> = s.profile_params.iter().map(|&x| T::lit(x)).collect();
            let want = |n: usize| -> Result<()> {
                if q.len() != n {
                    return Err(spec_error(format!(
                        "{:?} takes {} parameters, got {}",
                        s.profile_kind,
                        n,
                        q.len()
                    )));
                }
                Ok(())
            };
            let profile = match s.profile_kind {
                ProfileKind::Bump => {
                    want(2)?;
                    ModeProfile::Radial(RadialFunction::bump(q[0], q[1])?)
                }
                ProfileKind::Gaussian => {
                    want(0)?;
                    ModeProfile::Radial(RadialFunction::gaussian())
                }
                ProfileKind::SchwartzLike => {
                    if q.len() < 2 {
                        return Err(spec_error("schwartz_like takes [width, p0, ...]".into()));
                    }
                    ModeProfile::Radial(RadialFunction::schwartz_like(q[1..].to_vec(), q[0])?)
                }
                ProfileKind::LaguerreMode => {
                    want(1)?;
                    let n = s.profile_params[0];
                    if !(n >= 0.0 && n.fract() == 0.0 && n < 1e6) {
                        return Err(spec_error(format!("laguerre_mode index {n} is not a count")));
                    }
                    let n = n as usize;
                    ModeProfile::Spectral(SpectralVector::unit(p, n, n + 1))
                }
                ProfileKind::Spectral => {
                    if q.is_empty() {
                        return Err(spec_error("spectral profile needs coefficients".into()));
                    }
                    ModeProfile::Spectral(SpectralVector::new(p, q)?)
                }
            };
            modes.push(Mode {
                m: s.m,
                j: s.j,
                profile,
            });
        }
        Self::new(dunkl, modes)
    }

    /// Coefficients of every mode at its own order, truncated at N for
    /// radial profiles.
    pub fn spectral(&self, terms: usize) -> Result<Vec<SpectralVector<T>>> {
        self.modes
            .iter()
            .map(|md| match &md.profile {
                ModeProfile::Spectral(v) => Ok(v.clone()),
                ModeProfile::Radial(g) => {
                    let p = self.dunkl.mode_params(md.m);
                    analyze(g, &p, terms, &default_rule(g, &p, terms)?)
                }
            })
            .collect()
    }

    /// f_{m,j}(r) = r^m g_{m,j}(r) for mode `i`.
    pub fn mode_value(&self, i: usize, r: T) -> T {
        let md = &self.modes[i];
        let g = match &md.profile {
            ModeProfile::Radial(g) => g.eval(r),
            ModeProfile::Spectral(v) => synthesize(v, r),
        };
        r.powi(md.m as i32) * g
    }

    /// f(r ω) = Σ f_{m,j}(r) Y_{m,j}(ω), for d ∈ {2, 3}.
    pub fn eval(&self, x: &[T]) -> Result<T> {
        let r = x.iter().map(|&v| v * v).sum::<T>().sqrt();
        let omega: Vec<T> = if r > T::zero() {
            x.iter().map(|&v| v / r).collect()
        } else {
            let mut e = vec![T::zero(); x.len()];
            e[0] = T::one();
            e
        };
        let mut acc = T::zero();
        for (i, md) in self.modes.iter().enumerate() {
            acc = acc + self.mode_value(i, r) * spherical_harmonic(self.dunkl.d(), md.m, md.j, &omega)?;
        }
        Ok(acc)
    }
}

fn radial_of<T: Real>(md: &Mode<T>) -> RadialFunction<T> {
    match &md.profile {
        ModeProfile::Radial(g) => g.clone(),
        ModeProfile::Spectral(v) => {
            let v = v.clone();
            RadialFunction::from_fn(
                format!("spectral:m={},j={}", md.m, md.j),
                Smoothness::SchwartzLike,
                Support::Unbounded,
                move |r| synthesize(&v, r),
            )
        }
    }
}

/// e^{−tH_κ} applied mode by mode: each reduced profile evolves under the
/// Laguerre semigroup at order λ+m.
pub fn dh_semigroup_modewise<T: Real>(
    decomp: &HHarmonicDecomposition<T>,
    t: T,
    terms: usize,
) -> Result<HHarmonicDecomposition<T>> {
    if !(t >= T::zero()) {
        return Err(Error::domain("dh_semigroup_modewise", "t >= 0", t.f64()));
    }
    let vs = decomp.spectral(terms)?;
    let modes = decomp
        .modes
        .iter()
        .zip(vs)
        .map(|(md, v)| Mode {
            m: md.m,
            j: md.j,
            profile: ModeProfile::Spectral(apply_semigroup(&v, t)),
        })
        .collect();
    HHarmonicDecomposition::new(decomp.dunkl, modes)
}

/// Multiplier of H_{κ,σ} at level k: 4^σ Γ(E/4 + (1+σ)/2)/Γ(E/4 + (1−σ)/2), E = 2k+d+2γ.
pub fn dh_level_multiplier<T: Real>(dunkl: &DunklParams<T>, sigma: T, k: usize) -> T {
    let q = dunkl.level_eigenvalue(k) / T::lit(4.0);
    (sigma * T::lit(4.0).ln() + ln_gamma_ratio(q + (T::one() + sigma) * T::half(), q + (T::one() - sigma) * T::half()))
        .exp()
}

/// ⟨H_{κ,σ}f, f⟩ as Σ_{m,j} ⟨L_{λ+m,σ}g_{m,j}, g_{m,j}⟩.
pub fn dh_fractional_form<T: Real>(decomp: &HHarmonicDecomposition<T>, sigma: T, terms: usize) -> Result<T> {
    check_sigma(sigma)?;
    Ok(decomp
        .spectral(terms)?
        .iter()
        .map(|v| apply_fractional(v, sigma, FracKind::Conformal).dot(v))
        .sum())
}

/// The same form summed over Dunkl–Hermite levels k = 2n + m.
pub fn dh_fractional_form_levels<T: Real>(decomp: &HHarmonicDecomposition<T>, sigma: T, terms: usize) -> Result<T> {
    check_sigma(sigma)?;
    let vs = decomp.spectral(terms)?;
    let mut acc = T::zero();
    for (md, v) in decomp.modes.iter().zip(&vs) {
        for (n, &c) in v.coeffs.iter().enumerate() {
            acc = acc + dh_level_multiplier(&decomp.dunkl, sigma, 2 * n + md.m) * c * c;
        }
    }
    Ok(acc)
}

/// ‖V_{κ,σ}‖ = sup_k (2k+d+2γ)^{−σ} × level multiplier.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VSigmaNorm<T> {
    pub norm: T,
    pub argmax: usize,
    pub tail_deviation: T,
    pub k_max: usize,
}

pub fn v_sigma_norm<T: Real>(dunkl: &DunklParams<T>, sigma: T, k_max: usize) -> Result<VSigmaNorm<T>> {
    check_sigma(sigma)?;
    let ratio = |k: usize| {
        let q = dunkl.level_eigenvalue(k) / T::lit(4.0);
        (ln_gamma_ratio(q + (T::one() + sigma) * T::half(), q + (T::one() - sigma) * T::half()) - sigma * q.ln()).exp()
    };
    let mut best = T::neg_infinity();
    let mut arg = 0;
    for k in 0..=k_max {
        let v = ratio(k);
        if v > best {
            best = v;
            arg = k;
        }
    }
    let dev = (ratio(k_max) - T::one()).abs();
    if dev > T::lit(1e-6) {
        return Err(Error::Bracket {
            context: "v_sigma_norm",
            n_max: k_max,
            deviation: dev.f64(),
        });
    }
    Ok(VSigmaNorm {
        norm: best.max(T::one()),
        argmax: arg,
        tail_deviation: dev,
        k_max,
    })
}

/// B_{λ+m,σ}^δ ≥ B_{λ,σ}^δ for m = 0..=m_max.
pub fn yafaev_check<T: Real>(lambda: T, frac: &FracParams<T>, m_max: usize) -> Result<Vec<(usize, T, bool)>> {
    let b0 = constant_b(&LaguerreParams::new(lambda)?, frac);
    (0..=m_max)
        .map(|m| {
            let b = constant_b(&LaguerreParams::new(lambda + T::of(m))?, frac);
            Ok((m, b, b >= b0))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModeHardy<T> {
    pub m: usize,
    pub j: usize,
    pub lhs_form: T,
    pub middle_term: T,
    /// B_{λ+m,σ}^δ ∫|g|²(δ+r²)^{−σ} dμ_{λ+m}.
    pub intermediate: T,
    /// B_{λ,σ}^δ ∫|f_{m,j}|²(δ+r²)^{−σ} dμ_λ.
    pub rhs_potential: T,
    pub constant_b_mode: T,
    pub verdict: Verdict,
}

/// Per-decomposition Hardy record; the flattened fields follow the Laguerre report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DhHardyReport<T> {
    #[serde(flatten)]
    pub report: HardyReport<T>,
    pub d: usize,
    pub gamma: T,
    pub modes: Vec<ModeHardy<T>>,
}

pub fn dh_hardy_verdict<T: Real>(
    decomp: &HHarmonicDecomposition<T>,
    frac: &FracParams<T>,
    opts: &HardyOptions<T>,
) -> Result<DhHardyReport<T>> {
    let dk = &decomp.dunkl;
    let lam = LaguerreParams::new(dk.lambda())?;
    let b_lam = constant_b(&lam, frac);
    let s = frac.sigma();
    let mut modes = Vec::with_capacity(decomp.modes.len());
    let (mut lhs, mut mid, mut rhs, mut mid_a, mut pure) = (T::zero(), T::zero(), T::zero(), T::zero(), T::zero());
    let (mut nodes, mut tail) = (0usize, T::zero());
    let mut notes = Vec::new();
    let mut degraded = false;
    let mut ids = Vec::new();
    for md in &decomp.modes {
        let p = dk.mode_params(md.m);
        let g = radial_of(md);
        let rep = hardy_verdict(&g, &p, frac, opts)?;
        let b_m = rep.diagnostics.constant_b;
        let pot = rep.rhs_potential / b_m;
        lhs = lhs + rep.lhs_form;
        mid = mid + rep.middle_term;
        rhs = rhs + b_lam * pot;
        mid_a = mid_a + rep.diagnostics.middle_term_a;
        pure = pure + rep.diagnostics.pure_power_bound / rep.diagnostics.u_sigma_norm;
        nodes += rep.diagnostics.quad_nodes;
        tail = tail.max(rep.diagnostics.parseval_tail);
        degraded |= rep.verdict == Verdict::AccuracyDegraded;
        notes.extend(rep.diagnostics.notes.iter().map(|n| format!("m={},j={}: {n}", md.m, md.j)));
        ids.push(format!("{}:{}:{}", md.m, md.j, g.id()));
        modes.push(ModeHardy {
            m: md.m,
            j: md.j,
            lhs_form: rep.lhs_form,
            middle_term: rep.middle_term,
            intermediate: rep.rhs_potential,
            rhs_potential: b_lam * pot,
            constant_b_mode: b_m,
            verdict: rep.verdict,
        });
    }
    let v = v_sigma_norm(dk, s, 100_000)?.norm;
    let slack = T::lit(HARDY_SLACK) * lhs.abs().max(T::lit(1e-300));
    let g1 = lhs - mid;
    let g2 = mid - rhs;
    let links = [g1 >= -slack, g2 >= -slack, v * pure - mid >= -slack];
    let verdict = if degraded {
        Verdict::AccuracyDegraded
    } else if links.iter().all(|&b| b) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let a = crate::hardy::constant_a(&lam, frac);
    Ok(DhHardyReport {
        report: HardyReport {
            params: ReportParams {
                alpha: dk.lambda(),
                sigma: s,
                delta: frac.delta(),
            },
            f_id: format!("dh[{}]", ids.join(";")),
            lhs_form: lhs,
            middle_term: mid,
            rhs_potential: rhs,
            ground_state_residual: g1,
            gaps: [g1, g2],
            verdict,
            diagnostics: Diagnostics {
                tolerances: Tolerances {
                    quadrature: opts.tol,
                    slack: T::lit(HARDY_SLACK),
                    double_integral: None,
                },
                truncation: opts.terms,
                quad_nodes: nodes,
                parseval_tail: tail,
                middle_term_a: mid_a,
                constant_a: a,
                constant_a_eig: crate::hardy::constant_a_eig(&lam, frac),
                constant_b: b_lam,
                residual_double_integral: None,
                pure_power_bound: v * pure,
                u_sigma_norm: v,
                link_pass: links,
                notes,
            },
        },
        d: dk.d(),
        gamma: dk.gamma(),
        modes,
    })
}
