use crate::error::{Error, Result};
use crate::quadrature::Integrator;
use crate::specfun::gamma::ln_gamma_value;
use crate::specfun::EvalResult;
use crate::Real;

// ∫_0^∞ exp(c0 − rate·t) t^p (1+t)^q dt, rescaled around the integrand peak.
fn peaked<T: Real>(c0: T, rate: T, p: T, q: T, tol: T) -> Result<EvalResult<T>> {
    let h = |t: T| -rate * t + p * t.ln() + q * t.ln_1p();
    let (tstar, width) = if p > T::zero() {
        let b = rate - p - q;
        let t = (-b + (b * b + T::lit(4.0) * rate * p).sqrt()) / (T::two() * rate);
        let curv = p / (t * t) + q / ((T::one() + t) * (T::one() + t));
        let w = if curv > T::zero() {
            T::one() / curv.sqrt()
        } else {
            t.max(T::one() / rate)
        };
        (t, w)
    } else {
        (T::zero(), T::one() / rate)
    };
    let tref = if tstar > T::zero() {
        tstar
    } else {
        T::one() / rate
    };
    let href = h(tref);
    let mut bps = Vec::new();
    if tstar > T::zero() {
        for k in [-4.0, -2.0, 0.0, 2.0, 4.0, 8.0] {
            let x = tstar + T::lit(k) * width;
            if x > T::zero() {
                bps.push(x);
            }
        }
    }
    let mut integ = Integrator::new(tol * T::lit(1e-3))
        .rel_tol(tol)
        .tail_scale(width.max(T::one() / rate))
        .breakpoints(&bps);
    if p != T::zero() {
        integ = integ.left_exponent(p);
    }
    let r = integ.integrate(|t| (h(t) - href).exp(), T::zero(), T::infinity())?;
    let s = (c0 + href).exp();
    Ok(EvalResult::new(
        r.value * s,
        r.abs_err * s + r.value.abs() * s * T::epsilon() * (c0.abs() + href.abs() + T::one()),
    ))
}

/// Tricomi's U(a, b, x) from its integral representation, a > 0, x > 0.
pub fn kummer_u<T: Real>(a: T, b: T, x: T) -> Result<EvalResult<T>> {
    if !(a > T::zero()) || !a.is_finite() {
        return Err(Error::domain("kummer_u", "a > 0", a.f64()));
    }
    if !(x > T::zero()) || !x.is_finite() {
        return Err(Error::domain("kummer_u", "x > 0", x.f64()));
    }
    if !b.is_finite() {
        return Err(Error::domain("kummer_u", "finite b", b.f64()));
    }
    peaked(
        -ln_gamma_value(a),
        x,
        a - T::one(),
        b - a - T::one(),
        T::lit(1e-12),
    )
}

/// L(a,b,c) = ∫_0^∞ e^{−a(2x+1)} x^{b−1} (1+x)^{−c} dx, a, b > 0.
pub fn l_integral<T: Real>(a: T, b: T, c: T) -> Result<EvalResult<T>> {
    if !(a > T::zero()) || !a.is_finite() {
        return Err(Error::domain("l_integral", "a > 0", a.f64()));
    }
    if !(b > T::zero()) || !b.is_finite() {
        return Err(Error::domain("l_integral", "b > 0", b.f64()));
    }
    if !c.is_finite() {
        return Err(Error::domain("l_integral", "finite c", c.f64()));
    }
    peaked(-a, T::two() * a, b - T::one(), -c, T::lit(1e-12))
}
