use crate::error::{Error, Result};
use crate::{Real, Scalar};

/// Generalised Laguerre polynomial L_n^α(x) by the three-term recurrence.
pub fn laguerre_poly<T: Scalar>(n: usize, alpha: T, x: T) -> Result<T> {
    if !(alpha.clone() + T::one() > T::zero()) {
        return Err(Error::domain("laguerre_poly", "alpha > -1", f64::NAN));
    }
    if x < T::zero() {
        return Err(Error::domain("laguerre_poly", "x >= 0", f64::NAN));
    }
    Ok(laguerre_poly_all(n, alpha, x).pop().unwrap_or_else(T::one))
}

/// L_0^α(x), …, L_n^α(x).
pub fn laguerre_poly_all<T: Scalar>(n: usize, alpha: T, x: T) -> Vec<T> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(T::one());
    if n == 0 {
        return out;
    }
    out.push(T::one() + alpha.clone() - x.clone());
    for k in 1..n {
        let kk = T::from_count(k);
        let next = ((T::from_count(2 * k + 1) + alpha.clone() - x.clone()) * out[k].clone()
            - (kk.clone() + alpha.clone()) * out[k - 1].clone())
            / (kk + T::one());
        out.push(next);
    }
    out
}

/// Ultraspherical polynomial of type λ normalised by P_m^λ(1) = 1.
pub fn ultraspherical_poly<T: Scalar>(m: usize, lambda: T, u: T) -> Result<T> {
    if u > T::one() || u < T::zero() - T::one() {
        return Err(Error::domain("ultraspherical_poly", "|u| <= 1", f64::NAN));
    }
    let two = T::from_count(2);
    if !(two.clone() * lambda.clone() + T::one() > T::zero()) {
        return Err(Error::domain(
            "ultraspherical_poly",
            "lambda > -1/2",
            f64::NAN,
        ));
    }
    if m == 0 {
        return Ok(T::one());
    }
    let mut prev = T::one();
    let mut cur = u.clone();
    // (m+2λ) R_{m+1} = 2(m+λ) u R_m − m R_{m−1}
    for k in 1..m {
        let kk = T::from_count(k);
        let next = (two.clone() * (kk.clone() + lambda.clone()) * u.clone() * cur.clone()
            - kk.clone() * prev)
            / (kk + two.clone() * lambda.clone());
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Orthonormal Hermite function h_k(x) = (2^k k! √π)^{−1/2} H_k(x) e^{−x²/2}.
pub fn hermite_function<T: Real>(k: usize, x: T) -> T {
    let h0 = T::PI().powf(T::lit(-0.25)) * (-x * x * T::half()).exp();
    if k == 0 {
        return h0;
    }
    let mut prev = h0;
    let mut cur = T::two().sqrt() * x * h0;
    for j in 1..k {
        let jj = T::of(j);
        let next =
            (T::two() / (jj + T::one())).sqrt() * x * cur - (jj / (jj + T::one())).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}
