use crate::error::{Error, Result};
use crate::quadrature::{DomainTag, QuadratureRule};
use crate::specfun::ln_gamma_value;
use crate::Real;

// Eigenvalues of a symmetric tridiagonal matrix (implicit QL).
// `e[i]` couples d[i] and d[i+1]; e[n−1] is ignored.
fn tridiagonal_eigenvalues<T: Real>(mut d: Vec<T>, mut e: Vec<T>) -> Result<Vec<T>> {
    let n = d.len();
    if n == 0 {
        return Ok(d);
    }
    e.resize(n, T::zero());
    e[n - 1] = T::zero();
    let eps = T::epsilon();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::Construction {
                    what: "radial_rule",
                    reason: "QL iteration did not converge".into(),
                });
            }
            let mut g = (d[l + 1] - d[l]) / (T::two() * e[l]);
            let mut r = g.hypot(T::one());
            g = d[m] - d[l] + e[l] / (g + if g >= T::zero() { r.abs() } else { -r.abs() });
            let mut s = T::one();
            let mut c = T::one();
            let mut p = T::zero();
            let mut i = m;
            let mut early = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = T::zero();
                    early = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + T::two() * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if early {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = T::zero();
        }
    }
    d.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(d)
}

// Orthonormal Laguerre recurrence at x for weight x^α e^{−x}.
// Returns (p_n/p_n', ln Σ_{k<n} p_k² − x) with overflow-safe scaling.
fn recurrence<T: Real>(alpha: T, n: usize, x: T) -> (T, T) {
    let mut lscale = -T::half() * ln_gamma_value(alpha + T::one());
    let mut pm1 = T::zero();
    let mut dm1 = T::zero();
    let mut p = T::one();
    let mut d = T::zero();
    let mut sumsq = T::zero();
    let big = T::lit(1e30);
    for k in 0..n {
        sumsq = sumsq + p * p;
        let kk = T::of(k);
        let a = T::two() * kk + T::one() + alpha - x;
        let b = (kk * (kk + alpha)).sqrt();
        let c = ((kk + T::one()) * (kk + alpha + T::one())).sqrt();
        let pn = (a * p - b * pm1) / c;
        let dn = (a * d - p - b * dm1) / c;
        pm1 = p;
        dm1 = d;
        p = pn;
        d = dn;
        if p.abs() > big || d.abs() > big {
            p = p / big;
            d = d / big;
            pm1 = pm1 / big;
            dm1 = dm1 / big;
            sumsq = sumsq / (big * big);
            lscale = lscale + big.ln();
        }
    }
    (p / d, sumsq.ln() + T::two() * lscale - x)
}

/// Gauss rule for ∫_0^∞ f(r) r^{2α+1} dr, built from the generalised
/// Gauss–Laguerre rule for x^α e^{−x} under x = r².
pub fn radial_rule<T: Real>(alpha: T, n_nodes: usize) -> Result<QuadratureRule<T>> {
    if !(alpha > -T::half()) {
        return Err(Error::domain("radial_rule", "alpha > -1/2", alpha.f64()));
    }
    if n_nodes < 2 {
        return Err(Error::Construction {
            what: "radial_rule",
            reason: format!("need at least 2 nodes, got {n_nodes}"),
        });
    }
    let n = n_nodes;
    let d: Vec<T> = (0..n).map(|k| T::of(2 * k + 1) + alpha).collect();
    let e: Vec<T> = (0..n)
        .map(|k| {
            let kk = T::of(k + 1);
            (kk * (kk + alpha)).sqrt()
        })
        .collect();
    let mut xs = tridiagonal_eigenvalues(d, e)?;
    let mut weights = Vec::with_capacity(n);
    for x in xs.iter_mut() {
        for _ in 0..4 {
            let (ratio, _) = recurrence(alpha, n, *x);
            let nx = *x - ratio;
            let done = (nx - *x).abs() <= T::lit(4.0) * T::epsilon() * nx.abs();
            *x = nx;
            if done {
                break;
            }
        }
        if !(*x > T::zero()) || !x.is_finite() {
            return Err(Error::Construction {
                what: "radial_rule",
                reason: "node polishing left the half-line".into(),
            });
        }
        let (_, lsum) = recurrence(alpha, n, *x);
        // ½ λ_i e^{x_i} with λ_i the Christoffel number
        weights.push(T::half() * (-lsum).exp());
    }
    for w in 1..n {
        if !(xs[w] > xs[w - 1]) {
            return Err(Error::Construction {
                what: "radial_rule",
                reason: "nodes not strictly increasing".into(),
            });
        }
    }
    Ok(QuadratureRule {
        nodes: xs.iter().map(|x| x.sqrt()).collect(),
        weights,
        domain: DomainTag::RadialMuAlpha,
        alpha: Some(alpha),
    })
}
