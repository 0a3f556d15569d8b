use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre;
use crate::specfun::EvalResult;
use crate::Real;

const ORDER: usize = 16;

#[derive(Debug, Clone, Copy)]
enum Map<T> {
    Linear { a: T, h: T },
    // x = a + h u^γ, γ = 1/(p+1)
    LeftPower { a: T, h: T, gamma: T },
    // x = b − h u^γ
    RightPower { b: T, h: T, gamma: T },
    // x = x0 + c u/(1−u)
    Tail { x0: T, c: T },
}

impl<T: Real> Map<T> {
    fn eval(&self, u: T) -> (T, T) {
        match *self {
            Map::Linear { a, h } => (a + h * u, h),
            Map::LeftPower { a, h, gamma } => {
                let p = u.powf(gamma);
                (a + h * p, h * gamma * p / u)
            }
            Map::RightPower { b, h, gamma } => {
                let p = u.powf(gamma);
                (b - h * p, h * gamma * p / u)
            }
            Map::Tail { x0, c } => {
                let d = T::one() - u;
                (x0 + c * u / d, c / (d * d))
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Interval<T> {
    piece: usize,
    lo: T,
    hi: T,
    value: T,
    err: T,
    resabs: T,
    // single-rule values on each half, reused when this interval is split
    left: T,
    right: T,
}

struct Key {
    err: f64,
    idx: usize,
}

impl PartialEq for Key {
    fn eq(&self, o: &Self) -> bool {
        self.err.total_cmp(&o.err) == Ordering::Equal && self.idx == o.idx
    }
}
impl Eq for Key {}
impl PartialOrd for Key {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Key {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.total_cmp(&o.err).then(o.idx.cmp(&self.idx))
    }
}

/// Globally adaptive Gauss–Legendre integrator.
///
/// Each interval is compared against the sum over its two halves. Endpoint
/// behaviour (x − a)^p is absorbed by x = a + h u^{1/(p+1)}; an infinite
/// upper limit is split at `tail_scale` and mapped by x = x0 + c u/(1 − u).
#[derive(Debug, Clone)]
pub struct Integrator<T> {
    pub abs_tol: T,
    pub rel_tol: T,
    pub max_intervals: usize,
    left_exponent: Option<T>,
    right_exponent: Option<T>,
    tail_scale: T,
    breakpoints: Vec<T>,
}

impl<T: Real> Default for Integrator<T> {
    fn default() -> Self {
        Self::new(T::lit(1e-10))
    }
}

impl<T: Real> Integrator<T> {
    /// Absolute and relative tolerance both `tol`.
    pub fn new(tol: T) -> Self {
        Integrator {
            abs_tol: tol,
            rel_tol: tol,
            max_intervals: 4000,
            left_exponent: None,
            right_exponent: None,
            tail_scale: T::one(),
            breakpoints: Vec::new(),
        }
    }

    pub fn abs_tol(mut self, tol: T) -> Self {
        self.abs_tol = tol;
        self
    }

    pub fn rel_tol(mut self, tol: T) -> Self {
        self.rel_tol = tol;
        self
    }

    pub fn max_intervals(mut self, n: usize) -> Self {
        self.max_intervals = n;
        self
    }

    /// Integrand behaves like (x − a)^p at the lower limit.
    pub fn left_exponent(mut self, p: T) -> Self {
        self.left_exponent = Some(p);
        self
    }

    /// Integrand behaves like (b − x)^p at a finite upper limit.
    pub fn right_exponent(mut self, p: T) -> Self {
        self.right_exponent = Some(p);
        self
    }

    pub fn tail_scale(mut self, c: T) -> Self {
        self.tail_scale = c;
        self
    }

    pub fn breakpoints(mut self, pts: &[T]) -> Self {
        self.breakpoints = pts.to_vec();
        self
    }

    fn pieces(&self, a: T, b: T) -> Vec<Map<T>> {
        let mut pts = vec![a];
        let mut bps: Vec<T> = self
            .breakpoints
            .iter()
            .copied()
            .filter(|&x| x > a && x < b && x.is_finite())
            .collect();
        bps.sort_by(|x, y| x.partial_cmp(y).unwrap_or(Ordering::Equal));
        bps.dedup();
        pts.extend(bps);
        let infinite = b.is_infinite();
        if infinite {
            let last = *pts.last().unwrap();
            if pts.len() == 1 || a + self.tail_scale > last {
                pts.push(a + self.tail_scale.max(last - a));
            }
        } else {
            pts.push(b);
        }
        let nseg = pts.len() - 1;
        let mut maps = Vec::new();
        for i in 0..nseg {
            let lo = pts[i];
            let hi = pts[i + 1];
            let h = hi - lo;
            let map = if i == 0 && self.left_exponent.is_some_and(|p| p != T::zero()) {
                let p = self.left_exponent.unwrap();
                Map::LeftPower {
                    a: lo,
                    h,
                    gamma: T::one() / (p + T::one()),
                }
            } else if i == nseg - 1
                && !infinite
                && self.right_exponent.is_some_and(|p| p != T::zero())
            {
                let p = self.right_exponent.unwrap();
                Map::RightPower {
                    b: hi,
                    h,
                    gamma: T::one() / (p + T::one()),
                }
            } else {
                Map::Linear { a: lo, h }
            };
            maps.push(map);
        }
        if infinite {
            maps.push(Map::Tail {
                x0: *pts.last().unwrap(),
                c: self.tail_scale,
            });
        }
        maps
    }

    /// Integrate f over [a, b]; b may be +∞.
    pub fn integrate<F: FnMut(T) -> T>(&self, f: F, a: T, b: T) -> Result<EvalResult<T>> {
        let (res, ok) = self.integrate_best_effort(f, a, b)?;
        if ok {
            Ok(res)
        } else {
            Err(Error::Accuracy {
                context: "adaptive_integrate",
                partial: res.value.f64(),
                estimate: res.abs_err.f64(),
                tolerance: self.abs_tol.max(self.rel_tol * res.value.abs()).f64(),
            })
        }
    }

    /// Like `integrate` but returns the partial result and a convergence flag.
    pub fn integrate_best_effort<F: FnMut(T) -> T>(
        &self,
        mut f: F,
        a: T,
        b: T,
    ) -> Result<(EvalResult<T>, bool)> {
        if a.is_nan() || b.is_nan() || a.is_infinite() {
            return Err(Error::domain(
                "adaptive_integrate",
                "finite lower limit",
                a.f64(),
            ));
        }
        if a == b {
            return Ok((EvalResult::exact(T::zero()), true));
        }
        if b < a {
            let (r, ok) = self.integrate_best_effort(f, b, a)?;
            return Ok((EvalResult::new(-r.value, r.abs_err), ok));
        }
        let gl = gauss_legendre::<T>(ORDER);
        let maps = self.pieces(a, b);
        let mut bad: Option<f64> = None;
        let mut ivs: Vec<Interval<T>> = Vec::new();
        let mut heap = BinaryHeap::new();
        let split = |piece: usize, lo: T, hi: T, coarse: T, f: &mut F, bad: &mut Option<f64>| {
            let mid = (lo + hi) * T::half();
            let (l, la) = rule(&maps, &gl, piece, lo, mid, f, bad);
            let (r, ra) = rule(&maps, &gl, piece, mid, hi, f, bad);
            let value = l + r;
            Interval {
                piece,
                lo,
                hi,
                value,
                err: (value - coarse).abs(),
                resabs: la + ra,
                left: l,
                right: r,
            }
        };
        for piece in 0..maps.len() {
            let (c, _) = rule(&maps, &gl, piece, T::zero(), T::one(), &mut f, &mut bad);
            let iv = split(piece, T::zero(), T::one(), c, &mut f, &mut bad);
            heap.push(Key {
                err: iv.err.f64(),
                idx: ivs.len(),
            });
            ivs.push(iv);
        }
        if let Some(x) = bad {
            return Err(Error::domain("adaptive_integrate", "finite integrand", x));
        }
        let eps = T::epsilon();
        let mut iters = 0;
        loop {
            let total: T = ivs.iter().map(|iv| iv.value).sum();
            let err: T = ivs.iter().map(|iv| iv.err).sum();
            let resabs: T = ivs.iter().map(|iv| iv.resabs).sum();
            let target = self
                .abs_tol
                .max(self.rel_tol * total.abs())
                .max(T::lit(50.0) * eps * resabs);
            if err <= target {
                return Ok((EvalResult::new(total, err), true));
            }
            let worst = loop {
                match heap.pop() {
                    None => break None,
                    Some(k) => {
                        let iv = ivs[k.idx];
                        if iv.hi - iv.lo <= T::lit(64.0) * eps * iv.hi.abs().max(T::lit(1e-300)) {
                            continue;
                        }
                        break Some(k.idx);
                    }
                }
            };
            let idx = match worst {
                Some(i) if iters < self.max_intervals => i,
                _ => {
                    return Ok((EvalResult::new(total, err), false));
                }
            };
            iters += 1;
            let iv = ivs[idx];
            let mid = (iv.lo + iv.hi) * T::half();
            let l = split(iv.piece, iv.lo, mid, iv.left, &mut f, &mut bad);
            let r = split(iv.piece, mid, iv.hi, iv.right, &mut f, &mut bad);
            if let Some(x) = bad {
                return Err(Error::domain("adaptive_integrate", "finite integrand", x));
            }
            ivs[idx] = l;
            heap.push(Key {
                err: l.err.f64(),
                idx,
            });
            heap.push(Key {
                err: r.err.f64(),
                idx: ivs.len(),
            });
            ivs.push(r);
        }
    }
}

fn rule<T: Real, F: FnMut(T) -> T>(
    maps: &[Map<T>],
    gl: &[(T, T)],
    piece: usize,
    lo: T,
    hi: T,
    f: &mut F,
    bad: &mut Option<f64>,
) -> (T, T) {
    let c = (lo + hi) * T::half();
    let h = (hi - lo) * T::half();
    let mut s = T::zero();
    let mut sa = T::zero();
    for &(x, w) in gl {
        let u = c + h * x;
        let (xx, jac) = maps[piece].eval(u);
        let v = f(xx) * jac;
        if !v.is_finite() {
            bad.get_or_insert(xx.f64());
            continue;
        }
        s = s + w * v;
        sa = sa + w * v.abs();
    }
    (s * h, sa * h)
}

/// ∫_a^b f with absolute/relative tolerance `tol`; b may be +∞.
pub fn adaptive_integrate<T: Real, F: FnMut(T) -> T>(
    f: F,
    a: T,
    b: T,
    tol: T,
) -> Result<EvalResult<T>> {
    Integrator::new(tol).integrate(f, a, b)
}
