use crate::error::Result;
use crate::quadrature::Integrator;
use crate::specfun::EvalResult;
use crate::Real;

/// A point of the Meda variable ξ = tanh t, carried together with η = 1 − ξ
/// so that hyperbolic quantities stay accurate at both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MedaPoint<T> {
    pub xi: T,
    pub eta: T,
}

impl<T: Real> MedaPoint<T> {
    pub fn from_t(t: T) -> Self {
        let xi = t.tanh();
        let eta = T::two() / ((T::two() * t).exp() + T::one());
        MedaPoint { xi, eta }
    }

    pub fn from_xi(xi: T) -> Self {
        MedaPoint {
            xi,
            eta: T::one() - xi,
        }
    }

    pub fn from_eta(eta: T) -> Self {
        MedaPoint {
            xi: T::one() - eta,
            eta,
        }
    }

    pub fn t(&self) -> T {
        if self.xi < T::half() {
            self.xi.atanh()
        } else {
            T::half() * ((T::one() + self.xi) / self.eta).ln()
        }
    }

    /// 1 − ξ².
    pub fn one_minus_xi2(&self) -> T {
        self.eta * (T::one() + self.xi)
    }

    pub fn sinh2t(&self) -> T {
        T::two() * self.xi / self.one_minus_xi2()
    }

    pub fn cosh2t(&self) -> T {
        (T::one() + self.xi * self.xi) / self.one_minus_xi2()
    }

    pub fn cosh2t_minus_one(&self) -> T {
        T::two() * self.xi * self.xi / self.one_minus_xi2()
    }

    pub fn coth2t(&self) -> T {
        (T::one() + self.xi * self.xi) / (T::two() * self.xi)
    }

    pub fn tanh2t(&self) -> T {
        T::two() * self.xi / (T::one() + self.xi * self.xi)
    }

    pub fn ln_cosh2t(&self) -> T {
        let x2 = self.xi * self.xi;
        if self.xi < T::half() {
            x2.ln_1p() - (-x2).ln_1p()
        } else {
            x2.ln_1p() - self.one_minus_xi2().ln()
        }
    }

    /// dt/dξ.
    pub fn dt_dxi(&self) -> T {
        T::one() / self.one_minus_xi2()
    }

    /// (1 − ξ²)^σ / (2ξ)^{σ+1}, the image of dt/(sinh 2t)^{σ+1}.
    pub fn weight(&self, sigma: T) -> T {
        (sigma * self.one_minus_xi2().ln() - (sigma + T::one()) * (T::two() * self.xi).ln()).exp()
    }
}

/// ξ = tanh t together with the Jacobian dt/dξ = 1/(1 − ξ²).
pub fn meda_map<T: Real>(t: T) -> (MedaPoint<T>, T) {
    let p = MedaPoint::from_t(t);
    (p, p.dt_dxi())
}

pub fn meda_inverse<T: Real>(p: &MedaPoint<T>) -> T {
    p.t()
}

/// ∫_0^∞ g(t) dt/(sinh 2t)^{σ+1} evaluated in the Meda variable, split at
/// ξ = 1/2; the right half is integrated in η = 1 − ξ.
#[derive(Debug, Clone)]
pub struct MedaIntegral<T> {
    pub sigma: T,
    pub abs_tol: T,
    pub rel_tol: T,
    /// Exponent p of the full integrand ~ ξ^p as ξ → 0.
    pub left_exponent: Option<T>,
    /// Exponent q of the full integrand ~ η^q as η → 0.
    pub right_exponent: Option<T>,
    /// Interior ξ breakpoints.
    pub breakpoints: Vec<T>,
    pub max_intervals: usize,
}

impl<T: Real> MedaIntegral<T> {
    pub fn new(sigma: T) -> Self {
        MedaIntegral {
            sigma,
            abs_tol: T::lit(1e-12),
            rel_tol: T::lit(1e-11),
            left_exponent: None,
            right_exponent: Some(sigma),
            breakpoints: Vec::new(),
            max_intervals: 4000,
        }
    }

    pub fn tol(mut self, abs: T, rel: T) -> Self {
        self.abs_tol = abs;
        self.rel_tol = rel;
        self
    }

    pub fn left_exponent(mut self, p: T) -> Self {
        self.left_exponent = Some(p);
        self
    }

    pub fn right_exponent(mut self, q: T) -> Self {
        self.right_exponent = Some(q);
        self
    }

    pub fn breakpoints(mut self, pts: Vec<T>) -> Self {
        self.breakpoints = pts;
        self
    }

    /// `g` receives the Meda point and returns the t-integrand without the
    /// dt/(sinh 2t)^{σ+1} factor.
    pub fn integrate<G: FnMut(&MedaPoint<T>) -> T>(&self, mut g: G) -> Result<EvalResult<T>> {
        let (r, ok) = self.integrate_best_effort(&mut g)?;
        if ok {
            Ok(r)
        } else {
            Err(crate::error::Error::Accuracy {
                context: "meda_integral",
                partial: r.value.f64(),
                estimate: r.abs_err.f64(),
                tolerance: self.abs_tol.max(self.rel_tol * r.value.abs()).f64(),
            })
        }
    }

    pub fn integrate_best_effort<G: FnMut(&MedaPoint<T>) -> T>(
        &self,
        g: &mut G,
    ) -> Result<(EvalResult<T>, bool)> {
        let half = T::half();
        let sigma = self.sigma;
        let left_bps: Vec<T> = self
            .breakpoints
            .iter()
            .copied()
            .filter(|&x| x < half)
            .collect();
        let right_bps: Vec<T> = self
            .breakpoints
            .iter()
            .copied()
            .filter(|&x| x > half)
            .map(|x| T::one() - x)
            .collect();
        let tol_a = self.abs_tol * half;
        let mut left = Integrator::new(tol_a)
            .rel_tol(self.rel_tol)
            .max_intervals(self.max_intervals)
            .breakpoints(&left_bps);
        if let Some(p) = self.left_exponent {
            left = left.left_exponent(p);
        }
        let mut right = Integrator::new(tol_a)
            .rel_tol(self.rel_tol)
            .max_intervals(self.max_intervals)
            .breakpoints(&right_bps);
        if let Some(q) = self.right_exponent {
            right = right.left_exponent(q);
        }
        let (a, oka) = left.integrate_best_effort(
            |xi| {
                let p = MedaPoint::from_xi(xi);
                g(&p) * p.weight(sigma)
            },
            T::zero(),
            half,
        )?;
        let (b, okb) = right.integrate_best_effort(
            |eta| {
                let p = MedaPoint::from_eta(eta);
                g(&p) * p.weight(sigma)
            },
            T::zero(),
            half,
        )?;
        Ok((
            EvalResult::new(a.value + b.value, a.abs_err + b.abs_err),
            oka && okb,
        ))
    }
}
