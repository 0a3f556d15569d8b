//! Special functions: Gamma family, Bessel I/K/J, classical polynomials,
//! Kummer U and the L(a,b,c) integral.

mod bessel;
mod gamma;
mod kummer;
mod orthopoly;

pub use bessel::{
    bessel_i, bessel_i_reduced_scaled, bessel_i_scaled, bessel_j_reduced, bessel_k, bessel_k_ln,
    bessel_k_scaled,
};
pub use gamma::{gamma, gamma_abs_reflect, ln_gamma, ln_gamma_ratio, ln_gamma_value, recip_gamma};
pub use kummer::{kummer_u, l_integral};
pub use orthopoly::{hermite_function, laguerre_poly, laguerre_poly_all, ultraspherical_poly};

use serde::Serialize;

use crate::Real;

/// A value with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult<T> {
    pub value: T,
    pub abs_err: T,
}

impl<T: Real> EvalResult<T> {
    pub fn new(value: T, abs_err: T) -> Self {
        EvalResult {
            value,
            abs_err: abs_err.abs(),
        }
    }

    pub fn exact(value: T) -> Self {
        EvalResult {
            value,
            abs_err: T::zero(),
        }
    }

    /// Error estimate of `value * eps * k`, the usual rounding model.
    pub fn with_rel(value: T, k: f64) -> Self {
        EvalResult {
            value,
            abs_err: value.abs() * T::epsilon() * T::lit(k),
        }
    }

    pub fn rel_err(&self) -> T {
        if self.value == T::zero() {
            self.abs_err
        } else {
            self.abs_err / self.value.abs()
        }
    }
}
