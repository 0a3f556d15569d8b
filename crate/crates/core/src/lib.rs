//! Fractional Laguerre operators, Macdonald-type Hardy weights and the
//! Dunkl–Hermite mode reduction, with the special functions and quadrature
//! they need.

pub mod dunkl;
pub mod error;
pub mod ground_state;
pub mod hardy;
pub mod laguerre;
pub mod quadrature;
pub mod scalar;
pub mod semigroup;
pub mod specfun;

pub use error::{Error, Result};
pub use scalar::{Real, Scalar};

/// Exact rational scalar used by recurrence oracles.
pub type Exact = num_rational::BigRational;
pub type EvalResult64 = specfun::EvalResult<f64>;
pub type QuadratureRule64 = quadrature::QuadratureRule<f64>;
pub type LaguerreParams64 = laguerre::LaguerreParams<f64>;
pub type SpectralVector64 = laguerre::SpectralVector<f64>;
pub type RadialFunction64 = laguerre::RadialFunction<f64>;
pub type FracParams64 = semigroup::FracParams<f64>;
pub type HardyReport64 = hardy::HardyReport<f64>;
pub type HardyOptions64 = hardy::HardyOptions<f64>;
pub type DunklParams64 = dunkl::DunklParams<f64>;
pub type HHarmonicDecomposition64 = dunkl::HHarmonicDecomposition<f64>;
