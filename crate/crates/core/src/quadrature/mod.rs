//! Quadrature rules and integrators.

mod adaptive;
mod meda;
mod radial;

pub use adaptive::{adaptive_integrate, Integrator};
pub use meda::{meda_inverse, meda_map, MedaIntegral, MedaPoint};
pub use radial::radial_rule;

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainTag {
    /// Weights already include r^{2α+1}.
    RadialMuAlpha,
    AngularTheta,
    MedaXi,
    GenericInterval,
}

/// A fixed rule: Σ w_i f(x_i).
#[derive(Debug, Clone)]
pub struct QuadratureRule<T> {
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
    pub domain: DomainTag,
    /// Order of the radial measure for `RadialMuAlpha` rules.
    pub alpha: Option<T>,
}

impl<T: Real> QuadratureRule<T> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<F: FnMut(T) -> T>(&self, mut f: F) -> T {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Weights for ∫ · dμ_α on the same nodes.
    pub fn mu_weights(&self, alpha: T) -> Result<Vec<T>> {
        match self.domain {
            DomainTag::RadialMuAlpha => {
                if self.alpha != Some(alpha) {
                    return Err(Error::Construction {
                        what: "mu_weights",
                        reason: "radial rule built for a different alpha".into(),
                    });
                }
                Ok(self.weights.clone())
            }
            DomainTag::GenericInterval => Ok(self
                .nodes
                .iter()
                .zip(&self.weights)
                .map(|(&r, &w)| w * r.powf(T::two() * alpha + T::one()))
                .collect()),
            _ => Err(Error::Construction {
                what: "mu_weights",
                reason: "rule is not on a radial domain".into(),
            }),
        }
    }

    /// Composite Gauss–Legendre on [a, b] with equal panels.
    pub fn composite(a: T, b: T, panels: usize, order: usize) -> Self {
        let base = gauss_legendre::<T>(order);
        let panels = panels.max(1);
        let h = (b - a) / T::of(panels);
        let mut nodes = Vec::with_capacity(panels * order);
        let mut weights = Vec::with_capacity(panels * order);
        for p in 0..panels {
            let lo = a + h * T::of(p);
            let c = lo + h * T::half();
            for &(x, w) in &base {
                nodes.push(c + h * T::half() * x);
                weights.push(h * T::half() * w);
            }
        }
        QuadratureRule {
            nodes,
            weights,
            domain: DomainTag::GenericInterval,
            alpha: None,
        }
    }
}

fn gl_f64(n: usize) -> Vec<(f64, f64)> {
    let mut out = vec![(0.0, 0.0); n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p1 = 1.0;
            let mut p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j as f64 + 1.0) * z * p2 - j as f64 * p3) / (j as f64 + 1.0);
            }
            pp = nf * (z * p1 - p2) / (z * z - 1.0);
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - z * z) * pp * pp);
        out[i] = (-z, w);
        out[n - 1 - i] = (z, w);
    }
    out
}

static GL16: OnceLock<Vec<(f64, f64)>> = OnceLock::new();

/// Gauss–Legendre nodes and weights on [−1, 1], ascending.
pub fn gauss_legendre<T: Real>(n: usize) -> Vec<(T, T)> {
    let raw = if n == 16 {
        GL16.get_or_init(|| gl_f64(16)).clone()
    } else {
        gl_f64(n)
    };
    raw.into_iter()
        .map(|(x, w)| (T::lit(x), T::lit(w)))
        .collect()
}
