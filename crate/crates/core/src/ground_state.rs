//! The ground-state representation on a finite measure space.
//!
//! Λf(x) = a Σ_y (f(x) − f(y)) K(x,y) η(y) + V(x) f(x) with K symmetric and
//! nonnegative. For a positive w, Λw = w̃ and g = f/w,
//! ⟨Λf,f⟩ − Σ (w̃/w)|f|² η = (a/2) ΣΣ |g(x)−g(y)|² K w(x) w(y) η(x) η(y).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::Real;

#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteSpace<T> {
    eta: Vec<T>,
    kernel: Vec<T>,
    potential: Vec<T>,
    a: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GroundStateSplit<T> {
    pub form: T,
    pub weighted: T,
    pub double_sum: T,
}

impl<T: Real> GroundStateSplit<T> {
    /// form − weighted − double_sum, zero up to rounding.
    pub fn defect(&self) -> T {
        self.form - self.weighted - self.double_sum
    }
}

impl<T: Real> DiscreteSpace<T> {
    /// `kernel` is row-major n×n.
    pub fn new(eta: Vec<T>, kernel: Vec<T>, potential: Vec<T>, a: T) -> Result<Self> {
        let n = eta.len();
        let bad = |reason: &str| {
            Err(Error::Construction {
                what: "DiscreteSpace",
                reason: reason.into(),
            })
        };
        if n == 0 || kernel.len() != n * n || potential.len() != n {
            return bad("shape mismatch");
        }
        if eta.iter().any(|&e| !(e > T::zero())) {
            return bad("η must be positive");
        }
        if !(a > T::zero()) {
            return bad("a must be positive");
        }
        for i in 0..n {
            for j in 0..n {
                let k = kernel[i * n + j];
                if !(k >= T::zero()) || k != kernel[j * n + i] {
                    return bad("kernel must be symmetric and nonnegative");
                }
            }
        }
        Ok(DiscreteSpace {
            eta,
            kernel,
            potential,
            a,
        })
    }

    pub fn len(&self) -> usize {
        self.eta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eta.is_empty()
    }

    fn k(&self, i: usize, j: usize) -> T {
        self.kernel[i * self.len() + j]
    }

    pub fn apply(&self, f: &[T]) -> Vec<T> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let s: T = (0..n)
                    .map(|j| (f[i] - f[j]) * self.k(i, j) * self.eta[j])
                    .sum();
                self.a * s + self.potential[i] * f[i]
            })
            .collect()
    }

    pub fn inner(&self, f: &[T], g: &[T]) -> T {
        f.iter()
            .zip(g)
            .zip(&self.eta)
            .map(|((&x, &y), &e)| x * y * e)
            .sum()
    }

    /// (a/2) ΣΣ |f(x)−f(y)|² K η η + Σ V f² η.
    pub fn bilinear(&self, f: &[T]) -> T {
        let n = self.len();
        let mut d = T::zero();
        for i in 0..n {
            for j in 0..n {
                let x = f[i] - f[j];
                d = d + x * x * self.k(i, j) * self.eta[i] * self.eta[j];
            }
        }
        let v: T = (0..n)
            .map(|i| self.potential[i] * f[i] * f[i] * self.eta[i])
            .sum();
        self.a * T::half() * d + v
    }

    pub fn ground_state(&self, w: &[T], f: &[T]) -> Result<GroundStateSplit<T>> {
        let n = self.len();
        if w.len() != n || f.len() != n {
            return Err(Error::Construction {
                what: "ground_state",
                reason: "vector length differs from the space".into(),
            });
        }
        if w.iter().any(|&x| !(x > T::zero())) {
            return Err(Error::Construction {
                what: "ground_state",
                reason: "w must be positive".into(),
            });
        }
        let lw = self.apply(w);
        let g: Vec<T> = f.iter().zip(w).map(|(&x, &y)| x / y).collect();
        let weighted: T = (0..n)
            .map(|i| lw[i] / w[i] * f[i] * f[i] * self.eta[i])
            .sum();
        let mut d = T::zero();
        for i in 0..n {
            for j in 0..n {
                let x = g[i] - g[j];
                d = d + x * x * self.k(i, j) * w[i] * w[j] * self.eta[i] * self.eta[j];
            }
        }
        Ok(GroundStateSplit {
            form: self.inner(&self.apply(f), f),
            weighted,
            double_sum: self.a * T::half() * d,
        })
    }
}
