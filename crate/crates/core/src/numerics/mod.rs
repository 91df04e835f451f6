//! Complex arithmetic conventions, adaptive quadrature, alternating-series
//! acceleration and the deterministic randomness contract.

mod quadrature;
mod rng;
mod series;
mod sum;

pub mod stats;

pub use quadrature::{integrate_adaptive, integrate_real, Quadrature, TailCertificate, Upper};
pub use rng::{chunk_seed, rng_for, SeedValue};
pub use series::accelerate_alternating;
pub use sum::{CompensatedSum, ComplexSum};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Complex scalar used throughout the crate.
pub type ComplexValue = num_complex::Complex64;

/// Default absolute tolerance for quadratures and series.
pub const DEFAULT_TOL: f64 = 1e-10;

/// A numeric value together with an estimate of its absolute error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: ComplexValue,
    pub err_bound: f64,
    pub evaluations: usize,
}

impl QuadratureResult {
    pub fn new(value: ComplexValue, err_bound: f64, evaluations: usize) -> Self {
        Self {
            value,
            err_bound,
            evaluations,
        }
    }

    pub fn exact(value: ComplexValue) -> Self {
        Self::new(value, 0.0, 0)
    }

    pub fn real(value: f64, err_bound: f64, evaluations: usize) -> Self {
        Self::new(ComplexValue::new(value, 0.0), err_bound, evaluations)
    }

    pub fn re(&self) -> f64 {
        self.value.re
    }

    /// Sum of two results; error bounds add.
    pub fn plus(self, other: Self) -> Self {
        Self::new(
            self.value + other.value,
            self.err_bound + other.err_bound,
            self.evaluations + other.evaluations,
        )
    }

    pub fn scale(self, k: ComplexValue) -> Self {
        Self::new(self.value * k, self.err_bound * k.norm(), self.evaluations)
    }

    /// First-order error propagation for a product.
    pub fn times(self, other: Self) -> Self {
        Self::new(
            self.value * other.value,
            self.err_bound * other.value.norm()
                + other.err_bound * self.value.norm()
                + self.err_bound * other.err_bound,
            self.evaluations + other.evaluations,
        )
    }
}

/// Rejects NaN or infinite components.
pub fn ensure_finite(z: ComplexValue, what: &str) -> Result<ComplexValue> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(format!("{what} = {z}")))
    }
}

/// The trivial zeta `Im(s)(2 Re(s) − 1)`.
pub fn trivial_zeta(s: ComplexValue) -> f64 {
    s.im * (2.0 * s.re - 1.0)
}

/// Standard Gauss function `e^{−πx²}`.
pub fn gauss(x: f64) -> f64 {
    (-std::f64::consts::PI * x * x).exp()
}
