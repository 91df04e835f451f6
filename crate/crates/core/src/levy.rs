//! The ½-stable Lévy law on `(0, ∞)` and its fractional moments.

use std::f64::consts::PI;

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::numerics::{integrate_real, QuadratureResult, SeedValue, TailCertificate, Upper};
use crate::reference::gamma;
use crate::stochastic::{
    chunked_samples, doubling_sequence, grows_without_settling, hill_tail_index, MomentEstimate,
};
use crate::{ComplexValue, Error, Result};

fn check(x: f64, y0: f64) -> Result<()> {
    if !(x > 0.0) || !(y0 > 0.0) {
        return Err(Error::Domain(format!(
            "Lévy law needs x > 0 and y0 > 0, got x = {x}, y0 = {y0}"
        )));
    }
    Ok(())
}

/// `y0·e^{−y0²/2x} / (√(2π) x^{3/2})`.
pub fn levy_density(x: f64, y0: f64) -> Result<f64> {
    check(x, y0)?;
    Ok(density(x, y0))
}

fn density(x: f64, y0: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    y0 * (-y0 * y0 / (2.0 * x)).exp() / ((2.0 * PI).sqrt() * x.powf(1.5))
}

/// `P(L ≤ x) = erfc(y0/√(2x))`.
pub fn levy_cdf(x: f64, y0: f64) -> Result<f64> {
    check(x, y0)?;
    Ok(libm::erfc(y0 / (2.0 * x).sqrt()))
}

/// `n` draws of `y0²/Z²`.
pub fn levy_sample(y0: f64, n: usize, seed: SeedValue) -> Result<Vec<f64>> {
    check(1.0, y0)?;
    Ok(chunked_samples(
        n,
        seed,
        cfg!(feature = "parallel"),
        |rng| draw(rng, y0),
    ))
}

fn draw(rng: &mut impl Rng, y0: f64) -> f64 {
    let z: f64 = rng.sample(StandardNormal);
    y0 * y0 / (z * z)
}

/// `E[L^u]`, finite exactly for `u < ½`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FractionalMoment {
    Finite {
        value: f64,
    },
    /// The integral diverges at infinity, where the integrand behaves like
    /// `x^{u−3/2}`.
    Divergent {
        u: f64,
    },
}

impl FractionalMoment {
    pub fn value(&self) -> Option<f64> {
        match self {
            Self::Finite { value } => Some(*value),
            Self::Divergent { .. } => None,
        }
    }

    pub fn is_divergent(&self) -> bool {
        matches!(self, Self::Divergent { .. })
    }
}

/// `y0^{2u}·2^{−u}·Γ(½ − u)/√π` for `u < ½`.
pub fn levy_fractional_moment(u: f64, y0: f64) -> Result<FractionalMoment> {
    if !(u > 0.0) || !(y0 > 0.0) {
        return Err(Error::Domain(format!(
            "fractional moment needs u > 0 and y0 > 0, got u = {u}, y0 = {y0}"
        )));
    }
    if u >= 0.5 {
        return Ok(FractionalMoment::Divergent { u });
    }
    let g = gamma(ComplexValue::new(0.5 - u, 0.0))?.re;
    Ok(FractionalMoment::Finite {
        value: y0.powf(2.0 * u) * 2f64.powf(-u) * g / PI.sqrt(),
    })
}

/// `∫₀^∞ x^u d_{y0}(x) dx` by quadrature, split at `y0²` with the tail bounded
/// by `y0/√(2π) · x^{u−3/2}`.
pub fn levy_moment_quadrature(u: f64, y0: f64, tol: f64) -> Result<QuadratureResult> {
    if !(u > 0.0 && u < 0.5) || !(y0 > 0.0) {
        return Err(Error::Domain(format!(
            "quadrature moment needs 0 < u < 1/2 and y0 > 0, got u = {u}, y0 = {y0}"
        )));
    }
    let f = |x: f64| x.powf(u) * density(x, y0);
    let split = (y0 * y0).max(1.0);
    let head = integrate_real(f, 0.0, Upper::Finite(split), tol / 2.0)?;
    let cert = TailCertificate::Power {
        coeff: y0 / (2.0 * PI).sqrt(),
        exponent: 1.5 - u,
    };
    let tail = integrate_real(f, split, Upper::Infinite(cert), tol / 2.0)?;
    Ok(head.plus(tail))
}

/// How the Monte Carlo moment decides divergence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DivergenceRule {
    /// The Hill tail index `α̂` of `L^u` (true value `1/(2u)`) is not above 1
    /// by three standard errors, so the mean cannot be finite.
    #[default]
    Hill,
    /// Prefix estimates over `n/8, n/4, n/2, n` increase monotonically by more
    /// than two standard errors.
    Doubling,
}

/// Sample mean of `L^u`. Both diagnostics are recorded; `rule` decides the
/// flag.
pub fn levy_moment_mc_with(
    u: f64,
    y0: f64,
    n: usize,
    seed: SeedValue,
    rule: DivergenceRule,
) -> Result<MomentEstimate> {
    if !(u > 0.0) || !(y0 > 0.0) {
        return Err(Error::Domain(format!(
            "fractional moment needs u > 0 and y0 > 0, got u = {u}, y0 = {y0}"
        )));
    }
    if n < 16 {
        return Err(Error::Domain(format!("need at least 16 samples, got {n}")));
    }
    let xs = chunked_samples(n, seed, cfg!(feature = "parallel"), |rng| {
        draw(rng, y0).powf(u)
    });
    let mut e = MomentEstimate::from_samples(&xs);
    e.diagnostic = doubling_sequence(&xs);
    let (alpha, se) = hill_tail_index(&xs);
    e.tail_index = Some((alpha, se));
    e.divergence_flag = match rule {
        DivergenceRule::Hill => alpha - 3.0 * se <= 1.0,
        DivergenceRule::Doubling => grows_without_settling(&e.diagnostic),
    };
    Ok(e)
}

/// [`levy_moment_mc_with`] under the default rule.
pub fn levy_moment_mc(u: f64, y0: f64, n: usize, seed: SeedValue) -> Result<MomentEstimate> {
    levy_moment_mc_with(u, y0, n, seed, DivergenceRule::default())
}
