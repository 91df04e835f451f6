//! A numerical laboratory for the theta/Mellin machinery behind the Riemann
//! zeta function, the Wiener–Riemann path measure, and 1/2-stable Lévy
//! fractional moments.
//!
//! Every identity of interest is evaluated numerically with an error budget;
//! the [`claims`] module turns those evaluations into reproducible verdict
//! reports.

pub mod claims;
pub mod continuation;
pub mod error;
pub mod levy;
pub mod numerics;
pub mod reference;
pub mod stochastic;
pub mod transforms;

pub use error::{Error, Result};
pub use numerics::{ComplexValue, QuadratureResult, SeedValue};
