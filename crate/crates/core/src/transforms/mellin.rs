//! Mellin transform `M(c)(s) = ∫₀^∞ x^{s−1} c(x) dx`.
//!
//! Integrals are taken in `v = ln x`, where the phase `Im(s)·v` is linear:
//! `M(c)(s) = ∫ e^{sv} c(e^v) dv`.

use super::fourier::flatten;
use super::function::{Repr, Tail, TestFunction};
use super::jets::JET_ORDER;
use crate::numerics::{ComplexValue, Quadrature, QuadratureResult, Upper};
use crate::{Error, Result};

/// Open strip `(lo, hi)` of `Re s` where the transform converges.
pub fn mellin_strip(c: &TestFunction) -> (f64, f64) {
    match c.tail() {
        Tail::Compact(_) | Tail::Exponential { .. } => (0.0, f64::INFINITY),
        Tail::Power { exponent, .. } => (0.0, exponent),
    }
}

pub fn mellin(c: &TestFunction, s: ComplexValue, tol: f64) -> Result<QuadratureResult> {
    let (lo, hi) = mellin_strip(c);
    if !(s.re > lo && s.re < hi) {
        return Err(Error::OutOfStrip { re: s.re, lo, hi });
    }
    let parts = flatten(c);
    let share = tol / parts.len().max(1) as f64;
    let mut total = QuadratureResult::exact(ComplexValue::new(0.0, 0.0));
    for p in &parts {
        // ∫ x^{s−1} α b(ax) dx = α a^{−s} M(b)(s)
        let k = p.alpha * (-s * p.dilation.ln()).exp();
        let r = mellin_primitive(&p.base, s, share / k.norm())?;
        total = total.plus(r.scale(k));
    }
    Ok(total)
}

fn mellin_primitive(c: &TestFunction, s: ComplexValue, tol: f64) -> Result<QuadratureResult> {
    let sigma = s.re;
    let c0 = c.eval(0.0);
    // Left end: ∫_{−∞}^{−V} e^{sv}c(e^v) dv = c(0)e^{−sV}/s + O(δ e^{−σV}/σ)
    let mut v_left = 10.0;
    let left_bound = |v: f64| {
        let x0 = (-v).exp();
        let delta = (0..4)
            .map(|k| (c.eval(x0 * 0.5f64.powi(k)) - c0).abs())
            .fold(0.0, f64::max);
        2.0 * delta * (-sigma * v).exp() / sigma
    };
    while left_bound(v_left) > tol / 4.0 && v_left < 700.0 {
        v_left += 5.0;
    }
    let left_err = left_bound(v_left);
    let left = c0 * (-s * v_left).exp() / s;

    let (x_right, tail) = right_end(c, s, tol / 4.0)?;
    let mut bps: Vec<f64> = c
        .breakpoints()
        .into_iter()
        .filter(|b| *b < x_right)
        .map(f64::ln)
        .collect();
    bps.push(0.0);
    let q = Quadrature::new(tol / 2.0)
        .with_breakpoints(bps)
        .with_max_intervals(20_000);
    let body = q.integrate(
        |v| (s * v).exp() * c.eval(v.exp()),
        -v_left,
        Upper::Finite(x_right.ln()),
    )?;
    Ok(QuadratureResult::new(
        body.value + left + tail.value,
        body.err_bound + left_err + tail.err_bound,
        body.evaluations + tail.evaluations,
    ))
}

/// Cutoff `X` and the analytic or bounded contribution of `∫_X^∞`.
fn right_end(c: &TestFunction, s: ComplexValue, tol: f64) -> Result<(f64, QuadratureResult)> {
    let sigma = s.re;
    let zero = ComplexValue::new(0.0, 0.0);
    if let Repr::FourierImage(img) = c.repr() {
        if let Some(j) = img.of.jets() {
            let m = JET_ORDER;
            let k = 2.0 * j.deriv_l1[m] / (2.0 * std::f64::consts::PI).powi(m as i32);
            // ∫_Y^∞ y^{σ−1} |R_m| ≤ k Y^{σ−m}/(m−σ) ≤ tol/2
            let y =
                ((2.0 * k / (tol * (m as f64 - sigma))).powf(1.0 / (m as f64 - sigma))).max(2.0);
            let (value, err) = j.mellin_tail(s, y, m, tol / 2.0)?;
            let bound = k * y.powf(sigma - m as f64) / (m as f64 - sigma);
            return Ok((y, QuadratureResult::new(value, err + bound, 0)));
        }
    }
    match c.tail() {
        Tail::Compact(l) => Ok((l, QuadratureResult::exact(zero))),
        Tail::Exponential { coeff, rate } => {
            // ∫_X^∞ x^{σ−1}Ce^{−rx} ≤ C X^{σ−1}e^{−rX}/(r − (σ−1)/X) for X > (σ−1)/r
            let mut x = (2.0 * (sigma - 1.0) / rate).max(1.0);
            let bound = |x: f64| {
                coeff * x.powf(sigma - 1.0) * (-rate * x).exp()
                    / (rate - (sigma - 1.0).max(0.0) / x)
            };
            while bound(x) > tol {
                x *= 1.25;
            }
            Ok((x, QuadratureResult::new(zero, bound(x), 0)))
        }
        Tail::Power { coeff, exponent } => {
            let p = exponent;
            let x = (coeff / (tol * (p - sigma)))
                .powf(1.0 / (p - sigma))
                .max(1.0);
            if x > 1e8 {
                return Err(Error::ToleranceNotMet {
                    achieved: coeff * 1e8f64.powf(sigma - p) / (p - sigma),
                    requested: tol,
                });
            }
            Ok((
                x,
                QuadratureResult::new(zero, coeff * x.powf(sigma - p) / (p - sigma), 0),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::gamma;
    use crate::transforms::fourier_image;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn indicator_gives_reciprocal() {
        for s in [c(0.5, 0.0), c(1.3, 4.0), c(0.1, -2.0)] {
            let r = mellin(&TestFunction::indicator01(), s, 1e-10).unwrap();
            assert!((r.value - 1.0 / s).norm() < 1e-10, "{s}");
        }
    }

    #[test]
    fn exponential_gives_gamma() {
        let r = mellin(&TestFunction::exp_decay(), c(3.0, 0.0), 1e-10).unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-10);
        let s = c(0.7, 3.0);
        let r = mellin(&TestFunction::exp_decay(), s, 1e-10).unwrap();
        assert!((r.value - gamma(s).unwrap()).norm() < 1e-10);
    }

    #[test]
    fn gaussian_closed_form_is_half_pi_gamma() {
        let s = c(1.2, 0.7);
        let r = mellin(&TestFunction::gaussian(), s, 1e-12).unwrap();
        let expected = c(0.195_837_281_213_645_26, -0.236_749_725_094_877_84);
        assert!((r.value - expected).norm() < 1e-11, "{}", r.value);
        let half = 0.5 * (-s / 2.0 * PI.ln()).exp() * gamma(s / 2.0).unwrap();
        assert!((r.value - half).norm() < 1e-11);
    }

    #[test]
    fn out_of_strip() {
        let img = fourier_image(&TestFunction::triangle()).unwrap();
        assert!(matches!(
            mellin(&img, c(2.0, 0.0), 1e-8),
            Err(Error::OutOfStrip { .. })
        ));
        assert!(matches!(
            mellin(&TestFunction::gaussian(), c(0.0, 1.0), 1e-8),
            Err(Error::OutOfStrip { .. })
        ));
    }

    #[test]
    fn fejer_image_against_closed_form() {
        // M(sin²(πx)/(πx)²)(s) = 2 (2π)^{−s} Γ(s) cos(πs/2) M(triangle)(1−s)
        // with M(triangle)(u) = 1/(u(u+1)).
        let img = fourier_image(&TestFunction::triangle()).unwrap();
        for s in [c(0.5, 0.0), c(1.5, 2.0), c(0.3, -4.0)] {
            let r = mellin(&img, s, 1e-10).unwrap();
            let u = 1.0 - s;
            let expected =
                2.0 * (-s * (2.0 * PI).ln()).exp() * gamma(s).unwrap() * (PI * s / 2.0).cos()
                    / (u * (u + 1.0));
            assert!(
                (r.value - expected).norm() < 1e-9,
                "{s}: {} vs {expected}",
                r.value
            );
        }
    }
}
