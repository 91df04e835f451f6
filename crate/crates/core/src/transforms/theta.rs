//! Lattice sums `θ(c)(x) = Σ_{n≥1} c(nx)`.

use super::fourier::flatten;
use super::function::{Repr, Tail, TestFunction};
use crate::numerics::{CompensatedSum, QuadratureResult};
use crate::{Error, Result};

/// Hard cap on directly summed terms.
const MAX_TERMS: usize = 2_000_000;

/// `θ(c)(x)` with the number of terms chosen from the decay certificate so
/// that the neglected tail is below `tol`.
pub fn theta_transform(c: &TestFunction, x: f64, tol: f64) -> Result<QuadratureResult> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!(
            "theta transform needs x > 0, got {x}"
        )));
    }
    let parts = flatten(c);
    let share = tol / parts.len().max(1) as f64;
    let mut value = CompensatedSum::new();
    let mut err = 0.0;
    let mut evals = 0;
    for p in &parts {
        let r = theta_primitive(&p.base, p.dilation * x, share / p.alpha.abs())?;
        value.add(p.alpha * r.re());
        err += p.alpha.abs() * r.err_bound;
        evals += r.evaluations;
    }
    Ok(QuadratureResult::real(value.value(), err, evals))
}

fn theta_primitive(c: &TestFunction, x: f64, tol: f64) -> Result<QuadratureResult> {
    if let Repr::FourierImage(img) = c.repr() {
        if let Some(j) = img.of.jets() {
            let (m, n, bound) = j.lattice_plan(x, tol, MAX_TERMS);
            let mut sum = CompensatedSum::new();
            let mut err = bound;
            for k in 1..=n {
                let y = k as f64 * x;
                let (v, e) = img.eval_with_err(y);
                sum.add(v - j.expansion(y, m));
                err += e;
            }
            sum.add(j.lattice(x, m));
            return finish(sum.value(), err, n, tol);
        }
    }
    let (n, tail) = match c.tail() {
        Tail::Compact(l) => ((l / x).floor() as usize, 0.0),
        Tail::Exponential { coeff, rate } => {
            // C e^{−r(N+1)x} / (1 − e^{−rx}) ≤ tol
            let denom = -(-rate * x).exp_m1();
            let need = ((coeff / (tol * denom)).ln() / (rate * x)).ceil() - 1.0;
            let n = need.max(0.0) as usize;
            (n, coeff * (-rate * (n as f64 + 1.0) * x).exp() / denom)
        }
        Tail::Power { coeff, exponent } => {
            // Σ_{n>N} C(nx)^{−p} ≤ C x^{−p} N^{1−p}/(p−1) once Nx ≥ 1
            let p = exponent;
            let base = coeff * x.powf(-p) / (p - 1.0);
            let n =
                ((base / tol).powf(1.0 / (p - 1.0)).ceil() as usize).max((1.0 / x).ceil() as usize);
            let n = n.min(MAX_TERMS);
            (n, base * (n as f64).powf(1.0 - p))
        }
    };
    if n > MAX_TERMS {
        return Err(Error::ToleranceNotMet {
            achieved: f64::INFINITY,
            requested: tol,
        });
    }
    let mut sum = CompensatedSum::new();
    for k in 1..=n {
        sum.add(c.eval(k as f64 * x));
    }
    let eval_err = if let Repr::FourierImage(img) = c.repr() {
        (1..=n).map(|k| img.eval_with_err(k as f64 * x).1).sum()
    } else {
        n as f64 * f64::EPSILON * c.sup_bound()
    };
    finish(sum.value(), tail + eval_err, n, tol)
}

fn finish(value: f64, err: f64, n: usize, tol: f64) -> Result<QuadratureResult> {
    if err > tol {
        return Err(Error::ToleranceNotMet {
            achieved: err,
            requested: tol,
        });
    }
    Ok(QuadratureResult::real(value, err, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::fourier_image;

    #[test]
    fn gaussian_values() {
        let g = TestFunction::gaussian();
        let r = theta_transform(&g, 1.0, 1e-14).unwrap();
        assert!((r.re() - 0.043_217_405_606_654_01).abs() < 1e-15);
        let r = theta_transform(&g, 2.0, 1e-14).unwrap();
        assert!((r.re() - 3.487_342_356_208_995_6e-6).abs() < 1e-18);
    }

    #[test]
    fn triangle_is_a_finite_sum() {
        let t = TestFunction::triangle();
        let r = theta_transform(&t, 0.25, 1e-12).unwrap();
        assert!((r.re() - 1.5).abs() < 1e-15);
        assert_eq!(r.evaluations, 4);
    }

    #[test]
    fn fejer_lattice_sum() {
        // Σ_{n≥1} sin²(πnx)/(πnx)² = (1/x − 1)/2 for 0 < x ≤ 1.
        let img = fourier_image(&TestFunction::triangle()).unwrap();
        for x in [0.3, 0.5, 0.9] {
            let r = theta_transform(&img, x, 1e-11).unwrap();
            assert!(
                (r.re() - (1.0 / x - 1.0) / 2.0).abs() < 1e-11,
                "x = {x}: {}",
                r.re()
            );
        }
    }

    #[test]
    fn lorentzian_lattice_sum() {
        let img = fourier_image(&TestFunction::exp_decay()).unwrap();
        for x in [0.2, 1.0, 3.0] {
            let z: f64 = 1.0 / (2.0 * x);
            let exact = z / z.tanh() - 1.0;
            let r = theta_transform(&img, x, 1e-11).unwrap();
            assert!(
                (r.re() - exact).abs() < 1e-10,
                "x = {x}: {} vs {exact}",
                r.re()
            );
        }
    }

    #[test]
    fn rejects_non_positive_spacing() {
        assert!(theta_transform(&TestFunction::gaussian(), 0.0, 1e-10).is_err());
    }
}
