//! Poisson summation residuals and fixed points of the cosine transform.

use super::fourier::fourier_image;
use super::function::TestFunction;
use super::theta::theta_transform;
use crate::numerics::QuadratureResult;
use crate::{Error, Result};

/// Both sides of `(1/x)θ(c)(1/x) + 1/(2x) = 1/2 + θ(c)(x)`.
pub fn psf_sides(
    c: &TestFunction,
    x: f64,
    tol: f64,
) -> Result<(QuadratureResult, QuadratureResult)> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!(
            "Poisson summation needs x > 0, got {x}"
        )));
    }
    let inv = theta_transform(c, 1.0 / x, tol * x / 2.0)?;
    let direct = theta_transform(c, x, tol / 2.0)?;
    let lhs = QuadratureResult::real(
        inv.re() / x + 1.0 / (2.0 * x),
        inv.err_bound / x,
        inv.evaluations,
    );
    let rhs = QuadratureResult::real(0.5 + direct.re(), direct.err_bound, direct.evaluations);
    Ok((lhs, rhs))
}

/// `|lhs − rhs|` of the Poisson summation identity.
pub fn psf_residual(c: &TestFunction, x: f64, tol: f64) -> Result<f64> {
    let (lhs, rhs) = psf_sides(c, x, tol)?;
    Ok((lhs.re() - rhs.re()).abs())
}

/// `c = f + f̂`, a fixed point of the cosine transform; with `normalize`,
/// rescaled so that `c(0) = 1`.
pub fn make_poisson_element(f: &TestFunction, normalize: bool) -> Result<TestFunction> {
    let c = TestFunction::sum(f, &fourier_image(f)?);
    if !normalize {
        return Ok(c);
    }
    let at0 = c.eval(0.0);
    if !at0.is_finite() || at0.abs() < 1e-14 {
        return Err(Error::ZeroAtOrigin);
    }
    Ok(TestFunction::scaled(1.0 / at0, &c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::fourier_cosine;

    #[test]
    fn gaussian_residuals() {
        let g = TestFunction::gaussian();
        assert_eq!(psf_residual(&g, 1.0, 1e-12).unwrap(), 0.0);
        for x in [0.3, 0.5, 2.0, 3.0] {
            assert!(psf_residual(&g, x, 1e-12).unwrap() < 1e-10, "x = {x}");
        }
    }

    #[test]
    fn half_gaussian_element_is_gaussian() {
        let g = TestFunction::gaussian();
        let c = make_poisson_element(&TestFunction::scaled(0.5, &g), false).unwrap();
        for x in [0.0, 0.3, 1.1] {
            assert_eq!(c.eval(x), g.eval(x));
        }
    }

    #[test]
    fn peak_gauss_element_is_a_fixed_point() {
        let c = make_poisson_element(&TestFunction::peak_times_gaussian(), true).unwrap();
        assert!((c.eval(0.0) - 1.0).abs() < 1e-14);
        for x in [0.3, 1.0, 2.0] {
            let r = fourier_cosine(&c, x, 1e-11).unwrap();
            assert!((r.re() - c.eval(x)).abs() < 1e-8, "x = {x}");
        }
        assert!(psf_residual(&c, 2.0, 1e-10).unwrap() < 1e-8);
    }

    #[test]
    fn zero_at_origin_is_refused() {
        let g = TestFunction::gaussian();
        let f = TestFunction::sum(&g, &TestFunction::scaled(-1.0, &g));
        assert_eq!(
            make_poisson_element(&f, true).unwrap_err(),
            Error::ZeroAtOrigin
        );
    }
}
