//! Fourier-cosine transforms under the `2cos(2πxy)` kernel, exact image
//! simplifications, and the Fredholm solver under the unitary kernel.

use std::f64::consts::PI;

use super::function::{tail_upper, Repr, Tail, TestFunction};
use super::jets::JET_ORDER;
use crate::numerics::{accelerate_alternating, ComplexValue, Quadrature, QuadratureResult, Upper};
use crate::{Error, Result};

/// Absolute accuracy of lazily evaluated image values.
const IMAGE_TOL: f64 = 1e-13;

/// Largest number of half-periods resolved by direct quadrature before the
/// alternating tail is accelerated instead.
const MAX_DIRECT_HALF_PERIODS: f64 = 2000.0;

/// One summand `alpha · base(dilation · x)` of a flattened function.
#[derive(Clone, Debug)]
pub(crate) struct Part {
    pub alpha: f64,
    pub dilation: f64,
    pub base: TestFunction,
}

/// Pushes scalings and dilations through sums down to primitive nodes.
pub(crate) fn flatten(f: &TestFunction) -> Vec<Part> {
    fn go(f: &TestFunction, alpha: f64, dilation: f64, out: &mut Vec<Part>) {
        match f.repr() {
            Repr::Scaled(a, g) => go(g, alpha * a, dilation, out),
            Repr::Sum(g, h) => {
                go(g, alpha, dilation, out);
                go(h, alpha, dilation, out);
            }
            Repr::Dilated(a, g) => go(g, alpha, dilation * a, out),
            _ => {
                if alpha != 0.0 {
                    out.push(Part {
                        alpha,
                        dilation,
                        base: f.clone(),
                    });
                }
            }
        }
    }
    let mut out = Vec::new();
    go(f, 1.0, 1.0, &mut out);
    out
}

fn rebuild(parts: Vec<Part>) -> TestFunction {
    let mut acc: Option<TestFunction> = None;
    for p in parts {
        let mut t = p.base;
        if p.dilation != 1.0 {
            t = TestFunction::dilated(p.dilation, &t).expect("positive dilation");
        }
        if p.alpha != 1.0 {
            t = TestFunction::scaled(p.alpha, &t);
        }
        acc = Some(match acc {
            None => t,
            Some(a) => TestFunction::sum(&a, &t),
        });
    }
    acc.unwrap_or_else(|| TestFunction::scaled(0.0, &TestFunction::gaussian()))
}

/// The Fourier-cosine image `f̂` as a test function.
///
/// Exact rules are applied first: `Ĝ = G`, the image of an image is the
/// original, and scaling, sums and dilations pass through linearly with
/// `(f(a·))^ = a⁻¹ f̂(·/a)`. Anything else becomes a lazily evaluated node.
pub fn fourier_image(f: &TestFunction) -> Result<TestFunction> {
    let mut parts = Vec::new();
    for p in flatten(f) {
        let base = match p.base.repr() {
            Repr::Gaussian => p.base.clone(),
            Repr::FourierImage(img) => img.of.clone(),
            _ => TestFunction::lazy_image(&p.base)?,
        };
        parts.push(Part {
            alpha: p.alpha / p.dilation,
            dilation: 1.0 / p.dilation,
            base,
        });
    }
    Ok(rebuild(parts))
}

/// `sup |f̂| ≤ 2∫|f|` and a second-moment certificate for `f̂` from two
/// integrations by parts: `|f̂(y)| ≤ (|f′(0+)| + TV(f′)) / (2π² y²)`.
pub(crate) fn image_bounds(f: &TestFunction) -> Result<(f64, f64)> {
    if !f.is_continuous() {
        return Err(Error::Domain(format!(
            "the cosine image of the discontinuous {} decays like 1/x and has no second-moment bound",
            f.describe()
        )));
    }
    let sup = 2.0 * f.l1_half_line()?;
    let variation = match f.jets() {
        Some(j) => j.points.iter().map(|(_, d)| d[1].abs()).sum::<f64>() + j.deriv_l1[2],
        None => sampled_derivative_variation(f),
    };
    Ok((sup, variation / (2.0 * PI * PI)))
}

/// `|f′(0+)| + TV(f′)` estimated from the piecewise-linear interpolant on a
/// fine grid, with a 5% allowance.
fn sampled_derivative_variation(f: &TestFunction) -> f64 {
    let end = match f.tail() {
        Tail::Compact(l) => l,
        Tail::Exponential { coeff, rate } => ((coeff / 1e-17).ln() / rate).max(1.0),
        Tail::Power { coeff, exponent } => (coeff / 1e-12).powf(1.0 / exponent).min(1e4),
    };
    let mut xs: Vec<f64> = (0..=20_000).map(|k| end * k as f64 / 20_000.0).collect();
    xs.extend(f.breakpoints().into_iter().filter(|b| *b < end));
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    let slopes: Vec<f64> = xs
        .windows(2)
        .map(|w| (f.eval(w[1]) - f.eval(w[0])) / (w[1] - w[0]))
        .collect();
    let tv: f64 = slopes.windows(2).map(|s| (s[1] - s[0]).abs()).sum();
    let last = slopes.last().copied().unwrap_or(0.0).abs();
    1.05 * (slopes[0].abs() + tv + last)
}

fn uses_expansion(f: &TestFunction, y: f64) -> bool {
    f.jets()
        .is_some_and(|j| 2.0 * PI * y >= 4.0 && j.remainder_bound(y, JET_ORDER) <= 1e-17)
}

/// Value of `f̂(y)` for lazy image nodes, with its error bound. The
/// quadrature tolerance is relaxed stepwise when roundoff blocks it.
pub(crate) fn image_value(f: &TestFunction, y: f64) -> Result<(f64, f64)> {
    if uses_expansion(f, y) {
        let j = f.jets().expect("checked");
        let v = j.expansion(y, JET_ORDER);
        return Ok((
            v,
            j.remainder_bound(y, JET_ORDER) + 16.0 * f64::EPSILON * v.abs(),
        ));
    }
    let mut tol = IMAGE_TOL * f.sup_bound().max(1.0);
    let mut last = None;
    for _ in 0..4 {
        match cosine_quadrature(f, y, tol) {
            Ok(r) => return Ok((r.re(), r.err_bound)),
            Err(e @ Error::ToleranceNotMet { .. }) => {
                last = Some(e);
                tol *= 4.0;
            }
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("loop ran"))
}

/// `2∫₀^∞ cos(2πxy) f(y) dy` by quadrature, without symbolic shortcuts.
pub fn cosine_quadrature(f: &TestFunction, x: f64, tol: f64) -> Result<QuadratureResult> {
    let x = x.abs();
    let kernel = |y: f64| ComplexValue::new(2.0 * (2.0 * PI * x * y).cos() * f.eval(y), 0.0);
    let bps = f.breakpoints();
    if x == 0.0 {
        let q = Quadrature::new(tol).with_breakpoints(bps);
        return q.integrate(kernel, 0.0, tail_upper(f));
    }
    let half = 0.5 / x;
    let direct = |end: f64, tol: f64| {
        let n = (end / half).ceil();
        let mut points = bps.clone();
        if n <= MAX_DIRECT_HALF_PERIODS {
            points.extend((1..n as usize).map(|k| k as f64 * half));
        }
        Quadrature::new(tol)
            .with_breakpoints(points)
            .with_max_intervals(20_000)
            .integrate(kernel, 0.0, Upper::Finite(end))
    };
    match f.tail() {
        Tail::Compact(l) => direct(l, tol),
        Tail::Exponential { coeff, rate } => {
            // Tail beyond Y is at most 2C e^{−rY}/r.
            let end = (4.0 * coeff / (rate * tol)).ln() / rate;
            if end / half <= MAX_DIRECT_HALF_PERIODS {
                let mut r = direct(end, tol / 2.0)?;
                r.err_bound += 2.0 * coeff * (-rate * end).exp() / rate;
                Ok(r)
            } else {
                accelerated(f, x, tol)
            }
        }
        Tail::Power { .. } => accelerated(f, x, tol),
    }
}

/// Head by quadrature up to a whole number of half-periods past the last
/// breakpoint, then the alternating half-period integrals accelerated.
fn accelerated(f: &TestFunction, x: f64, tol: f64) -> Result<QuadratureResult> {
    let half = 0.5 / x;
    let last = f.breakpoints().last().copied().unwrap_or(0.0).max(1.0);
    let head_end = ((last / half).ceil() + 1.0) * half;
    let kernel = |y: f64| ComplexValue::new(2.0 * (2.0 * PI * x * y).cos() * f.eval(y), 0.0);
    let head = Quadrature::new(tol / 4.0)
        .with_breakpoints(f.breakpoints())
        .with_max_intervals(20_000)
        .integrate(kernel, 0.0, Upper::Finite(head_end))?;
    let term_tol = tol * 1e-3;
    let failure = std::cell::Cell::new(None);
    let tail = accelerate_alternating(
        |k| {
            let a = head_end + k as f64 * half;
            match Quadrature::new(term_tol).integrate(kernel, a, Upper::Finite(a + half)) {
                Ok(r) => r.value,
                Err(e) => {
                    failure.set(Some(e));
                    ComplexValue::new(f64::NAN, 0.0)
                }
            }
        },
        tol / 4.0,
    );
    if let Some(e) = failure.take() {
        return Err(e);
    }
    let tail = tail?;
    Ok(QuadratureResult::new(
        head.value + tail.value,
        head.err_bound + tail.err_bound + term_tol * tail.evaluations as f64,
        head.evaluations + tail.evaluations * 15,
    ))
}

/// Fourier-cosine transform `f̂(x) = 2∫₀^∞ cos(2πxy) f(y) dy` (the Poisson
/// summation normalization).
///
/// Images of images are returned exactly; other summands go through
/// quadrature.
pub fn fourier_cosine(f: &TestFunction, x: f64, tol: f64) -> Result<QuadratureResult> {
    let parts = flatten(f);
    let share = tol / parts.len().max(1) as f64;
    let mut total = QuadratureResult::exact(ComplexValue::new(0.0, 0.0));
    for p in &parts {
        let y = x / p.dilation;
        let k = p.alpha / p.dilation;
        let r = match p.base.repr() {
            Repr::FourierImage(img) => QuadratureResult::real(img.of.eval(y), 0.0, 1),
            _ => cosine_quadrature(&p.base, y, share / k.abs())?,
        };
        total = total.plus(r.scale(ComplexValue::new(k, 0.0)));
    }
    Ok(total)
}

/// Unitary cosine transform `√(2/π)∫₀^∞ f(t) cos(xt) dt`, expressed through
/// the `2cos(2πxy)` kernel as `f̂(x/2π)/√(2π)`.
pub fn unitary_cosine(f: &TestFunction, x: f64, tol: f64) -> Result<QuadratureResult> {
    let k = 1.0 / (2.0 * PI).sqrt();
    Ok(fourier_cosine(f, x / (2.0 * PI), tol / k)?.scale(ComplexValue::new(k, 0.0)))
}

/// The unitary-kernel image as a test function.
pub fn unitary_image(f: &TestFunction) -> Result<TestFunction> {
    let img = fourier_image(f)?;
    let stretched = TestFunction::dilated(1.0 / (2.0 * PI), &img)?;
    Ok(TestFunction::scaled(1.0 / (2.0 * PI).sqrt(), &stretched))
}

/// Solves `f = φ − λ√(2/π)∫₀^∞ φ(t) cos(xt) dt` for `φ`:
/// `φ = f/(1−λ²) + λ/(1−λ²) · Uf` with `U` the unitary cosine transform.
pub fn fox_solve(f: &TestFunction, lambda: f64) -> Result<TestFunction> {
    if (lambda.abs() - 1.0).abs() < 1e-12 {
        return Err(Error::LambdaUnit(lambda));
    }
    if lambda == 0.0 {
        return Ok(f.clone());
    }
    let d = 1.0 - lambda * lambda;
    let direct = TestFunction::scaled(1.0 / d, f);
    let image = TestFunction::scaled(lambda / d, &unitary_image(f)?);
    Ok(TestFunction::sum(&direct, &image))
}

/// `|f(x) − (φ(x) − λ Uφ(x))|` with `Uφ` evaluated by [`unitary_cosine`].
pub fn fox_residual(
    f: &TestFunction,
    phi: &TestFunction,
    lambda: f64,
    x: f64,
    tol: f64,
) -> Result<QuadratureResult> {
    let u = unitary_cosine(phi, x, tol)?;
    let rhs = phi.eval(x) - lambda * u.re();
    Ok(QuadratureResult::real(
        (f.eval(x) - rhs).abs(),
        lambda.abs() * u.err_bound,
        u.evaluations,
    ))
}
