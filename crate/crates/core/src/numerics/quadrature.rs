//! Globally adaptive Gauss–Kronrod (7/15) quadrature with bisection.
//!
//! Infinite upper limits are split at a cutoff chosen from a caller-supplied
//! decay certificate; the neglected tail is added to the error bound.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::Arc;

use super::{ComplexValue, QuadratureResult};
use crate::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

// Gauss weights for XGK[1], XGK[3], XGK[5] and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Bisection depth beyond which a shrinking endpoint interval is declared a
/// non-integrable singularity.
const MAX_DEPTH: u32 = 900;

/// Bound on `|f(x)|` for large `x`, used to truncate `[a, ∞)`.
#[derive(Clone)]
pub enum TailCertificate {
    /// `|f(x)| ≤ coeff · x^{−exponent}` for `x ≥ 1`, with `exponent > 1`.
    Power { coeff: f64, exponent: f64 },
    /// `|f(x)| ≤ coeff · e^{−rate·x}` for `x ≥ 0`.
    Exponential { coeff: f64, rate: f64 },
    /// Arbitrary bound on `|∫_X^∞ f|` as a function of the cutoff `X`.
    Tail(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl std::fmt::Debug for TailCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Power { coeff, exponent } => {
                write!(f, "Power {{ coeff: {coeff}, exponent: {exponent} }}")
            }
            Self::Exponential { coeff, rate } => {
                write!(f, "Exponential {{ coeff: {coeff}, rate: {rate} }}")
            }
            Self::Tail(_) => write!(f, "Tail(..)"),
        }
    }
}

impl TailCertificate {
    /// Upper bound on `|∫_X^∞ f(x) dx|`.
    pub fn tail_bound(&self, cutoff: f64) -> f64 {
        match self {
            Self::Power { coeff, exponent } => {
                if cutoff < 1.0 || *exponent <= 1.0 {
                    f64::INFINITY
                } else {
                    coeff * cutoff.powf(1.0 - exponent) / (exponent - 1.0)
                }
            }
            Self::Exponential { coeff, rate } => {
                if *rate <= 0.0 {
                    f64::INFINITY
                } else {
                    coeff * (-rate * cutoff).exp() / rate
                }
            }
            Self::Tail(bound) => bound(cutoff),
        }
    }
}

/// Upper integration limit.
#[derive(Debug, Clone)]
pub enum Upper {
    Finite(f64),
    Infinite(TailCertificate),
}

/// Configured adaptive integrator.
#[derive(Debug, Clone)]
pub struct Quadrature {
    pub tol: f64,
    pub max_intervals: usize,
    pub breakpoints: Vec<f64>,
}

impl Quadrature {
    pub fn new(tol: f64) -> Self {
        Self {
            tol,
            max_intervals: 4000,
            breakpoints: Vec::new(),
        }
    }

    pub fn with_breakpoints(mut self, points: impl IntoIterator<Item = f64>) -> Self {
        self.breakpoints.extend(points);
        self
    }

    pub fn with_max_intervals(mut self, max_intervals: usize) -> Self {
        self.max_intervals = max_intervals;
        self
    }

    pub fn integrate<F>(&self, f: F, a: f64, upper: Upper) -> Result<QuadratureResult>
    where
        F: Fn(f64) -> ComplexValue,
    {
        if !(self.tol > 0.0) {
            return Err(Error::Domain(format!(
                "tolerance must be positive, got {}",
                self.tol
            )));
        }
        match upper {
            Upper::Finite(b) => {
                if !(a.is_finite() && b.is_finite()) {
                    return Err(Error::Domain(format!("non-finite limits [{a}, {b}]")));
                }
                if a == b {
                    return Ok(QuadratureResult::exact(ComplexValue::new(0.0, 0.0)));
                }
                if b < a {
                    let r = self.integrate(f, b, Upper::Finite(a))?;
                    return Ok(r.scale(ComplexValue::new(-1.0, 0.0)));
                }
                let mut points = vec![a];
                points.extend(self.breakpoints.iter().copied().filter(|&p| p > a && p < b));
                points.push(b);
                points.sort_by(f64::total_cmp);
                points.dedup();
                self.adaptive(&f, &points, self.tol, (a, b))
            }
            Upper::Infinite(cert) => {
                let cutoff = choose_cutoff(a, &cert, self.tol / 4.0)?;
                let tail = cert.tail_bound(cutoff);
                let mut points = vec![a];
                let mut width = 1.0;
                let mut x = a + width;
                while x < cutoff {
                    points.push(x);
                    width *= 2.0;
                    x = a + width;
                }
                points.push(cutoff);
                points.extend(
                    self.breakpoints
                        .iter()
                        .copied()
                        .filter(|&p| p > a && p < cutoff),
                );
                points.sort_by(f64::total_cmp);
                points.dedup();
                let mut r = self.adaptive(&f, &points, self.tol - tail, (a, cutoff))?;
                r.err_bound += tail;
                Ok(r)
            }
        }
    }

    fn adaptive<F>(
        &self,
        f: &F,
        points: &[f64],
        target: f64,
        ends: (f64, f64),
    ) -> Result<QuadratureResult>
    where
        F: Fn(f64) -> ComplexValue,
    {
        let mut heap = BinaryHeap::new();
        let mut evaluations = 0;
        for w in points.windows(2) {
            let seg = Segment::evaluate(f, w[0], w[1], 0, ends)?;
            evaluations += 15;
            heap.push(seg);
        }
        loop {
            let total_err: f64 = heap.iter().map(|s| s.err).sum();
            if total_err <= target {
                return Ok(finish(heap, evaluations));
            }
            if heap.len() >= self.max_intervals {
                return Err(Error::ToleranceNotMet {
                    achieved: total_err,
                    requested: target,
                });
            }
            let worst = heap.pop().expect("heap never empty");
            if worst.err <= 100.0 * f64::EPSILON * worst.resabs {
                // Roundoff floor: nothing left to refine.
                return Err(Error::ToleranceNotMet {
                    achieved: total_err,
                    requested: target,
                });
            }
            if worst.depth >= MAX_DEPTH {
                let touches_end = worst.a == ends.0 || worst.b == ends.1;
                return Err(if touches_end {
                    Error::NonIntegrableSingularity {
                        at: if worst.a == ends.0 { ends.0 } else { ends.1 },
                    }
                } else {
                    Error::ToleranceNotMet {
                        achieved: total_err,
                        requested: target,
                    }
                });
            }
            let mid = 0.5 * (worst.a + worst.b);
            if mid <= worst.a || mid >= worst.b {
                return Err(Error::ToleranceNotMet {
                    achieved: total_err,
                    requested: target,
                });
            }
            heap.push(Segment::evaluate(f, worst.a, mid, worst.depth + 1, ends)?);
            heap.push(Segment::evaluate(f, mid, worst.b, worst.depth + 1, ends)?);
            evaluations += 30;
        }
    }
}

fn choose_cutoff(a: f64, cert: &TailCertificate, budget: f64) -> Result<f64> {
    let mut x = (a + 1.0).max(1.0);
    for _ in 0..2000 {
        if cert.tail_bound(x) <= budget {
            return Ok(x);
        }
        x *= 1.25;
        if !x.is_finite() || x > 1e200 {
            break;
        }
    }
    Err(Error::ToleranceNotMet {
        achieved: cert.tail_bound(x),
        requested: budget,
    })
}

fn finish(heap: BinaryHeap<Segment>, evaluations: usize) -> QuadratureResult {
    let mut segs = heap.into_vec();
    // Fixed summation order keeps results independent of heap layout.
    segs.sort_by(|l, r| l.a.total_cmp(&r.a));
    let mut value = super::ComplexSum::new();
    let mut err = 0.0;
    for s in &segs {
        value.add(s.value);
        err += s.err;
    }
    QuadratureResult::new(value.value(), err, evaluations)
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: ComplexValue,
    err: f64,
    resabs: f64,
    depth: u32,
}

impl Segment {
    fn evaluate<F>(f: &F, a: f64, b: f64, depth: u32, ends: (f64, f64)) -> Result<Self>
    where
        F: Fn(f64) -> ComplexValue,
    {
        let centre = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut fv = [ComplexValue::new(0.0, 0.0); 15];
        fv[7] = f(centre);
        for j in 0..7 {
            let dx = half * XGK[j];
            fv[j] = f(centre - dx);
            fv[14 - j] = f(centre + dx);
        }
        if let Some(bad) = fv
            .iter()
            .position(|z| !(z.re.is_finite() && z.im.is_finite()))
        {
            let x = if bad == 7 {
                centre
            } else if bad < 7 {
                centre - half * XGK[bad]
            } else {
                centre + half * XGK[14 - bad]
            };
            let near_end = a == ends.0 || b == ends.1;
            return Err(if near_end {
                Error::NonIntegrableSingularity {
                    at: if a == ends.0 { ends.0 } else { ends.1 },
                }
            } else {
                Error::NonFinite(format!("integrand at x = {x}"))
            });
        }
        let (re, im) = (
            component(&fv, half, |z| z.re),
            component(&fv, half, |z| z.im),
        );
        Ok(Self {
            a,
            b,
            value: ComplexValue::new(re.0, im.0),
            err: re.1.hypot(im.1),
            resabs: re.2 + im.2,
            depth,
        })
    }
}

/// Kronrod value, rescaled error estimate and ∫|f| for one component.
fn component(
    fv: &[ComplexValue; 15],
    half: f64,
    part: impl Fn(&ComplexValue) -> f64,
) -> (f64, f64, f64) {
    let v: Vec<f64> = fv.iter().map(&part).collect();
    let fc = v[7];
    let mut resk = WGK[7] * fc;
    let mut resg = WG[3] * fc;
    let mut resabs = WGK[7] * fc.abs();
    for j in 0..7 {
        let pair = v[j] + v[14 - j];
        resk += WGK[j] * pair;
        resabs += WGK[j] * (v[j].abs() + v[14 - j].abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * pair;
        }
    }
    let mean = resk * 0.5;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((v[j] - mean).abs() + (v[14 - j] - mean).abs());
    }
    let result = resk * half;
    let resabs = resabs * half.abs();
    let resasc = resasc * half.abs();
    let mut err = ((resk - resg) * half).abs();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    (result, err, resabs)
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// Adaptive integral of a complex integrand over `[a, b]` or `[a, ∞)`.
pub fn integrate_adaptive<F>(f: F, a: f64, b: Upper, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> ComplexValue,
{
    Quadrature::new(tol).integrate(f, a, b)
}

/// Real-valued convenience wrapper around [`integrate_adaptive`].
pub fn integrate_real<F>(f: F, a: f64, b: Upper, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    integrate_adaptive(|x| ComplexValue::new(f(x), 0.0), a, b, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn polynomial_on_unit_interval() {
        let r = integrate_real(|x| x * x, 0.0, Upper::Finite(1.0), 1e-10).unwrap();
        assert!((r.re() - 1.0 / 3.0).abs() < 1e-14);
        assert!(r.err_bound <= 1e-10);
    }

    #[test]
    fn gaussian_half_line() {
        let cert = TailCertificate::Exponential {
            coeff: (PI / 4.0).exp(),
            rate: PI,
        };
        let r = integrate_real(|x| (-PI * x * x).exp(), 0.0, Upper::Infinite(cert), 1e-10).unwrap();
        assert!((r.re() - 0.5).abs() < 1e-10, "{}", r.re());
    }

    #[test]
    fn power_law_tail() {
        let cert = TailCertificate::Power {
            coeff: 1.0,
            exponent: 2.0,
        };
        let r = integrate_real(|x| x.powi(-2), 1.0, Upper::Infinite(cert), 1e-8).unwrap();
        assert!((r.re() - 1.0).abs() <= r.err_bound.max(1e-8));
        assert!(r.err_bound <= 1e-8);
    }

    #[test]
    fn integrable_endpoint_singularity() {
        let r = integrate_real(|x| x.powf(-0.5), 0.0, Upper::Finite(1.0), 1e-9).unwrap();
        assert!((r.re() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn non_integrable_singularity_is_detected() {
        let r = integrate_real(|x| 1.0 / x, 0.0, Upper::Finite(1.0), 1e-8);
        assert!(
            matches!(r, Err(Error::NonIntegrableSingularity { at }) if at == 0.0),
            "{r:?}"
        );
    }

    #[test]
    fn budget_exhaustion_reports_tolerance() {
        let r = Quadrature::new(1e-12).with_max_intervals(3).integrate(
            |x| ComplexValue::new((50.0 * x).sin(), 0.0),
            0.0,
            Upper::Finite(10.0),
        );
        assert!(matches!(r, Err(Error::ToleranceNotMet { .. })));
    }

    #[test]
    fn reversed_limits_flip_sign() {
        let r = integrate_real(|x| x, 1.0, Upper::Finite(0.0), 1e-12).unwrap();
        assert!((r.re() + 0.5).abs() < 1e-14);
    }

    #[test]
    fn complex_oscillatory_integrand() {
        // ∫_0^1 e^{i 10 x} dx = (e^{10i} − 1)/(10i)
        let r = integrate_adaptive(
            |x| ComplexValue::new(0.0, 10.0 * x).exp(),
            0.0,
            Upper::Finite(1.0),
            1e-12,
        )
        .unwrap();
        let exact = (ComplexValue::new(0.0, 10.0).exp() - 1.0) / ComplexValue::new(0.0, 10.0);
        assert!((r.value - exact).norm() < 1e-12);
    }
}
