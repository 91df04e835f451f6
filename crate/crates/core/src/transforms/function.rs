//! Even real test functions with decay certificates.

use std::collections::HashMap;
use std::f64::consts::{E, PI};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::jets::{Jets, JET_ORDER};
use crate::numerics::{integrate_real, Upper};
use crate::{Error, Result};

/// How fast a function decays, used to truncate sums and integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tail {
    /// Vanishes for `|x| > L`.
    Compact(f64),
    /// `|c(x)| ≤ coeff · e^{−rate·|x|}` everywhere.
    Exponential { coeff: f64, rate: f64 },
    /// `|c(x)| ≤ coeff · |x|^{−exponent}` for `|x| ≥ 1`.
    Power { coeff: f64, exponent: f64 },
}

impl Tail {
    /// Re-express as a power bound with the given exponent, valid for `x ≥ 1`.
    fn as_power(self, exponent: f64, sup: f64) -> f64 {
        match self {
            Tail::Compact(l) => sup * l.max(1.0).powf(exponent),
            Tail::Exponential { coeff, rate } => {
                // max_x x^p e^{−rx} = (p/(re))^p
                coeff * (exponent / (rate * E)).powf(exponent)
            }
            Tail::Power { coeff, .. } => coeff,
        }
    }

    fn combine(self, sup_a: f64, other: Tail, sup_b: f64) -> Tail {
        use Tail::*;
        match (self, other) {
            (Compact(a), Compact(b)) => Compact(a.max(b)),
            (
                Exponential {
                    coeff: c1,
                    rate: r1,
                },
                Exponential {
                    coeff: c2,
                    rate: r2,
                },
            ) => Exponential {
                coeff: c1 + c2,
                rate: r1.min(r2),
            },
            (Compact(l), Exponential { coeff, rate }) => Exponential {
                coeff: coeff + sup_a * (rate * l).exp(),
                rate,
            },
            (Exponential { .. }, Compact(_)) => other.combine(sup_b, self, sup_a),
            (Power { exponent: p1, .. }, _) | (_, Power { exponent: p1, .. }) => {
                let p = match (self, other) {
                    (Power { exponent: a, .. }, Power { exponent: b, .. }) => a.min(b),
                    _ => p1,
                };
                Power {
                    coeff: self.as_power(p, sup_a) + other.as_power(p, sup_b),
                    exponent: p,
                }
            }
        }
    }

    fn scaled(self, alpha: f64) -> Tail {
        let k = alpha.abs();
        match self {
            Tail::Compact(l) => Tail::Compact(l),
            Tail::Exponential { coeff, rate } => Tail::Exponential {
                coeff: coeff * k,
                rate,
            },
            Tail::Power { coeff, exponent } => Tail::Power {
                coeff: coeff * k,
                exponent,
            },
        }
    }
}

/// A piecewise cubic, monotonicity-preserving interpolant on `[0, L]`.
#[derive(Debug)]
pub(crate) struct Sampled {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    slopes: Vec<f64>,
}

impl Sampled {
    fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::LengthMismatch(xs.len(), ys.len()));
        }
        if xs.len() < 2 || xs[0] != 0.0 {
            return Err(Error::InvalidGrid(
                "sampled grid must start at 0 with ≥ 2 points".into(),
            ));
        }
        if xs.windows(2).any(|w| !(w[1] > w[0])) || xs.iter().chain(&ys).any(|v| !v.is_finite()) {
            return Err(Error::InvalidGrid(
                "sampled grid must be finite and strictly increasing".into(),
            ));
        }
        let n = xs.len();
        let d: Vec<f64> = (0..n - 1)
            .map(|k| (ys[k + 1] - ys[k]) / (xs[k + 1] - xs[k]))
            .collect();
        let mut m = vec![0.0; n];
        m[0] = d[0];
        m[n - 1] = d[n - 2];
        for k in 1..n - 1 {
            m[k] = if d[k - 1] * d[k] <= 0.0 {
                0.0
            } else {
                0.5 * (d[k - 1] + d[k])
            };
        }
        // Fritsch–Carlson limiter.
        for k in 0..n - 1 {
            if d[k] == 0.0 {
                m[k] = 0.0;
                m[k + 1] = 0.0;
                continue;
            }
            let a = m[k] / d[k];
            let b = m[k + 1] / d[k];
            if a < 0.0 {
                m[k] = 0.0;
            }
            if b < 0.0 {
                m[k + 1] = 0.0;
            }
            let r = a * a + b * b;
            if r > 9.0 {
                let tau = 3.0 / r.sqrt();
                m[k] = tau * a * d[k];
                m[k + 1] = tau * b * d[k];
            }
        }
        Ok(Self { xs, ys, slopes: m })
    }

    fn support(&self) -> f64 {
        *self.xs.last().expect("non-empty grid")
    }

    fn eval(&self, x: f64) -> f64 {
        let l = self.support();
        if x > l {
            return 0.0;
        }
        let k = match self.xs.binary_search_by(|p| p.total_cmp(&x)) {
            Ok(k) => return self.ys[k],
            Err(k) => k - 1,
        };
        let h = self.xs[k + 1] - self.xs[k];
        let t = (x - self.xs[k]) / h;
        let (t2, t3) = (t * t, t * t * t);
        (2.0 * t3 - 3.0 * t2 + 1.0) * self.ys[k]
            + (t3 - 2.0 * t2 + t) * h * self.slopes[k]
            + (-2.0 * t3 + 3.0 * t2) * self.ys[k + 1]
            + (t3 - t2) * h * self.slopes[k + 1]
    }
}

/// Lazily evaluated Fourier-cosine image of another function.
pub(crate) struct Image {
    pub of: TestFunction,
    pub sup: f64,
    pub certificate: f64,
    cache: Mutex<HashMap<u64, (f64, f64)>>,
}

const CACHE_LIMIT: usize = 1 << 20;

pub(crate) enum Repr {
    Gaussian,
    Triangle,
    PeakTimesGaussian,
    ExpDecay,
    Indicator01,
    SampledEven(Sampled),
    FourierImage(Image),
    Scaled(f64, TestFunction),
    Sum(TestFunction, TestFunction),
    Dilated(f64, TestFunction),
}

pub(crate) struct Node {
    pub repr: Repr,
    jets: OnceLock<Option<Arc<Jets>>>,
}

/// An even, real function on the line with a certified decay class.
///
/// Values are immutable after construction; clones share structure.
/// Evaluation always uses `|x|`.
#[derive(Clone)]
pub struct TestFunction(pub(crate) Arc<Node>);

impl fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// Bound on `max |x²c(x)|` for `p(x)e^{−πx²}`; the true value is 0.0590134.
const PEAK_GAUSS_SECOND_MOMENT: f64 = 0.0591;

impl TestFunction {
    fn from_repr(repr: Repr) -> Self {
        Self(Arc::new(Node {
            repr,
            jets: OnceLock::new(),
        }))
    }

    pub(crate) fn repr(&self) -> &Repr {
        &self.0.repr
    }

    /// `e^{−πx²}`.
    pub fn gaussian() -> Self {
        Self::from_repr(Repr::Gaussian)
    }

    /// Even extension of the peak, `max(0, 1 − |x|)`.
    pub fn triangle() -> Self {
        Self::from_repr(Repr::Triangle)
    }

    /// `max(0, 1 − |x|) · e^{−πx²}`.
    pub fn peak_times_gaussian() -> Self {
        Self::from_repr(Repr::PeakTimesGaussian)
    }

    /// `e^{−|x|}`.
    pub fn exp_decay() -> Self {
        Self::from_repr(Repr::ExpDecay)
    }

    /// Indicator of `[−1, 1]`.
    pub fn indicator01() -> Self {
        Self::from_repr(Repr::Indicator01)
    }

    /// Monotone cubic interpolation of samples on `0 = x₀ < … < x_n = L`,
    /// zero beyond `L`.
    pub fn sampled_even(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        Ok(Self::from_repr(Repr::SampledEven(Sampled::new(xs, ys)?)))
    }

    /// `α · f`.
    pub fn scaled(alpha: f64, f: &TestFunction) -> Self {
        Self::from_repr(Repr::Scaled(alpha, f.clone()))
    }

    /// `f + g`.
    pub fn sum(f: &TestFunction, g: &TestFunction) -> Self {
        Self::from_repr(Repr::Sum(f.clone(), g.clone()))
    }

    /// `x ↦ f(a·x)` for `a > 0`.
    pub fn dilated(a: f64, f: &TestFunction) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::Domain(format!(
                "dilation factor must be positive, got {a}"
            )));
        }
        Ok(Self::from_repr(Repr::Dilated(a, f.clone())))
    }

    /// Unsimplified lazy image node. Callers normally go through
    /// [`super::fourier_image`], which applies exact simplifications first.
    pub(crate) fn lazy_image(f: &TestFunction) -> Result<Self> {
        let (sup, certificate) = super::fourier::image_bounds(f)?;
        Ok(Self::from_repr(Repr::FourierImage(Image {
            of: f.clone(),
            sup,
            certificate,
            cache: Mutex::new(HashMap::new()),
        })))
    }

    pub fn eval(&self, x: f64) -> f64 {
        let x = x.abs();
        match self.repr() {
            Repr::Gaussian => (-PI * x * x).exp(),
            Repr::Triangle => (1.0 - x).max(0.0),
            Repr::PeakTimesGaussian => (1.0 - x).max(0.0) * (-PI * x * x).exp(),
            Repr::ExpDecay => (-x).exp(),
            Repr::Indicator01 => {
                if x <= 1.0 {
                    1.0
                } else {
                    0.0
                }
            }
            Repr::SampledEven(s) => s.eval(x),
            Repr::FourierImage(img) => img.eval(x),
            Repr::Scaled(a, f) => a * f.eval(x),
            Repr::Sum(f, g) => f.eval(x) + g.eval(x),
            Repr::Dilated(a, f) => f.eval(a * x),
        }
    }

    /// Certified bound `C ≥ max_x |x² c(x)|`.
    pub fn decay_certificate(&self) -> f64 {
        match self.repr() {
            Repr::Gaussian => 1.0 / (PI * E),
            Repr::Triangle => 4.0 / 27.0,
            Repr::PeakTimesGaussian => PEAK_GAUSS_SECOND_MOMENT,
            Repr::ExpDecay => 4.0 / (E * E),
            Repr::Indicator01 => 1.0,
            Repr::SampledEven(s) => {
                s.xs.windows(2)
                    .zip(s.ys.windows(2))
                    .map(|(x, y)| x[1] * x[1] * y[0].abs().max(y[1].abs()))
                    .fold(0.0, f64::max)
            }
            Repr::FourierImage(img) => img.certificate,
            Repr::Scaled(a, f) => a.abs() * f.decay_certificate(),
            Repr::Sum(f, g) => f.decay_certificate() + g.decay_certificate(),
            Repr::Dilated(a, f) => f.decay_certificate() / (a * a),
        }
    }

    /// Bound on `sup |c|`.
    pub fn sup_bound(&self) -> f64 {
        match self.repr() {
            Repr::Gaussian
            | Repr::Triangle
            | Repr::PeakTimesGaussian
            | Repr::ExpDecay
            | Repr::Indicator01 => 1.0,
            Repr::SampledEven(s) => s.ys.iter().fold(0.0, |m, v| m.max(v.abs())),
            Repr::FourierImage(img) => img.sup,
            Repr::Scaled(a, f) => a.abs() * f.sup_bound(),
            Repr::Sum(f, g) => f.sup_bound() + g.sup_bound(),
            Repr::Dilated(_, f) => f.sup_bound(),
        }
    }

    pub fn tail(&self) -> Tail {
        match self.repr() {
            Repr::Gaussian => Tail::Exponential {
                coeff: (PI / 4.0).exp(),
                rate: PI,
            },
            Repr::Triangle | Repr::PeakTimesGaussian | Repr::Indicator01 => Tail::Compact(1.0),
            Repr::ExpDecay => Tail::Exponential {
                coeff: 1.0,
                rate: 1.0,
            },
            Repr::SampledEven(s) => Tail::Compact(s.support()),
            Repr::FourierImage(img) => Tail::Power {
                coeff: img.certificate,
                exponent: 2.0,
            },
            Repr::Scaled(a, f) => f.tail().scaled(*a),
            Repr::Sum(f, g) => f.tail().combine(f.sup_bound(), g.tail(), g.sup_bound()),
            Repr::Dilated(a, f) => match f.tail() {
                Tail::Compact(l) => Tail::Compact(l / a),
                Tail::Exponential { coeff, rate } => Tail::Exponential {
                    coeff,
                    rate: rate * a,
                },
                Tail::Power { coeff, exponent } => {
                    let base = if *a < 1.0 {
                        coeff.max(f.sup_bound())
                    } else {
                        coeff
                    };
                    Tail::Power {
                        coeff: base * a.powf(-exponent),
                        exponent,
                    }
                }
            },
        }
    }

    /// Whether the function vanishes beyond some finite point.
    pub fn support(&self) -> Option<f64> {
        match self.tail() {
            Tail::Compact(l) => Some(l),
            _ => None,
        }
    }

    /// Points in `(0, ∞)` where the function or a derivative may jump.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut out = match self.repr() {
            Repr::Gaussian | Repr::ExpDecay | Repr::FourierImage(_) => vec![],
            Repr::Triangle | Repr::PeakTimesGaussian | Repr::Indicator01 => vec![1.0],
            Repr::SampledEven(s) => s.xs[1..].to_vec(),
            Repr::Scaled(_, f) => f.breakpoints(),
            Repr::Sum(f, g) => {
                let mut v = f.breakpoints();
                v.extend(g.breakpoints());
                v
            }
            Repr::Dilated(a, f) => f.breakpoints().into_iter().map(|b| b / a).collect(),
        };
        out.sort_by(f64::total_cmp);
        out.dedup();
        out
    }

    /// Derivative-jump data for the boundary expansion of the Fourier image,
    /// when available in closed form.
    pub(crate) fn jets(&self) -> Option<Arc<Jets>> {
        self.0
            .jets
            .get_or_init(|| super::jets::build(self).map(Arc::new))
            .clone()
    }

    /// Whether the function is continuous on `[0, ∞)`.
    pub fn is_continuous(&self) -> bool {
        match self.repr() {
            Repr::Indicator01 => false,
            Repr::SampledEven(s) => *s.ys.last().expect("non-empty") == 0.0,
            Repr::Scaled(a, f) => *a == 0.0 || f.is_continuous(),
            Repr::Sum(f, g) => f.is_continuous() && g.is_continuous(),
            Repr::Dilated(_, f) => f.is_continuous(),
            _ => true,
        }
    }

    /// `∫₀^∞ |c(x)| dx`.
    pub fn l1_half_line(&self) -> Result<f64> {
        let bps = self.breakpoints();
        let q = crate::numerics::Quadrature::new(1e-12).with_breakpoints(bps.iter().copied());
        let upper = tail_upper(self);
        let r = q.integrate(|x| self.eval(x).abs().into(), 0.0, upper)?;
        Ok(r.re() + r.err_bound)
    }

    /// Human-readable structure.
    pub fn describe(&self) -> String {
        match self.repr() {
            Repr::Gaussian => "Gaussian".into(),
            Repr::Triangle => "Triangle".into(),
            Repr::PeakTimesGaussian => "PeakTimesGaussian".into(),
            Repr::ExpDecay => "ExpDecay".into(),
            Repr::Indicator01 => "Indicator01".into(),
            Repr::SampledEven(s) => {
                format!("SampledEven({} points on [0, {}])", s.xs.len(), s.support())
            }
            Repr::FourierImage(img) => format!("FourierImage({})", img.of.describe()),
            Repr::Scaled(a, f) => format!("Scaled({a}, {})", f.describe()),
            Repr::Sum(f, g) => format!("Sum({}, {})", f.describe(), g.describe()),
            Repr::Dilated(a, f) => format!("Dilated({a}, {})", f.describe()),
        }
    }
}

/// Quadrature upper limit for `∫₀^∞ |c|` style integrals.
pub(crate) fn tail_upper(c: &TestFunction) -> Upper {
    use crate::numerics::TailCertificate;
    match c.tail() {
        Tail::Compact(l) => Upper::Finite(l),
        Tail::Exponential { coeff, rate } => {
            Upper::Infinite(TailCertificate::Exponential { coeff, rate })
        }
        Tail::Power { coeff, exponent } => {
            Upper::Infinite(TailCertificate::Power { coeff, exponent })
        }
    }
}

impl Image {
    fn eval(&self, x: f64) -> f64 {
        self.eval_with_err(x).0
    }

    /// Value and its error bound; NaN when no evaluation path succeeds.
    pub(crate) fn eval_with_err(&self, x: f64) -> (f64, f64) {
        let key = x.to_bits();
        if let Some(v) = self.cache.lock().expect("cache lock").get(&key) {
            return *v;
        }
        let v = super::fourier::image_value(&self.of, x).unwrap_or((f64::NAN, f64::INFINITY));
        let mut cache = self.cache.lock().expect("cache lock");
        if cache.len() >= CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(key, v);
        v
    }
}

/// `∫₀^L |f^{(k)}|` helper for the closed-form variants.
pub(crate) fn derivative_l1(deriv: impl Fn(f64) -> f64, upper: f64) -> f64 {
    let rough = integrate_real(|t| deriv(t).abs(), 0.0, Upper::Finite(upper), 1e-6)
        .map(|r| r.re() + r.err_bound)
        .unwrap_or(f64::INFINITY);
    if !rough.is_finite() {
        return rough;
    }
    integrate_real(
        |t| deriv(t).abs(),
        0.0,
        Upper::Finite(upper),
        1e-10 * rough.max(1.0),
    )
    .map(|r| r.re() + r.err_bound)
    .unwrap_or(rough)
}

/// Derivatives `g^{(k)}(t)`, `k < JET_ORDER + 1`, of `e^{−πt²}` via Hermite polynomials.
pub(crate) fn gaussian_derivatives(t: f64) -> [f64; JET_ORDER + 1] {
    let y = PI.sqrt() * t;
    let g = (-PI * t * t).exp();
    let mut out = [0.0; JET_ORDER + 1];
    let (mut h_prev, mut h) = (0.0, 1.0);
    let mut scale = 1.0;
    for (k, slot) in out.iter_mut().enumerate() {
        *slot = scale * h * g;
        let next = 2.0 * y * h - 2.0 * k as f64 * h_prev;
        h_prev = h;
        h = next;
        scale *= -PI.sqrt();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evenness_and_values() {
        let fs = [
            TestFunction::gaussian(),
            TestFunction::triangle(),
            TestFunction::peak_times_gaussian(),
            TestFunction::exp_decay(),
            TestFunction::indicator01(),
        ];
        for f in &fs {
            for x in [0.0, 0.3, 0.9, 1.7] {
                assert_eq!(f.eval(x), f.eval(-x));
            }
        }
        assert_eq!(TestFunction::triangle().eval(0.25), 0.75);
        assert_eq!(TestFunction::indicator01().eval(1.0), 1.0);
        assert_eq!(TestFunction::indicator01().eval(1.0 + 1e-12), 0.0);
    }

    #[test]
    fn sampled_interpolation_is_monotone_and_exact_at_nodes() {
        let xs = vec![0.0, 0.5, 1.0, 2.0];
        let ys = vec![1.0, 0.9, 0.2, 0.0];
        let f = TestFunction::sampled_even(xs.clone(), ys.clone()).unwrap();
        for (x, y) in xs.iter().zip(&ys) {
            assert_eq!(f.eval(*x), *y);
        }
        let mut prev = f.eval(0.0);
        for k in 1..=400 {
            let v = f.eval(k as f64 * 0.005);
            assert!(v <= prev + 1e-15);
            prev = v;
        }
        assert_eq!(f.eval(2.5), 0.0);
        assert!(TestFunction::sampled_even(vec![0.0, 0.0], vec![1.0, 1.0]).is_err());
    }

    #[test]
    fn gaussian_derivatives_match_finite_differences() {
        let t = 0.37;
        let d = gaussian_derivatives(t);
        let h = 1e-5;
        let fd = (gaussian_derivatives(t + h)[2] - gaussian_derivatives(t - h)[2]) / (2.0 * h);
        assert!((d[3] - fd).abs() < 1e-6 * d[3].abs().max(1.0));
        assert!((d[1] + 2.0 * PI * t * (-PI * t * t).exp()).abs() < 1e-14);
    }

    #[test]
    fn dilated_tail_certificates_hold() {
        let f = TestFunction::dilated(0.5, &TestFunction::gaussian()).unwrap();
        if let Tail::Exponential { coeff, rate } = f.tail() {
            for x in [0.0, 1.0, 3.0, 6.0] {
                assert!(f.eval(x) <= coeff * (-rate * x).exp() + 1e-300);
            }
        } else {
            panic!("expected exponential tail");
        }
        assert!((f.decay_certificate() - 4.0 / (PI * E)).abs() < 1e-15);
    }
}
