//! Continuation of `ζ` through lattice sums: the tail integral
//! `I(θ(c))(s) = ∫₁^∞ (x^{−s} + x^{s−1}) θ(c)(x) dx`, the Müntz relation and
//! the split of `Im[M(c)ζ](s)` into a trivial and an oscillatory part.

use std::cell::Cell;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::numerics::{trivial_zeta, ComplexValue, Quadrature, QuadratureResult, Upper};
use crate::reference::{gamma, zeta_reference};
use crate::transforms::jets::JET_ORDER;
use crate::transforms::{flatten, mellin, mellin_strip, theta_transform, Repr, Tail, TestFunction};
use crate::{Error, Result};

/// Distance from `s = 1` inside which everything refuses to evaluate.
pub const POLE_GUARD: f64 = 1e-3;

/// Largest cutoff accepted for tails known only through a power bound.
const MAX_CUTOFF: f64 = 1e4;

/// Form of the polar term in the Müntz relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum PoleTerm {
    /// `c(0) / (2s(s−1))`, what Poisson summation actually gives.
    #[default]
    Corrected,
    /// `1 / (s(s−1))`.
    AsPrinted,
}

impl PoleTerm {
    pub fn value(self, c0: f64, s: ComplexValue) -> ComplexValue {
        let q = s * (s - 1.0);
        match self {
            PoleTerm::Corrected => c0 / (2.0 * q),
            PoleTerm::AsPrinted => 1.0 / q,
        }
    }
}

fn guard_pole(s: ComplexValue) -> Result<()> {
    if (s - 1.0).norm() < POLE_GUARD {
        return Err(Error::PoleAtOne);
    }
    Ok(())
}

/// Which kernel multiplies `θ(c)(x)` on `[1, ∞)`.
#[derive(Clone, Copy)]
enum Kernel {
    /// `x^{−s} + x^{s−1}`.
    Muntz(ComplexValue),
    /// `(x^{σ−1} − x^{−σ}) sin(t x)`, the linear-phase variant.
    LinearPhase(ComplexValue),
}

impl Kernel {
    fn at(self, x: f64) -> ComplexValue {
        match self {
            Kernel::Muntz(s) => {
                let l = x.ln();
                (-s * l).exp() + ((s - 1.0) * l).exp()
            }
            Kernel::LinearPhase(s) => {
                ComplexValue::new((x.powf(s.re - 1.0) - x.powf(-s.re)) * (s.im * x).sin(), 0.0)
            }
        }
    }

    /// Exponent `q` with `|kernel(x)| ≤ 2x^q` on `[1, ∞)`.
    fn growth(self) -> f64 {
        let s = match self {
            Kernel::Muntz(s) | Kernel::LinearPhase(s) => s,
        };
        (-s.re).max(s.re - 1.0)
    }

    /// `∫₁^X |kernel|` bound.
    fn l1_to(self, x: f64) -> f64 {
        let q = self.growth();
        if (q + 1.0).abs() < 1e-12 {
            2.0 * x.ln()
        } else {
            2.0 * (x.powf(q + 1.0) - 1.0) / (q + 1.0)
        }
    }
}

/// `I(θ(c))(s)`. The integral is entire in `s`.
pub fn tail_integral(c: &TestFunction, s: ComplexValue, tol: f64) -> Result<QuadratureResult> {
    kernel_integral(c, Kernel::Muntz(s), tol)
}

fn kernel_integral(c: &TestFunction, kernel: Kernel, tol: f64) -> Result<QuadratureResult> {
    let parts = flatten(c);
    let share = tol / parts.len().max(1) as f64;
    let mut total = QuadratureResult::exact(ComplexValue::new(0.0, 0.0));
    for p in &parts {
        let r = part_integral(&p.base, p.dilation, kernel, share / p.alpha.abs())?;
        total = total.plus(r.scale(ComplexValue::new(p.alpha, 0.0)));
    }
    Ok(total)
}

/// `∫₁^∞ kernel(x) θ(base)(a x) dx`.
fn part_integral(
    base: &TestFunction,
    a: f64,
    kernel: Kernel,
    tol: f64,
) -> Result<QuadratureResult> {
    let zero = ComplexValue::new(0.0, 0.0);
    let q = kernel.growth();
    let (cutoff, tail) = match (base.repr(), base.tail(), kernel) {
        (Repr::FourierImage(img), _, Kernel::Muntz(s)) if img.of.jets().is_some() => {
            let j = img.of.jets().expect("checked");
            let m = JET_ORDER;
            // In u = a x: |θ(u) − lattice(u)| ≤ lattice_tail_bound(u, m, 0), integrated
            // against 2(u/a)^q du/a.
            let bound = |u: f64| {
                2.0 * j.lattice_tail_bound(u, m, 0) * u * (u / a).powf(q)
                    / (a * (m as f64 - q - 1.0))
            };
            // x^{−s} = a^{s} u^{−s},  x^{s−1} = a^{1−s} u^{s−1},  dx = du/a
            let at = |u: f64| {
                let mut value = zero;
                let mut err = bound(u);
                for (e, k) in [(-s, (s - 1.0) * a.ln()), (s - 1.0, -s * a.ln())] {
                    let (v, r) = j.lattice_power_tail(e, u, m, tol / 8.0);
                    let k = k.exp();
                    value += k * v;
                    err += k.norm() * r;
                }
                (value, err)
            };
            let mut u = a.max(2.0);
            let (mut value, mut err) = at(u);
            while err > tol / 2.0 {
                if u / a > MAX_CUTOFF {
                    return Err(Error::ToleranceNotMet {
                        achieved: err,
                        requested: tol / 2.0,
                    });
                }
                u *= 1.25;
                (value, err) = at(u);
            }
            (u / a, QuadratureResult::new(value, err, 0))
        }
        (_, Tail::Compact(l), _) => ((l / a).max(1.0), QuadratureResult::exact(zero)),
        (_, Tail::Exponential { coeff, rate }, _) => {
            // |θ(ax)| ≤ C e^{−rax}/(1 − e^{−ra}) for x ≥ 1
            let lam = rate * a;
            let front = coeff / -(-lam).exp_m1();
            let bound = |x: f64| {
                2.0 * front * x.powf(q) * (-lam * x).exp() / (lam - q.max(0.0) / x).max(lam / 2.0)
            };
            let mut x = (2.0 * q.max(0.0) / lam).max(1.0);
            while bound(x) > tol / 4.0 {
                x *= 1.25;
            }
            (x, QuadratureResult::new(zero, bound(x), 0))
        }
        (_, Tail::Power { coeff, exponent: p }, _) => {
            // |θ(ax)| ≤ C ζ(p) (ax)^{−p} once ax ≥ 1
            if q >= p - 1.0 {
                return Err(Error::Domain(format!(
                    "lattice sum decays like x^-{p}, too slowly for this kernel"
                )));
            }
            let zp = 1.0 + 1.0 / (p - 1.0);
            let k = 2.0 * coeff * zp * a.powf(-p) / (p - q - 1.0);
            let x = ((k / (tol / 4.0)).powf(1.0 / (p - q - 1.0)))
                .max(1.0)
                .max(1.0 / a);
            if x > MAX_CUTOFF {
                return Err(Error::ToleranceNotMet {
                    achieved: k * MAX_CUTOFF.powf(q + 1.0 - p),
                    requested: tol,
                });
            }
            (x, QuadratureResult::new(zero, k * x.powf(q + 1.0 - p), 0))
        }
    };
    if cutoff <= 1.0 {
        return Ok(tail);
    }
    // theta sums carry roundoff near 1e-16 per term, so much tighter targets are pointless
    let inner_tol = (tol / (4.0 * kernel.l1_to(cutoff))).max(1e-13);
    let mut bps = Vec::new();
    for b in base.breakpoints() {
        // θ(base)(ax) has kinks where n a x = b
        let mut n = 1.0;
        while b / (n * a) > 1.0 {
            if b / (n * a) < cutoff {
                bps.push(b / (n * a));
            }
            n += 1.0;
            if n > 1e4 {
                break;
            }
        }
    }
    if let Kernel::LinearPhase(s) = kernel {
        // half periods of sin(tx)
        let h = PI / s.im.abs().max(1e-300);
        let count = ((cutoff - 1.0) / h).floor().min(5000.0) as usize;
        bps.extend((1..=count).map(|k| 1.0 + k as f64 * h));
    }
    let failure = Cell::new(None);
    let worst = Cell::new(inner_tol);
    let body = Quadrature::new(tol / 2.0)
        .with_breakpoints(bps)
        .with_max_intervals(20_000)
        .integrate(
            |x| match theta_transform(base, a * x, inner_tol).or_else(|e| match e {
                // accept the roundoff floor of the lattice sum and carry it in the bound
                Error::ToleranceNotMet { achieved, .. } if achieved < 1e3 * inner_tol => {
                    let t = theta_transform(base, a * x, 2.0 * achieved)?;
                    worst.set(worst.get().max(t.err_bound));
                    Ok(t)
                }
                e => Err(e),
            }) {
                Ok(t) => kernel.at(x) * t.re(),
                Err(e) => {
                    failure.set(Some(e));
                    ComplexValue::new(f64::NAN, 0.0)
                }
            },
            1.0,
            Upper::Finite(cutoff),
        );
    if let Some(e) = failure.take() {
        return Err(e);
    }
    let body = body?;
    Ok(QuadratureResult::new(
        body.value + tail.value,
        body.err_bound + tail.err_bound + worst.get() * kernel.l1_to(cutoff),
        body.evaluations + tail.evaluations,
    ))
}

/// Both sides of `M(c)(s)ζ(s) = pole(s) + I(θ(c))(s)`.
pub fn muntz_sides(
    c: &TestFunction,
    s: ComplexValue,
    pole: PoleTerm,
    tol: f64,
) -> Result<(QuadratureResult, QuadratureResult)> {
    guard_pole(s)?;
    let (lo, hi) = mellin_strip(c);
    let hi = hi.min(2.0);
    if !(s.re > lo && s.re < hi) {
        return Err(Error::OutOfStrip { re: s.re, lo, hi });
    }
    let z = zeta_reference(s)?;
    let m = mellin(c, s, tol / (4.0 * z.norm().max(1.0)))?;
    let lhs = m.scale(z);
    let rhs = tail_integral(c, s, tol / 4.0)?;
    let rhs = QuadratureResult::new(
        rhs.value + pole.value(c.eval(0.0), s),
        rhs.err_bound,
        rhs.evaluations,
    );
    Ok((lhs, rhs))
}

/// `|lhs − rhs|` of the Müntz relation, with the combined error bound.
pub fn muntz_residual(
    c: &TestFunction,
    s: ComplexValue,
    pole: PoleTerm,
    tol: f64,
) -> Result<QuadratureResult> {
    let (lhs, rhs) = muntz_sides(c, s, pole, tol)?;
    Ok(QuadratureResult::real(
        (lhs.value - rhs.value).norm(),
        lhs.err_bound + rhs.err_bound,
        lhs.evaluations + rhs.evaluations,
    ))
}

/// `ζ(s) = pole(s)/M(G)(s) + I(θ(G))(s)/M(G)(s)`, valid for every
/// `s ∉ {0, 1}`.
pub fn zeta_via_theta_quotient(
    s: ComplexValue,
    pole: PoleTerm,
    tol: f64,
) -> Result<QuadratureResult> {
    if s.norm() < POLE_GUARD || (s - 1.0).norm() < POLE_GUARD {
        return Err(Error::PoleAtZeroOrOne);
    }
    let g = TestFunction::gaussian();
    let mg = if s.re > 0.0 {
        mellin(&g, s, tol / 4.0)?
    } else {
        // outside the strip, the closed form ½π^{−s/2}Γ(s/2)
        let v = 0.5 * (-s / 2.0 * PI.ln()).exp() * gamma(s / 2.0)?;
        QuadratureResult::new(v, 4.0 * f64::EPSILON * v.norm(), 0)
    };
    if mg.value.norm() == 0.0 {
        return Err(Error::PoleAtNonPositiveInteger(s.re));
    }
    let i = tail_integral(&g, s, tol * mg.value.norm() / 2.0)?;
    let num = i.value + pole.value(1.0, s);
    let value = num / mg.value;
    let err = i.err_bound / mg.value.norm() + value.norm() * mg.err_bound / mg.value.norm();
    Ok(QuadratureResult::new(
        value,
        err,
        i.evaluations + mg.evaluations,
    ))
}

/// The pieces of `Im[M(c)(s)ζ(s)]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ImDecomposition {
    /// `Im(M(c)(s) ζ(s))` with the reference zeta.
    pub direct: f64,
    /// `+ζ_t(s)/|s(s−1)|²`.
    pub trivial_term_stated: f64,
    /// `−c(0)ζ_t(s)/(2|s(s−1)|²)`, the imaginary part of the polar term.
    pub trivial_term_derived: f64,
    /// `∫₁^∞ (x^{σ−1} − x^{−σ}) θ(c)(x) sin(t x) dx`.
    pub oscillatory_stated: f64,
    /// `∫₁^∞ (x^{σ−1} − x^{−σ}) θ(c)(x) sin(t ln x) dx = Im I(θ(c))(s)`.
    pub oscillatory_derived: f64,
    pub err_bound: f64,
}

impl ImDecomposition {
    pub fn derived_sum(&self) -> f64 {
        self.trivial_term_derived + self.oscillatory_derived
    }

    pub fn stated_sum(&self) -> f64 {
        self.trivial_term_stated + self.oscillatory_stated
    }
}

pub fn im_decomposition(c: &TestFunction, s: ComplexValue, tol: f64) -> Result<ImDecomposition> {
    guard_pole(s)?;
    let (lo, hi) = mellin_strip(c);
    let hi = hi.min(2.0);
    if !(s.re > lo && s.re < hi) {
        return Err(Error::OutOfStrip { re: s.re, lo, hi });
    }
    if s.im == 0.0 {
        return Ok(ImDecomposition {
            direct: 0.0,
            trivial_term_stated: 0.0,
            trivial_term_derived: 0.0,
            oscillatory_stated: 0.0,
            oscillatory_derived: 0.0,
            err_bound: 0.0,
        });
    }
    let z = zeta_reference(s)?;
    let m = mellin(c, s, tol / (4.0 * z.norm().max(1.0)))?;
    let den = (s * (s - 1.0)).norm_sqr();
    let zt = trivial_zeta(s);
    let derived = tail_integral(c, s, tol / 4.0)?;
    let stated = kernel_integral(c, Kernel::LinearPhase(s), tol / 4.0)?;
    Ok(ImDecomposition {
        direct: (m.value * z).im,
        trivial_term_stated: zt / den,
        trivial_term_derived: -c.eval(0.0) * zt / (2.0 * den),
        oscillatory_stated: stated.re(),
        oscillatory_derived: derived.value.im,
        err_bound: m.err_bound * z.norm() + derived.err_bound + stated.err_bound,
    })
}

/// `M(θ(c))(s)` for `1 < Re s < 2`, summed term by term from
/// `M(c(n·))(s)`; the terms beyond `N` are `M(c)(s)Σ_{n>N} n^{−s}`, with the
/// sum taken by Euler–Maclaurin.
pub fn mellin_of_theta(c: &TestFunction, s: ComplexValue, tol: f64) -> Result<QuadratureResult> {
    if !(s.re > 1.0 && s.re < 2.0) {
        return Err(Error::OutOfStrip {
            re: s.re,
            lo: 1.0,
            hi: 2.0,
        });
    }
    const N: usize = 40;
    let share = tol / (2.0 * N as f64);
    let mut total = QuadratureResult::exact(ComplexValue::new(0.0, 0.0));
    for n in 1..=N {
        let cn = TestFunction::dilated(n as f64, c)?;
        total = total.plus(mellin(&cn, s, share)?);
    }
    let m1 = mellin(c, s, tol / 4.0)?;
    let (tail, tail_err) = power_sum_tail(s, N);
    Ok(QuadratureResult::new(
        total.value + m1.value * tail,
        total.err_bound + m1.err_bound * tail.norm() + m1.value.norm() * tail_err,
        total.evaluations + m1.evaluations,
    ))
}

/// `Σ_{n>N} n^{−s}` by Euler–Maclaurin with six Bernoulli corrections.
fn power_sum_tail(s: ComplexValue, n: usize) -> (ComplexValue, f64) {
    const B2K: [f64; 7] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
    ];
    let x = n as f64;
    let pow = |e: ComplexValue| (e * x.ln()).exp();
    // Σ_{n>N} = ∫_N^∞ − f(N)/2 − Σ B_{2k}/(2k)! f^{(2k−1)}(N)
    let mut acc = pow(1.0 - s) / (s - 1.0) - pow(-s) / 2.0;
    let mut rising = s; // s(s+1)…(s+2k−2)
    let mut fact = 2.0;
    let mut last = ComplexValue::new(0.0, 0.0);
    for (k, b) in B2K.iter().take(6).enumerate() {
        let k = k + 1;
        // f^{(2k−1)}(N) = −rising · N^{−s−2k+1}
        let d = -rising * pow(-s - (2 * k - 1) as f64);
        last = b / fact * d;
        acc -= last;
        rising *= (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        fact *= ((2 * k + 1) * (2 * k + 2)) as f64;
    }
    (acc, 2.0 * last.norm())
}
