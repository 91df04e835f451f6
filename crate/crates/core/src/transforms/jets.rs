//! Boundary expansions of Fourier-cosine images.
//!
//! For `f` piecewise smooth on `[0, ∞)` with derivative jumps `Δ_b f^{(j)}` at
//! breakpoints `b` (the point `b = 0` counts, with `f^{(j)}(0−) := 0`),
//! repeated integration by parts gives
//!
//! ```text
//! f̂(y) = 2 Σ_{j<m} Σ_b w_{j,b} cos(ωb − πk/2) / ω^k + R_m(y),
//! ω = 2πy,  k = j + 1,  w_{j,b} = (−1)^{j+1} Δ_b f^{(j)},
//! |R_m(y)| ≤ 2‖f^{(m)}‖₁ / ω^m .
//! ```
//!
//! Summing the expansion over a lattice `y = nx`, `n ≥ 1`, gives closed forms
//! through Bernoulli polynomials:
//! `Σ_n 2 w cos(2πnxb − πk/2)/(2πnx)^k = −w x^{−k} B_k({xb}) / k!`.

use std::f64::consts::PI;

use super::function::{derivative_l1, gaussian_derivatives, Repr, TestFunction};
use crate::numerics::{integrate_adaptive, ComplexValue, TailCertificate, Upper};
use crate::Result;

/// Highest derivative order tracked.
pub const JET_ORDER: usize = 10;

#[derive(Debug, Clone)]
pub struct Jets {
    /// `(b, [Δ_b f^{(j)}; j < JET_ORDER])`.
    pub points: Vec<(f64, [f64; JET_ORDER])>,
    /// `‖f^{(k)}‖₁` over the smooth pieces, `k ≤ JET_ORDER`.
    pub deriv_l1: [f64; JET_ORDER + 1],
}

const BERNOULLI: [f64; JET_ORDER + 1] = [
    1.0,
    -0.5,
    1.0 / 6.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    1.0 / 42.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    5.0 / 66.0,
];

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

/// Bernoulli polynomial `B_k(u)`.
pub fn bernoulli_poly(k: usize, u: f64) -> f64 {
    (0..=k)
        .map(|i| binomial(k, i) * BERNOULLI[i] * u.powi((k - i) as i32))
        .sum()
}

/// Periodic Bernoulli function `B_k({u})`, with the Fourier-series midpoint
/// value `0` for `k = 1` at integers.
pub fn periodic_bernoulli(k: usize, u: f64) -> f64 {
    let frac = u - u.floor();
    if k == 1 && frac == 0.0 {
        return 0.0;
    }
    bernoulli_poly(k, frac)
}

/// `max_u |B_k({u})|`.
fn periodic_bernoulli_max(k: usize) -> f64 {
    match k {
        0 => 1.0,
        1 => 0.5,
        // 2 k! ζ(k) / (2π)^k with ζ(k) ≤ ζ(2) < 1.65
        _ => 2.0 * factorial(k) * 1.65 / (2.0 * PI).powi(k as i32),
    }
}

pub(crate) fn build(f: &TestFunction) -> Option<Jets> {
    let mut deriv_l1 = [0.0; JET_ORDER + 1];
    let points = match f.repr() {
        Repr::Gaussian => {
            let at0 = gaussian_derivatives(0.0);
            for (k, slot) in deriv_l1.iter_mut().enumerate() {
                *slot = derivative_l1(|t| gaussian_derivatives(t)[k], 9.0);
            }
            vec![(0.0, head(&at0))]
        }
        Repr::Triangle => {
            deriv_l1[0] = 0.5;
            deriv_l1[1] = 1.0;
            let mut at0 = [0.0; JET_ORDER];
            at0[0] = 1.0;
            at0[1] = -1.0;
            let mut at1 = [0.0; JET_ORDER];
            at1[1] = 1.0;
            vec![(0.0, at0), (1.0, at1)]
        }
        Repr::PeakTimesGaussian => {
            let d = |t: f64| {
                let g = gaussian_derivatives(t);
                let mut out = [0.0; JET_ORDER + 1];
                for k in 0..=JET_ORDER {
                    out[k] = (1.0 - t) * g[k] - if k > 0 { k as f64 * g[k - 1] } else { 0.0 };
                }
                out
            };
            for (k, slot) in deriv_l1.iter_mut().enumerate() {
                *slot = derivative_l1(|t| d(t)[k], 1.0);
            }
            let at1 = d(1.0).map(|v| -v);
            vec![(0.0, head(&d(0.0))), (1.0, head(&at1))]
        }
        Repr::ExpDecay => {
            deriv_l1 = [1.0; JET_ORDER + 1];
            let mut at0 = [0.0; JET_ORDER];
            for (j, slot) in at0.iter_mut().enumerate() {
                *slot = if j % 2 == 0 { 1.0 } else { -1.0 };
            }
            vec![(0.0, at0)]
        }
        Repr::Indicator01 => {
            deriv_l1[0] = 1.0;
            let mut at0 = [0.0; JET_ORDER];
            at0[0] = 1.0;
            let mut at1 = [0.0; JET_ORDER];
            at1[0] = -1.0;
            vec![(0.0, at0), (1.0, at1)]
        }
        Repr::SampledEven(_) | Repr::FourierImage(_) => return None,
        Repr::Scaled(a, g) => {
            let j = g.jets()?;
            deriv_l1 = j.deriv_l1.map(|v| v * a.abs());
            j.points
                .iter()
                .map(|(b, d)| (*b, d.map(|v| v * a)))
                .collect()
        }
        Repr::Sum(g, h) => {
            let (jg, jh) = (g.jets()?, h.jets()?);
            for k in 0..=JET_ORDER {
                deriv_l1[k] = jg.deriv_l1[k] + jh.deriv_l1[k];
            }
            let mut pts: Vec<(f64, [f64; JET_ORDER])> = jg.points.clone();
            for (b, d) in &jh.points {
                match pts.iter_mut().find(|(c, _)| c == b) {
                    Some((_, e)) => {
                        for j in 0..JET_ORDER {
                            e[j] += d[j];
                        }
                    }
                    None => pts.push((*b, *d)),
                }
            }
            pts.sort_by(|l, r| l.0.total_cmp(&r.0));
            pts
        }
        Repr::Dilated(a, g) => {
            let j = g.jets()?;
            for k in 0..=JET_ORDER {
                deriv_l1[k] = j.deriv_l1[k] * a.powi(k as i32 - 1);
            }
            j.points
                .iter()
                .map(|(b, d)| {
                    let mut e = *d;
                    for (k, v) in e.iter_mut().enumerate() {
                        *v *= a.powi(k as i32);
                    }
                    (b / a, e)
                })
                .collect()
        }
    };
    Some(Jets { points, deriv_l1 })
}

fn head(d: &[f64; JET_ORDER + 1]) -> [f64; JET_ORDER] {
    let mut out = [0.0; JET_ORDER];
    out.copy_from_slice(&d[..JET_ORDER]);
    out
}

/// `cos(φ − πk/2)` without rounding the quarter-period shift.
fn shifted_cos(phi: f64, k: usize) -> f64 {
    match k % 4 {
        0 => phi.cos(),
        1 => phi.sin(),
        2 => -phi.cos(),
        _ => -phi.sin(),
    }
}

impl Jets {
    fn weight(&self, j: usize, delta: f64) -> f64 {
        if j % 2 == 0 {
            -delta
        } else {
            delta
        }
    }

    /// Expansion of `f̂(y)` with `m` terms.
    pub fn expansion(&self, y: f64, m: usize) -> f64 {
        let omega = 2.0 * PI * y;
        let mut acc = 0.0;
        for (b, d) in &self.points {
            let phi = omega * b;
            let mut pow = omega;
            for j in 0..m.min(JET_ORDER) {
                let k = j + 1;
                let w = self.weight(j, d[j]);
                if w != 0.0 {
                    acc += 2.0 * w * shifted_cos(phi, k) / pow;
                }
                pow *= omega;
            }
        }
        acc
    }

    /// Bound on `|f̂(y) − expansion(y, m)|`.
    pub fn remainder_bound(&self, y: f64, m: usize) -> f64 {
        2.0 * self.deriv_l1[m] / (2.0 * PI * y).powi(m as i32)
    }

    /// `Σ_{n≥1} expansion(nx, m)` in closed form.
    pub fn lattice(&self, x: f64, m: usize) -> f64 {
        let mut acc = 0.0;
        for (b, d) in &self.points {
            let u = x * b;
            let mut xpow = x;
            for j in 0..m.min(JET_ORDER) {
                let k = j + 1;
                let w = self.weight(j, d[j]);
                if w != 0.0 {
                    acc -= w * periodic_bernoulli(k, u) / (xpow * factorial(k));
                }
                xpow *= x;
            }
        }
        acc
    }

    /// Magnitude scale of the lattice terms, for roundoff estimates.
    fn lattice_scale(&self, x: f64, m: usize) -> f64 {
        let mut acc = 0.0;
        for (_, d) in &self.points {
            for j in 0..m.min(JET_ORDER) {
                let k = j + 1;
                acc += d[j].abs() * periodic_bernoulli_max(k) / (x.powi(k as i32) * factorial(k));
            }
        }
        acc
    }

    /// Bound on `Σ_{n>N} |R_m(nx)|`.
    pub fn lattice_tail_bound(&self, x: f64, m: usize, n: usize) -> f64 {
        let base = 2.0 * self.deriv_l1[m] / (2.0 * PI * x).powi(m as i32);
        let tail = if n == 0 {
            1.0 + 1.0 / (m as f64 - 1.0)
        } else {
            (n as f64).powf(1.0 - m as f64) / (m as f64 - 1.0)
        };
        base * tail
    }

    /// Chooses the expansion order and the number of directly summed terms for
    /// a lattice sum at spacing `x` and target `tol`.
    pub fn lattice_plan(&self, x: f64, tol: f64, max_terms: usize) -> (usize, usize, f64) {
        let mut best: Option<(usize, usize, f64)> = None;
        for m in 2..=JET_ORDER {
            if !self.deriv_l1[m].is_finite() {
                continue;
            }
            let roundoff = 4.0 * f64::EPSILON * self.lattice_scale(x, m);
            // Smallest N with tail ≤ tol/2, found by doubling then bisection.
            let target = tol / 2.0;
            let mut hi = 1usize;
            while self.lattice_tail_bound(x, m, hi) > target && hi < max_terms {
                hi *= 2;
            }
            let hi = hi.min(max_terms);
            let mut lo = hi / 2;
            let mut n = hi;
            while lo + 1 < n {
                let mid = (lo + n) / 2;
                if self.lattice_tail_bound(x, m, mid) <= target {
                    n = mid;
                } else {
                    lo = mid;
                }
            }
            let err = self.lattice_tail_bound(x, m, n) + roundoff;
            let better = match best {
                None => true,
                Some((_, bn, be)) => {
                    let ok = err <= tol;
                    let bok = be <= tol;
                    (ok && !bok) || (ok == bok && (if ok { n < bn } else { err < be }))
                }
            };
            if better {
                best = Some((m, n, err));
            }
        }
        best.unwrap_or((2, max_terms, f64::INFINITY))
    }

    /// `∫_Y^∞ y^{s−1} expansion(y, m) dy`.
    pub fn mellin_tail(
        &self,
        s: ComplexValue,
        cutoff: f64,
        m: usize,
        tol: f64,
    ) -> Result<(ComplexValue, f64)> {
        let mut acc = ComplexValue::new(0.0, 0.0);
        let mut err = 0.0;
        let terms = self.points.len() * m;
        for (b, d) in &self.points {
            for j in 0..m.min(JET_ORDER) {
                let k = j + 1;
                let w = self.weight(j, d[j]);
                if w == 0.0 {
                    continue;
                }
                // 2cos(ωb − πk/2)/ω^k = Σ_± e^{±i(ωb − πk/2)} / ω^k
                let scale = w / (2.0 * PI).powi(k as i32);
                let a = s - 1.0 - k as f64;
                if *b == 0.0 {
                    // ∫_Y^∞ y^a dy = −Y^{a+1}/(a+1)
                    let v = -((a + 1.0) * cutoff.ln()).exp() / (a + 1.0);
                    acc += scale * 2.0 * shifted_cos(0.0, k) * v;
                    continue;
                }
                let kappa = 2.0 * PI * b;
                for sign in [1.0, -1.0] {
                    let phase = ComplexValue::from_polar(1.0, -sign * PI * k as f64 / 2.0);
                    let r =
                        oscillatory_power_tail(a, kappa, sign, cutoff, tol / (4.0 * terms as f64))?;
                    acc += scale * phase * r.0;
                    err += scale.abs() * r.1;
                }
            }
        }
        Ok((acc, err))
    }
}

impl Jets {
    /// `∫_U^∞ u^e lattice(u, m) du` for `Re e < 0`, term by term.
    pub fn lattice_power_tail(
        &self,
        e: ComplexValue,
        cutoff: f64,
        m: usize,
        tol: f64,
    ) -> (ComplexValue, f64) {
        let mut acc = ComplexValue::new(0.0, 0.0);
        let mut err = 0.0;
        let terms = (self.points.len() * m).max(1) as f64;
        for (b, d) in &self.points {
            for j in 0..m.min(JET_ORDER) {
                let k = j + 1;
                let w = self.weight(j, d[j]);
                if w == 0.0 {
                    continue;
                }
                let coef = -w / factorial(k);
                let a = e - k as f64;
                if *b == 0.0 {
                    let bk = periodic_bernoulli(k, 0.0);
                    acc += coef * bk * -((a + 1.0) * cutoff.ln()).exp() / (a + 1.0);
                    continue;
                }
                let (v, r) = periodic_power_tail(a, k, *b, cutoff, tol / terms);
                acc += coef * v;
                err += coef.abs() * r;
            }
        }
        (acc, err)
    }
}

/// `∫_Y^∞ y^a e^{±iκy} dy` for `Re a < 0`, by rotating onto `y = Y ± iu`.
pub fn oscillatory_power_tail(
    a: ComplexValue,
    kappa: f64,
    sign: f64,
    cutoff: f64,
    tol: f64,
) -> Result<(ComplexValue, f64)> {
    let i = ComplexValue::new(0.0, 1.0);
    let rot = i * sign;
    let coeff = cutoff.powf(a.re) * (a.im.abs() * PI / 2.0).exp();
    let cert = TailCertificate::Exponential { coeff, rate: kappa };
    let r = integrate_adaptive(
        |u| {
            let y = ComplexValue::new(cutoff, 0.0) + rot * u;
            (a * y.ln()).exp() * (-kappa * u).exp()
        },
        0.0,
        Upper::Infinite(cert),
        tol.max(1e-300),
    )?;
    let front = rot * (rot * kappa * cutoff).exp();
    Ok((front * r.value, r.err_bound))
}

/// `∫_X^∞ x^a B_k({bx}) dx` for `Re a < −1`, by repeated integration by parts
/// against the periodic Bernoulli antiderivatives.
pub fn periodic_power_tail(
    a: ComplexValue,
    k: usize,
    b: f64,
    cutoff: f64,
    tol: f64,
) -> (ComplexValue, f64) {
    // y = bx:  b^{−a−1} ∫_{bX}^∞ y^a P_k(y) dy
    let y0 = b * cutoff;
    let front = (-(a + 1.0) * b.ln()).exp();
    let mut acc = ComplexValue::new(0.0, 0.0);
    let mut coef = ComplexValue::new(1.0, 0.0);
    let mut expo = a;
    let mut order = k;
    // Bound on the integral still to be done.
    let mut err =
        periodic_bernoulli_max(k) * y0.powf(a.re + 1.0) / (-(a.re + 1.0)).max(f64::MIN_POSITIVE);
    if a.re >= -1.0 {
        err = f64::INFINITY;
    }
    for _ in 0..60 {
        if err <= tol {
            break;
        }
        // ∫ y^e P_q = −Y^e P_{q+1}(Y)/(q+1) − e/(q+1) ∫ y^{e−1} P_{q+1}
        let next = order + 1;
        let next_coef = coef * (-expo / next as f64);
        let rem = next_coef.norm() * periodic_bernoulli_max(next) * y0.powf(expo.re) / (-expo.re);
        if rem >= err {
            // asymptotic series has started to diverge
            break;
        }
        let boundary = -(expo * y0.ln()).exp() * bernoulli_general(next, y0) / next as f64;
        acc += coef * boundary;
        coef = next_coef;
        expo -= 1.0;
        order = next;
        err = rem;
    }
    (front * acc, front.norm() * err)
}

fn bernoulli_general(k: usize, u: f64) -> f64 {
    if k <= JET_ORDER {
        return periodic_bernoulli(k, u);
    }
    // Fourier series for k ≥ 2: B_k({u}) = −2 k! Σ cos(2πnu − πk/2)/(2πn)^k
    let frac = u - u.floor();
    let mut acc = 0.0;
    for n in 1..=64 {
        let w = 2.0 * PI * n as f64;
        acc += shifted_cos(w * frac, k) / w.powi(k as i32);
    }
    -2.0 * factorial(k) * acc
}
