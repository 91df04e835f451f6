//! Trusted evaluators of Γ, ζ and the completed zeta, used as the oracle side
//! of every comparison.

use std::f64::consts::{LN_2, PI};

use crate::numerics::{accelerate_alternating, ComplexValue};
use crate::{Error, Result};

/// Lanczos coefficients for `g = 7`, `n = 9`.
///
/// These are Godfrey's values. To regenerate them, evaluate the Lanczos
/// series `Γ(z+1) = √(2π)(z+g+½)^{z+½}e^{−(z+g+½)}A_g(z)` at the points
/// `z = 0, 1, …, n−1` in high precision, solve the resulting linear system
/// for the partial-fraction coefficients of `A_g(z) = c₀ + Σ c_k/(z+k)`,
/// and round to double precision. The relative error for `Re z ≥ ½` is below
/// `2·10⁻¹⁵` along the real axis.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Even-index Bernoulli numbers `B₂, B₄, …, B₃₀`.
const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

const POLE_EPS: f64 = 1e-14;

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn is_nonpositive_integer(s: ComplexValue) -> bool {
    s.re <= 0.5 && s.im.abs() < POLE_EPS && (s.re - s.re.round()).abs() < POLE_EPS
}

/// `ln Γ(s)` on the principal sheet of the Lanczos form, valid for `Re s ≥ ½`.
fn ln_gamma_right(s: ComplexValue) -> ComplexValue {
    let z = s - 1.0;
    let mut acc = c(LANCZOS[0], 0.0);
    for (k, &coef) in LANCZOS.iter().enumerate().skip(1) {
        acc += coef / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

/// Complex gamma function.
pub fn gamma(s: ComplexValue) -> Result<ComplexValue> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::NonFinite(format!("gamma argument {s}")));
    }
    if is_nonpositive_integer(s) {
        return Err(Error::PoleAtNonPositiveInteger(s.re.round()));
    }
    let value = if s.re < 0.5 {
        // Γ(s)Γ(1−s) = π / sin(πs)
        PI / ((PI * s).sin() * ln_gamma_right(1.0 - s).exp())
    } else {
        ln_gamma_right(s).exp()
    };
    crate::numerics::ensure_finite(value, "gamma")
}

/// `ln Γ(s)` for `Re s ≥ ½` (no branch bookkeeping; callers exponentiate).
pub fn ln_gamma(s: ComplexValue) -> Result<ComplexValue> {
    if s.re < 0.5 {
        return gamma(s).map(|g| g.ln());
    }
    Ok(ln_gamma_right(s))
}

/// `e^z − 1` without cancellation for small `|z|`.
fn exp_m1(z: ComplexValue) -> ComplexValue {
    if z.norm() < 1e-2 {
        let mut term = z;
        let mut sum = z;
        for k in 2..12 {
            term *= z / k as f64;
            sum += term;
        }
        sum
    } else {
        z.exp() - 1.0
    }
}

/// Distance from `s` to the nearest spurious zero `1 + 2πik/ln 2`, `k ≠ 0`,
/// of the eta-series denominator.
fn near_spurious_point(s: ComplexValue) -> bool {
    let k = (s.im * LN_2 / (2.0 * PI)).round();
    k != 0.0 && (s - c(1.0, 2.0 * PI * k / LN_2)).norm() < 1e-3
}

/// Riemann zeta for `Re s > 0`, `s ≠ 1`.
///
/// Uses the accelerated alternating eta series divided by `1 − 2^{1−s}`, and
/// Euler–Maclaurin summation near the removable zeros of that denominator.
pub fn zeta_reference(s: ComplexValue) -> Result<ComplexValue> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::NonFinite(format!("zeta argument {s}")));
    }
    if s.re <= 0.0 {
        return Err(Error::OutsideValidityStrip { re: s.re, im: s.im });
    }
    if (s - 1.0).norm() < POLE_EPS {
        return Err(Error::PoleAtOne);
    }
    if near_spurious_point(s) {
        return zeta_euler_maclaurin(s);
    }
    let eta = eta(s)?;
    // 1 − 2^{1−s} = −expm1((1−s) ln 2)
    let denom = -exp_m1((1.0 - s) * LN_2);
    crate::numerics::ensure_finite(eta / denom, "zeta")
}

/// Dirichlet eta `Σ_{n≥1} (−1)^{n−1} n^{−s}` for `Re s > 0`.
pub fn eta(s: ComplexValue) -> Result<ComplexValue> {
    if s.re <= 0.0 {
        return Err(Error::OutsideValidityStrip { re: s.re, im: s.im });
    }
    let term = |k: usize| {
        let t = (-s * ((k + 1) as f64).ln()).exp();
        if k % 2 == 0 {
            t
        } else {
            -t
        }
    };
    // Roundoff can stall the tighter target at large |Im s|.
    let r = accelerate_alternating(term, 1e-15).or_else(|_| accelerate_alternating(term, 1e-13))?;
    Ok(r.value)
}

/// Riemann zeta by Euler–Maclaurin summation with `N = 20 + |Im s|` terms and
/// Bernoulli corrections through `B₃₀`. Valid for `Re s > −29`, `s ≠ 1`.
pub fn zeta_euler_maclaurin(s: ComplexValue) -> Result<ComplexValue> {
    if (s - 1.0).norm() < POLE_EPS {
        return Err(Error::PoleAtOne);
    }
    let n = (20.0 + s.im.abs()).ceil() as usize;
    let nf = n as f64;
    let mut sum = c(0.0, 0.0);
    for k in 1..n {
        sum += (-s * (k as f64).ln()).exp();
    }
    let n_pow = (-s * nf.ln()).exp();
    sum += n_pow * nf / (s - 1.0) + 0.5 * n_pow;
    // Σ B_{2k}/(2k)! · s(s+1)…(s+2k−2) · N^{−s−2k+1}
    let mut rising = s;
    let mut fact = 2.0;
    let mut pow = n_pow / nf;
    for (j, &b) in BERNOULLI_EVEN.iter().enumerate() {
        let k = j + 1;
        sum += b / fact * rising * pow;
        let two_k = 2.0 * k as f64;
        rising *= (s + two_k - 1.0) * (s + two_k);
        fact *= (two_k + 1.0) * (two_k + 2.0);
        pow /= nf * nf;
    }
    crate::numerics::ensure_finite(sum, "zeta (Euler-Maclaurin)")
}

/// Completed zeta `ζ*(s) = π^{−s/2} Γ(s/2) ζ(s)`, extended to `Re s ≤ 0` by
/// `ζ*(s) = ζ*(1−s)`.
pub fn completed_zeta(s: ComplexValue) -> Result<ComplexValue> {
    if s.norm() < POLE_EPS || (s - 1.0).norm() < POLE_EPS {
        return Err(Error::PoleAtZeroOrOne);
    }
    if s.re <= 0.0 {
        return completed_zeta(1.0 - s);
    }
    let half = s * 0.5;
    let gamma_part = (-half * PI.ln() + ln_gamma(half)?).exp();
    let z = zeta_reference(s)?;
    crate::numerics::ensure_finite(gamma_part * z, "completed zeta")
}

/// Zeta on the whole plane minus the pole: the reference evaluator for
/// `Re s > 0` and the functional equation through [`completed_zeta`] otherwise.
pub fn zeta_anywhere(s: ComplexValue) -> Result<ComplexValue> {
    if s.re > 0.0 {
        return zeta_reference(s);
    }
    if s.norm() < POLE_EPS {
        return Ok(c(-0.5, 0.0));
    }
    if is_nonpositive_integer(s * 0.5) {
        // Trivial zeros at negative even integers.
        return Ok(c(0.0, 0.0));
    }
    let half = s * 0.5;
    let star = completed_zeta(1.0 - s)?;
    let factor = (half * PI.ln()).exp() / gamma(half)?;
    crate::numerics::ensure_finite(star * factor, "zeta")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: ComplexValue, b: ComplexValue, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1.0)
    }

    #[test]
    fn gamma_known_values() {
        assert!(close(gamma(c(0.5, 0.0)).unwrap(), c(PI.sqrt(), 0.0), 1e-14));
        assert!(close(gamma(c(5.0, 0.0)).unwrap(), c(24.0, 0.0), 1e-13));
        assert!((gamma(c(0.25, 0.0)).unwrap().re - 3.625_609_908_221_908_3).abs() < 1e-13);
        assert!(close(
            gamma(c(-0.5, 0.0)).unwrap(),
            c(-2.0 * PI.sqrt(), 0.0),
            1e-13
        ));
    }

    #[test]
    fn gamma_poles() {
        assert_eq!(
            gamma(c(0.0, 0.0)),
            Err(Error::PoleAtNonPositiveInteger(0.0))
        );
        assert_eq!(
            gamma(c(-3.0, 0.0)),
            Err(Error::PoleAtNonPositiveInteger(-3.0))
        );
        assert!(gamma(c(-3.0, 1e-6)).is_ok());
    }

    #[test]
    fn zeta_known_values() {
        let z2 = zeta_reference(c(2.0, 0.0)).unwrap();
        assert!((z2.re - PI * PI / 6.0).abs() < 1e-13);
        assert!((zeta_reference(c(3.0, 0.0)).unwrap().re - 1.202_056_903_159_594_3).abs() < 1e-13);
        assert!((zeta_reference(c(0.5, 0.0)).unwrap().re + 1.460_354_508_809_586_8).abs() < 1e-12);
        let z = zeta_reference(c(0.25, 5.0)).unwrap();
        assert!(close(
            z,
            c(0.668_838_632_468_093_2, 0.260_086_654_925_214_2),
            1e-12
        ));
        assert!(
            zeta_reference(c(0.5, 14.134_725_141_734_694))
                .unwrap()
                .norm()
                < 1e-10
        );
    }

    #[test]
    fn zeta_errors() {
        assert_eq!(zeta_reference(c(1.0, 0.0)), Err(Error::PoleAtOne));
        assert!(matches!(
            zeta_reference(c(0.0, 3.0)),
            Err(Error::OutsideValidityStrip { .. })
        ));
        assert!(matches!(
            zeta_reference(c(-1.0, 0.0)),
            Err(Error::OutsideValidityStrip { .. })
        ));
    }

    #[test]
    fn spurious_points_are_removable() {
        let p = c(1.0, 2.0 * PI / LN_2);
        let at = zeta_reference(p).unwrap();
        let off = zeta_reference(p + c(0.0, 0.01)).unwrap();
        assert!((at - off).norm() < 0.05);
        let em = zeta_euler_maclaurin(p + c(0.0, 0.01)).unwrap();
        assert!(close(em, off, 1e-11));
    }

    #[test]
    fn euler_maclaurin_matches_eta() {
        for s in [c(0.3, 1.0), c(2.5, -7.0), c(0.5, 40.0), c(30.0, 3.0)] {
            let a = zeta_reference(s).unwrap();
            let b = zeta_euler_maclaurin(s).unwrap();
            assert!(close(a, b, 1e-11), "{s}: {a} vs {b}");
        }
    }

    #[test]
    fn completed_zeta_properties() {
        let s2 = completed_zeta(c(2.0, 0.0)).unwrap();
        assert!((s2.re - PI / 6.0).abs() < 1e-13);
        assert!(completed_zeta(c(0.5, 5.0)).unwrap().im.abs() < 1e-9);
        let a = completed_zeta(c(0.3, 2.0)).unwrap();
        let b = completed_zeta(c(0.7, -2.0)).unwrap();
        assert!(close(a, b, 1e-10));
        assert_eq!(completed_zeta(c(0.0, 0.0)), Err(Error::PoleAtZeroOrOne));
        assert_eq!(completed_zeta(c(1.0, 0.0)), Err(Error::PoleAtZeroOrOne));
    }

    #[test]
    fn zeta_left_half_plane() {
        assert!((zeta_anywhere(c(-1.0, 0.0)).unwrap().re + 1.0 / 12.0).abs() < 1e-12);
        assert_eq!(zeta_anywhere(c(-2.0, 0.0)).unwrap(), c(0.0, 0.0));
    }
}
