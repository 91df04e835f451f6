//! Convergence acceleration for alternating series (Cohen, Rodriguez Villegas
//! and Zagier, algorithm 1).

use super::{ComplexValue, QuadratureResult};
use crate::{Error, Result};

const MAX_TERMS: usize = 344;

/// Sum of `Σ_k t_k` where `t_k = (−1)^k a_k` and `a_k` is (close to) a
/// completely monotone sequence.
///
/// The number of terms grows in steps of 8 until two successive estimates
/// agree within `tol`; the last difference is reported as the error bound.
pub fn accelerate_alternating<F>(term: F, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(usize) -> ComplexValue,
{
    let mut terms: Vec<ComplexValue> = Vec::new();
    let mut prev: Option<ComplexValue> = None;
    let mut last_diff = f64::INFINITY;
    let mut hits = 0;
    let mut n = 8;
    while n <= MAX_TERMS {
        while terms.len() < n {
            let k = terms.len();
            let t = term(k);
            if !(t.re.is_finite() && t.im.is_finite()) {
                return Err(Error::NonFinite(format!("series term {k} = {t}")));
            }
            terms.push(if k % 2 == 0 { t } else { -t });
        }
        let s = cvz(&terms[..n]);
        if let Some(p) = prev {
            last_diff = (s - p).norm();
            if last_diff <= tol {
                hits += 1;
                if hits >= 2 {
                    return Ok(QuadratureResult::new(s, last_diff, n));
                }
            } else {
                hits = 0;
            }
        }
        prev = Some(s);
        n += 8;
    }
    Err(Error::NoConvergence {
        last_difference: last_diff,
    })
}

fn cvz(a: &[ComplexValue]) -> ComplexValue {
    let n = a.len() as f64;
    let mut d = (3.0 + 8f64.sqrt()).powf(n);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut c = -d;
    let mut s = ComplexValue::new(0.0, 0.0);
    for (k, ak) in a.iter().enumerate() {
        let kf = k as f64;
        c = b - c;
        s += ak * c;
        b *= (kf + n) * (kf - n) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn real(f: impl Fn(usize) -> f64) -> impl Fn(usize) -> ComplexValue {
        move |k| ComplexValue::new(f(k), 0.0)
    }

    #[test]
    fn log_two() {
        let sign = |k: usize| if k % 2 == 0 { 1.0 } else { -1.0 };
        let r = accelerate_alternating(real(|k| sign(k) / (k as f64 + 1.0)), 1e-14).unwrap();
        assert!((r.re() - 2f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn eta_two() {
        let sign = |k: usize| if k % 2 == 0 { 1.0 } else { -1.0 };
        let r =
            accelerate_alternating(real(|k| sign(k) / ((k as f64 + 1.0).powi(2))), 1e-14).unwrap();
        assert!((r.re() - PI * PI / 12.0).abs() < 1e-14);
    }

    #[test]
    fn eta_half() {
        let sign = |k: usize| if k % 2 == 0 { 1.0 } else { -1.0 };
        let r = accelerate_alternating(real(|k| sign(k) / (k as f64 + 1.0).sqrt()), 1e-13).unwrap();
        assert!((r.re() - 0.604_898_643_421_630_4).abs() < 1e-13);
    }

    #[test]
    fn divergent_growth_is_reported() {
        let sign = |k: usize| if k % 2 == 0 { 1.0 } else { -1.0 };
        let r = accelerate_alternating(real(|k| sign(k) * 10f64.powi(k as i32)), 1e-10);
        assert!(matches!(
            r,
            Err(Error::NoConvergence { .. }) | Err(Error::NonFinite(_))
        ));
    }
}
