//! Sign-change scan of ζ* on the critical line, and the Chebyshev sum
//! inequality.

use serde::{Deserialize, Serialize};

use crate::reference::completed_zeta;
use crate::{ComplexValue, Error, Result};

/// Bisection stops once the bracket is shorter than this.
const BRACKET: f64 = 1e-6;

fn z_star(t: f64) -> Result<f64> {
    Ok(completed_zeta(ComplexValue::new(0.5, t))?.re)
}

/// Ordinates in `[t_lo, t_hi]` where `ζ*(1/2 + it)` changes sign, refined by
/// bisection.
pub fn critical_zero_scan(t_lo: f64, t_hi: f64, step: f64) -> Result<Vec<f64>> {
    if !(0.0 <= t_lo && t_lo < t_hi && t_hi <= 50.0) || !(step > 0.0) {
        return Err(Error::Domain(format!(
            "zero scan needs 0 ≤ t_lo < t_hi ≤ 50 and step > 0, got [{t_lo}, {t_hi}] step {step}"
        )));
    }
    let n = ((t_hi - t_lo) / step).ceil() as usize;
    let mut zeros = Vec::new();
    let mut a = t_lo;
    let mut fa = z_star(a)?;
    for k in 1..=n {
        let b = (t_lo + k as f64 * step).min(t_hi);
        let fb = z_star(b)?;
        if fa == 0.0 {
            zeros.push(a);
        } else if fa * fb < 0.0 {
            zeros.push(bisect(a, b, fa)?);
        }
        a = b;
        fa = fb;
    }
    if fa == 0.0 {
        zeros.push(a);
    }
    Ok(zeros)
}

fn bisect(mut a: f64, mut b: f64, mut fa: f64) -> Result<f64> {
    while b - a > BRACKET {
        let m = 0.5 * (a + b);
        let fm = z_star(m)?;
        if fm == 0.0 {
            return Ok(m);
        }
        if fa * fm < 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    Ok(0.5 * (a + b))
}

/// Outcome of comparing `(1/N)Σaᵢbᵢ` with `(1/N Σaᵢ)(1/N Σbᵢ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChebyshevCheck {
    pub holds: bool,
    /// Left side minus right side.
    pub gap: f64,
}

pub fn chebyshev_sum_check(a: &[f64], b: &[f64]) -> Result<ChebyshevCheck> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    let n = a.len() as f64;
    let lhs = a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>() / n;
    let rhs = (a.iter().sum::<f64>() / n) * (b.iter().sum::<f64>() / n);
    let gap = lhs - rhs;
    Ok(ChebyshevCheck {
        holds: gap >= 0.0,
        gap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_zeros() {
        assert!(critical_zero_scan(0.0, 10.0, 0.1).unwrap().is_empty());
        let z = critical_zero_scan(10.0, 20.0, 0.1).unwrap();
        assert_eq!(z.len(), 1);
        assert!((z[0] - 14.134_725).abs() < 1e-4);
        let z = critical_zero_scan(0.0, 30.0, 0.1).unwrap();
        let expected = [
            14.134_725_141_734_695,
            21.022_039_638_771_556,
            25.010_857_580_145_689,
        ];
        assert_eq!(z.len(), 3);
        for (a, b) in z.iter().zip(expected) {
            assert!((a - b).abs() < 1e-6);
        }
        assert!(critical_zero_scan(0.0, 60.0, 0.1).is_err());
    }

    #[test]
    fn chebyshev_examples() {
        let r = chebyshev_sum_check(&[1.0, 2.0], &[1.0, 2.0]).unwrap();
        assert!(r.holds && (r.gap - 0.25).abs() < 1e-15);
        assert!(!chebyshev_sum_check(&[1.0, 2.0], &[2.0, 1.0]).unwrap().holds);
        assert_eq!(
            chebyshev_sum_check(&[1.0], &[1.0, 2.0]).unwrap_err(),
            Error::LengthMismatch(1, 2)
        );
    }
}
