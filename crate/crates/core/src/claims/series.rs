//! The series representations whose convergence the harness tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::fixed::{zeta_even, Fixed};
use crate::numerics::ComplexSum;
use crate::{ComplexValue, Error, Result};

/// `Σ_{n≥0} (−π)ⁿ s(s−1) / (2·n!(s+2n)(s+2n+1))` with a bound on the
/// neglected terms.
pub fn refinement_series(s: ComplexValue, tol: f64) -> Result<(ComplexValue, f64)> {
    let q = s * (s - 1.0);
    let mut sum = ComplexSum::new();
    let mut coef = 1.0; // (−π)ⁿ/n!
    for n in 0..400usize {
        let nf = n as f64;
        let den = (s + 2.0 * nf) * (s + 2.0 * nf + 1.0);
        if den.norm() == 0.0 {
            return Err(Error::PoleAtNonPositiveInteger(-2.0 * nf));
        }
        sum.add(coef * q / (2.0 * den));
        coef *= -std::f64::consts::PI / (nf + 1.0);
        // beyond n, |terms| fall at least geometrically with ratio π/(n+2) once it is < ½
        if nf + 2.0 > 2.0 * std::f64::consts::PI {
            let next = coef.abs() * q.norm() / (2.0 * (2.0 * nf + 2.0 + s.re).powi(2).max(1.0));
            let ratio = std::f64::consts::PI / (nf + 2.0);
            let tail = next / (1.0 - ratio);
            if tail < tol * 1e-3 {
                return Ok((sum.value(), tail + 64.0 * f64::EPSILON * q.norm()));
            }
        }
    }
    Err(Error::NoConvergence {
        last_difference: coef.abs(),
    })
}

/// Inner sum of the double series at fixed `n`,
/// `Σ_j (−πn²)^j/j! · (4j+1)/|(2j+s)(2j+1−s)|²`, in fixed point with at
/// least `⌈1.45·πn² + 64⌉` fractional bits, and its arithmetic error bound.
pub fn imzeta_inner(n: u32, s: ComplexValue, precision_bits: u32) -> (f64, f64) {
    let a_f = std::f64::consts::PI * (n as f64).powi(2);
    let bits = precision_bits.max((1.45 * a_f + 64.0).ceil() as u32);
    let fx = Fixed::new(bits);
    let a = fx.pi() * BigInt::from(n) * BigInt::from(n);
    let sigma = BigRational::from_float(s.re).expect("finite");
    let t2 = {
        let t = BigRational::from_float(s.im).expect("finite");
        &t * &t
    };
    let mut term = fx.one(); // (−a)^j/j!
    let mut acc = BigInt::zero();
    let mut largest = 1.0f64;
    let mut j: u64 = 0;
    loop {
        let jr = BigRational::from_integer(BigInt::from(2 * j));
        let u = &jr + &sigma;
        let v = &jr + BigRational::from_integer(1.into()) - &sigma;
        let den = (&u * &u + &t2) * (&v * &v + &t2);
        if den.is_zero() {
            return (f64::NAN, f64::INFINITY);
        }
        let r = BigRational::from_integer(BigInt::from(4 * j + 1)) / den;
        acc += fx.mul(&term, &fx.from_ratio(&r));
        j += 1;
        term = -fx.mul(&term, &a) / BigInt::from(j);
        largest = largest.max(fx.to_f64(&term).abs());
        if j as f64 > 3.0 * a_f + 20.0 && term.abs() <= BigInt::from(1) {
            break;
        }
    }
    // each step rounds once in the product and once in the quotient
    let err = 8.0 * j as f64 * (1.0 + largest) * fx.ulp();
    (fx.to_f64(&acc), err)
}

/// Coefficient convention in the globally convergent binomial series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinomialCoefficients {
    /// `A_k = Σ_j C(k,j)(2j−1)ζ(2j+2)`, prefactor `1/(1−s)`.
    AsPrinted,
    /// The same with `(−1)^j` inside the sum.
    Alternating,
    /// `A_k = Σ_j (−1)^j C(k,j)(2j+1)ζ(2j+2)`, prefactor `1/(s−1)`.
    Literature,
}

/// Partial sums `S_K` for `K = 0..terms` of
/// `pref(s) Σ_k A_k (1−s/2)_k / k!`, with `A_k` exact to `precision_bits`.
pub fn binomial_series_partials(
    s: ComplexValue,
    terms: usize,
    form: BinomialCoefficients,
    precision_bits: u32,
) -> Result<Vec<ComplexValue>> {
    if (s - 1.0).norm() < 1e-12 {
        return Err(Error::PoleAtOne);
    }
    let fx = Fixed::new(precision_bits.max(terms as u32 + 96));
    let zeta = zeta_even(&fx, terms + 1); // zeta[j] = ζ(2j+2)
    let pref = match form {
        BinomialCoefficients::AsPrinted | BinomialCoefficients::Alternating => 1.0 / (1.0 - s),
        BinomialCoefficients::Literature => 1.0 / (s - 1.0),
    };
    let weight: Vec<BigInt> = (0..=terms)
        .map(|j| {
            let (sign, lin) = match form {
                BinomialCoefficients::AsPrinted => (1, 2 * j as i64 - 1),
                BinomialCoefficients::Alternating => {
                    (if j % 2 == 0 { 1 } else { -1 }, 2 * j as i64 - 1)
                }
                BinomialCoefficients::Literature => {
                    (if j % 2 == 0 { 1 } else { -1 }, 2 * j as i64 + 1)
                }
            };
            &zeta[j] * BigInt::from(sign * lin)
        })
        .collect();
    let mut partials = Vec::with_capacity(terms + 1);
    let mut sum = ComplexSum::new();
    let mut poch = ComplexValue::new(1.0, 0.0); // (1−s/2)_k / k!
    let mut binom = vec![BigInt::from(1)];
    for k in 0..=terms {
        if k > 0 {
            let mut next = vec![BigInt::from(1); k + 1];
            for j in 1..k {
                next[j] = &binom[j - 1] + &binom[j];
            }
            binom = next;
            poch *= (k as f64 - s / 2.0) / k as f64;
        }
        let a_k: BigInt = binom.iter().zip(&weight).map(|(b, w)| b * w).sum();
        sum.add(fx.to_f64(&a_k) * poch);
        partials.push(pref * sum.value());
    }
    Ok(partials)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn refinement_series_oracle() {
        // mpmath nsum at s = 1/4 and 1/4 + 2i
        let (v, e) = refinement_series(c(0.25, 0.0), 1e-12).unwrap();
        assert!((v.re + 0.273_252_666_360_53).abs() < 1e-13 && e < 1e-13);
        let (v, _) = refinement_series(c(0.25, 2.0), 1e-12).unwrap();
        assert!((v - c(0.371_007_317_296_22, 0.009_967_748_599_327_8)).norm() < 1e-13);
    }

    #[test]
    fn imzeta_inner_terms() {
        let s = c(0.25, 2.0);
        let pref = s.im * (1.0 - 2.0 * s.re);
        let (t0, _) = imzeta_inner(0, s, 128);
        assert!((pref * t0 - 0.053_951_527_924_131).abs() < 1e-14);
        let (t1, e1) = imzeta_inner(1, s, 128);
        assert!(
            (pref * t1 + 0.042_864_341_29).abs() < 1e-10,
            "{}",
            pref * t1
        );
        let (t6, e6) = imzeta_inner(6, s, 128);
        assert!((pref * t6 - 0.026_522_170_5).abs() < 1e-9, "{}", pref * t6);
        assert!(e1 < 1e-15 && e6 < 1e-15);
    }

    #[test]
    fn binomial_series_forms() {
        let lit = binomial_series_partials(c(0.5, 3.0), 80, BinomialCoefficients::Literature, 256)
            .unwrap();
        assert!(
            (lit[80] - c(0.532_722_452_625, -0.078_903_148_697_3)).norm() < 1e-11,
            "{}",
            lit[80]
        );
        let alt = binomial_series_partials(c(3.0, 1.0), 80, BinomialCoefficients::Alternating, 256)
            .unwrap();
        assert!((alt[80] - c(-0.286_306_862_118, -0.413_549_422_237)).norm() < 1e-11);
        let printed =
            binomial_series_partials(c(0.5, 0.0), 20, BinomialCoefficients::AsPrinted, 256)
                .unwrap();
        assert!((printed[20].re / 29_346_025.436_4 - 1.0).abs() < 1e-10);
        let two = binomial_series_partials(c(2.0, 0.0), 10, BinomialCoefficients::AsPrinted, 256)
            .unwrap();
        assert!((two[10].re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-15);
    }
}
