//! Binary fixed-point arithmetic on big integers: a value `v` is stored as
//! `round(v·2^P)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Fixed {
    pub bits: u32,
}

impl Fixed {
    pub fn new(bits: u32) -> Self {
        Self { bits }
    }

    pub fn one(&self) -> BigInt {
        BigInt::one() << self.bits
    }

    #[cfg(test)]
    pub fn from_int(&self, n: i64) -> BigInt {
        BigInt::from(n) << self.bits
    }

    pub fn from_ratio(&self, r: &BigRational) -> BigInt {
        round_div(&(r.numer() << self.bits), r.denom())
    }

    #[cfg(test)]
    /// Exact for every finite `x`.
    pub fn from_f64(&self, x: f64) -> BigInt {
        let r = BigRational::from_float(x).expect("finite");
        self.from_ratio(&r)
    }

    pub fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        round_shift(&(a * b), self.bits)
    }

    #[cfg(test)]
    pub fn div(&self, a: &BigInt, b: &BigInt) -> BigInt {
        round_div(&(a << self.bits), b)
    }

    pub fn to_f64(&self, a: &BigInt) -> f64 {
        let keep = 64u32;
        let shift = a.bits().saturating_sub(keep as u64) as u32;
        let top = (a >> shift).to_f64().expect("fits");
        top * 2f64.powi(shift as i32 - self.bits as i32)
    }

    /// `2^{−P}`, the unit in the last place.
    pub fn ulp(&self) -> f64 {
        2f64.powi(-(self.bits as i32))
    }

    /// π by Machin's formula `16 atan(1/5) − 4 atan(1/239)`.
    pub fn pi(&self) -> BigInt {
        let guard = Fixed::new(self.bits + 32);
        let p = guard.atan_inv(5) * 16 - guard.atan_inv(239) * 4;
        round_shift(&p, 32)
    }

    /// `atan(1/x)` for an integer `x > 1`.
    fn atan_inv(&self, x: i64) -> BigInt {
        let x2 = BigInt::from(x * x);
        let mut power = self.one() / x;
        let mut sum = power.clone();
        let mut k = 1i64;
        while !power.is_zero() {
            power = &power / &x2;
            let term = &power / (2 * k + 1);
            if k % 2 == 1 {
                sum -= term;
            } else {
                sum += term;
            }
            k += 1;
        }
        sum
    }
}

fn round_shift(a: &BigInt, bits: u32) -> BigInt {
    if bits == 0 {
        return a.clone();
    }
    let half = BigInt::one() << (bits - 1);
    (a + half) >> bits
}

fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    if (r * 2u8).abs() >= b.abs() {
        q + 1
    } else {
        q
    }
}

/// Even Bernoulli numbers `B_0, B_2, …, B_{2m}` from
/// `Σ_{k<n} C(n+1, k) B_k = −(n+1) B_n`.
pub(crate) fn bernoulli_even(m: usize) -> Vec<BigRational> {
    let n_max = 2 * m;
    let mut b: Vec<BigRational> = Vec::with_capacity(n_max + 1);
    b.push(BigRational::one());
    for n in 1..=n_max {
        if n > 1 && n % 2 == 1 {
            b.push(BigRational::zero());
            continue;
        }
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                acc += bk * BigRational::from_integer(binom.clone());
            }
            binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
    }
    b.into_iter().step_by(2).collect()
}

/// `ζ(2k)` for `k = 1..=m` as fixed-point values, from
/// `ζ(2k) = (−1)^{k+1} B_{2k} (2π)^{2k} / (2·(2k)!)`.
pub(crate) fn zeta_even(fx: &Fixed, m: usize) -> Vec<BigInt> {
    let guard = Fixed::new(fx.bits + 64);
    let b = bernoulli_even(m);
    let two_pi_sq = {
        let tp = guard.pi() * 2;
        guard.mul(&tp, &tp)
    };
    let mut power = guard.one();
    let mut fact = BigInt::one();
    let mut out = Vec::with_capacity(m);
    for k in 1..=m {
        power = guard.mul(&power, &two_pi_sq);
        fact *= BigInt::from((2 * k - 1) * 2 * k);
        let coeff = b[k].abs() / BigRational::from_integer(fact.clone() * 2);
        let v = round_div(&(&power * coeff.numer()), coeff.denom());
        out.push(round_shift(&v, 64));
    }
    out
}
