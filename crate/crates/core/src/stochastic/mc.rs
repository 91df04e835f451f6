//! Chunked, seed-deterministic Monte Carlo.

use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

use crate::numerics::{chunk_seed, rng_for, CompensatedSum, SeedValue};

/// Samples per chunk; chunk `i` draws from the stream `seed ⊕ i`.
pub const CHUNK: usize = 4096;

/// Draws `n` values, `CHUNK` at a time. The output order, and hence every
/// statistic computed from it, is independent of how chunks are scheduled.
pub fn chunked_samples<T, F>(n: usize, seed: SeedValue, parallel: bool, draw: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut ChaCha12Rng) -> T + Sync,
{
    let chunks = n.div_ceil(CHUNK);
    let run = |i: usize| {
        let mut rng = rng_for(chunk_seed(seed, i as u64));
        let len = CHUNK.min(n - i * CHUNK);
        (0..len).map(|_| draw(&mut rng)).collect::<Vec<T>>()
    };
    let parts: Vec<Vec<T>> = if parallel {
        par_map(chunks, run)
    } else {
        (0..chunks).map(run).collect()
    };
    parts.into_iter().flatten().collect()
}

#[cfg(feature = "parallel")]
fn par_map<T: Send>(chunks: usize, run: impl Fn(usize) -> Vec<T> + Sync + Send) -> Vec<Vec<T>> {
    use rayon::prelude::*;
    (0..chunks).into_par_iter().map(run).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T: Send>(chunks: usize, run: impl Fn(usize) -> Vec<T> + Sync + Send) -> Vec<Vec<T>> {
    (0..chunks).map(run).collect()
}

/// A Monte Carlo mean with its standard error.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub n_samples: usize,
    pub divergence_flag: bool,
    /// Estimates `(n, mean, std_error)` behind the divergence decision.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagnostic: Vec<(usize, f64, f64)>,
    /// Hill estimate of the tail index with its standard error, when used.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tail_index: Option<(f64, f64)>,
}

impl MomentEstimate {
    /// Mean and standard error with compensated sums, in sample order.
    pub fn from_samples(xs: &[f64]) -> Self {
        let n = xs.len();
        let mut s = CompensatedSum::new();
        xs.iter().for_each(|&x| s.add(x));
        let mean = s.value() / n as f64;
        let mut v = CompensatedSum::new();
        xs.iter().for_each(|&x| v.add((x - mean) * (x - mean)));
        let se = if n > 1 {
            (v.value() / (n as f64 - 1.0) / n as f64).sqrt()
        } else {
            f64::INFINITY
        };
        Self {
            mean,
            std_error: se,
            n_samples: n,
            divergence_flag: false,
            diagnostic: vec![],
            tail_index: None,
        }
    }

    /// Whether `value` lies within `k` standard errors.
    pub fn within(&self, value: f64, k: f64) -> bool {
        (self.mean - value).abs() <= k * self.std_error
    }
}

/// Estimates on the prefixes `n/8, n/4, n/2, n`.
pub fn doubling_sequence(xs: &[f64]) -> Vec<(usize, f64, f64)> {
    [8, 4, 2, 1]
        .iter()
        .map(|d| {
            let m = (xs.len() / d).max(2).min(xs.len());
            let e = MomentEstimate::from_samples(&xs[..m]);
            (m, e.mean, e.std_error)
        })
        .collect()
}

/// Monotone growth by more than two standard errors of the last estimate.
pub fn grows_without_settling(seq: &[(usize, f64, f64)]) -> bool {
    let increasing = seq.windows(2).all(|w| w[1].1 > w[0].1);
    let (first, last) = (seq[0], seq[seq.len() - 1]);
    increasing && last.1 - first.1 > 2.0 * last.2
}

/// Hill estimator of the tail index from the `k = ⌊√n⌋` largest samples.
pub fn hill_tail_index(xs: &[f64]) -> (f64, f64) {
    let mut v: Vec<f64> = xs.iter().copied().filter(|x| *x > 0.0).collect();
    v.sort_by(|a, b| b.total_cmp(a));
    let k = ((v.len() as f64).sqrt() as usize).max(2).min(v.len() - 1);
    let threshold = v[k].ln();
    let mean_excess = v[..k].iter().map(|x| x.ln() - threshold).sum::<f64>() / k as f64;
    let alpha = 1.0 / mean_excess;
    (alpha, alpha / (k as f64).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn parallel_equals_serial() {
        let a = chunked_samples(10_000, SeedValue(7), true, |r| r.random::<f64>());
        let b = chunked_samples(10_000, SeedValue(7), false, |r| r.random::<f64>());
        assert_eq!(a, b);
        assert_eq!(
            MomentEstimate::from_samples(&a),
            MomentEstimate::from_samples(&b)
        );
    }

    #[test]
    fn hill_recovers_pareto_index() {
        let xs = chunked_samples(200_000, SeedValue(1), true, |r| {
            r.random::<f64>().powf(-1.0 / 1.5)
        });
        let (a, se) = hill_tail_index(&xs);
        assert!((a - 1.5).abs() < 4.0 * se, "{a} ± {se}");
    }
}
