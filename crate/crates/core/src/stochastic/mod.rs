//! Brownian paths, the peak-shifted process, Girsanov reweighting and the
//! Wiener–Riemann path measure.

mod mc;
mod wr;

use std::fmt::Write as _;
use std::path::Path;

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::numerics::{rng_for, SeedValue};
use crate::{Error, Result};

pub use mc::{
    chunked_samples, doubling_sequence, grows_without_settling, hill_tail_index, MomentEstimate,
    CHUNK,
};
pub use wr::{
    b_s_estimate, b_s_upper_bound, measure_normalizations, wr_moment, wr_moment_closed_form,
    BsReport, Normalizations, WrConfig, X_MAX_SEQUENCE,
};

/// Time grid starting at 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathGrid {
    times: Vec<f64>,
}

impl PathGrid {
    pub fn new(times: Vec<f64>) -> Result<Self> {
        if times.first() != Some(&0.0) {
            return Err(Error::InvalidGrid("grid must start at 0".into()));
        }
        if times.len() < 2 {
            return Err(Error::InvalidGrid("grid needs at least two points".into()));
        }
        if let Some(w) = times
            .windows(2)
            .find(|w| !(w[1] > w[0]) || !w[1].is_finite())
        {
            return Err(Error::InvalidGrid(format!(
                "times not strictly increasing at {} -> {}",
                w[0], w[1]
            )));
        }
        Ok(Self { times })
    }

    /// `0, h, 2h, …` up to and including `end`.
    pub fn uniform(end: f64, step: f64) -> Result<Self> {
        if !(end > 0.0 && step > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "uniform grid needs end > 0 and step > 0, got {end}, {step}"
            )));
        }
        let n = (end / step).ceil() as usize;
        let mut times: Vec<f64> = (0..n).map(|k| k as f64 * step).collect();
        times.push(end);
        Self::new(times)
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn end(&self) -> f64 {
        *self.times.last().expect("non-empty")
    }

    /// Largest step.
    pub fn resolution(&self) -> f64 {
        self.times
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(0.0, f64::max)
    }

    pub fn covers(&self, a: f64, b: f64) -> bool {
        a >= 0.0 && b <= self.end()
    }
}

/// A Brownian path sampled on a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BrownianPath {
    pub grid: PathGrid,
    pub values: Vec<f64>,
    pub seed: SeedValue,
}

impl BrownianPath {
    /// Linear interpolation between grid points.
    pub fn at(&self, t: f64) -> Result<f64> {
        let ts = self.grid.times();
        if !(t >= 0.0 && t <= self.grid.end()) {
            return Err(Error::GridCoverage { lo: t, hi: t });
        }
        let i = ts.partition_point(|&x| x <= t).min(ts.len() - 1).max(1);
        let (t0, t1) = (ts[i - 1], ts[i]);
        let w = (t - t0) / (t1 - t0);
        Ok(self.values[i - 1] * (1.0 - w) + self.values[i] * w)
    }

    /// CSV with header `t,value`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,value\n");
        for (t, v) in self.grid.times().iter().zip(&self.values) {
            writeln!(out, "{t:?},{v:?}").expect("write to string");
        }
        out
    }

    pub fn write_csv(&self, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, self.to_csv())
    }
}

/// The peak function `p(t) = 1 − t` on `[0, 1]`, zero beyond.
pub fn peak(t: f64) -> Result<f64> {
    if t < 0.0 || t.is_nan() {
        return Err(Error::NegativeTime(t));
    }
    Ok((1.0 - t).max(0.0))
}

/// One path from independent Gaussian increments.
pub fn sample_path(grid: &PathGrid, seed: SeedValue) -> BrownianPath {
    let mut rng = rng_for(seed);
    let values = brownian_values(grid.times(), 0.0, &mut rng);
    BrownianPath {
        grid: grid.clone(),
        values,
        seed,
    }
}

/// Values of `B` on `times`, with `B(times[0]) = start`.
pub(crate) fn brownian_values(times: &[f64], start: f64, rng: &mut impl Rng) -> Vec<f64> {
    let mut values = Vec::with_capacity(times.len());
    let mut b = start;
    values.push(b);
    for w in times.windows(2) {
        let z: f64 = rng.sample(StandardNormal);
        b += z * (w[1] - w[0]).sqrt();
        values.push(b);
    }
    values
}

/// Log-density of the segment law shifted by the peak against the unshifted
/// one on `[√(n−1), √n]`: `−½∫p′² − ∫p′ dc`. The peak is flat past 1, so only
/// `n = 1` contributes, where it equals `−½ + c(1) − c(0)`.
pub fn girsanov_log_density(path: &BrownianPath, n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("segment index starts at 1".into()));
    }
    let (a, b) = (((n - 1) as f64).sqrt(), (n as f64).sqrt());
    if !path.grid.covers(a, b) {
        return Err(Error::GridCoverage { lo: a, hi: b });
    }
    if n >= 2 {
        return Ok(0.0);
    }
    Ok(-0.5 + path.at(1.0)? - path.at(0.0)?)
}

/// Expectations of a path functional `Φ` on `[0, 1]` under the shifted
/// process `c + p` and under `c` reweighted by the Girsanov density, from the
/// same simulated paths.
pub fn girsanov_reweighting<F>(
    phi: F,
    n_paths: usize,
    seed: SeedValue,
    resolution: f64,
    parallel: bool,
) -> Result<(MomentEstimate, MomentEstimate)>
where
    F: Fn(&dyn Fn(f64) -> f64) -> f64 + Sync,
{
    let grid = PathGrid::uniform(1.0, resolution)?;
    let pairs = chunked_samples(n_paths, seed, parallel, |rng| {
        let values = brownian_values(grid.times(), 0.0, rng);
        let path = BrownianPath {
            grid: grid.clone(),
            values,
            seed,
        };
        let c = |t: f64| path.at(t).unwrap_or(f64::NAN);
        let shifted = |t: f64| c(t) + peak(t).unwrap_or(f64::NAN);
        let w = girsanov_log_density(&path, 1)
            .map(f64::exp)
            .unwrap_or(f64::NAN);
        (phi(&shifted), phi(&c) * w)
    });
    let (a, b): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
    Ok((
        MomentEstimate::from_samples(&a),
        MomentEstimate::from_samples(&b),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::stats::{ks_critical, ks_statistic, normal_cdf};

    #[test]
    fn peak_values() {
        assert_eq!(peak(0.0).unwrap(), 1.0);
        assert_eq!(peak(0.5).unwrap(), 0.5);
        assert_eq!(peak(2.0).unwrap(), 0.0);
        assert_eq!(peak(-0.1).unwrap_err(), Error::NegativeTime(-0.1));
    }

    #[test]
    fn grid_validation() {
        assert!(PathGrid::new(vec![0.0, 0.5, 0.5]).is_err());
        assert!(PathGrid::new(vec![0.1, 0.5]).is_err());
        let g = PathGrid::uniform(1.0, 0.3).unwrap();
        assert_eq!(g.times(), &[0.0, 0.3, 0.6, 0.8999999999999999, 1.0]);
        assert!((g.resolution() - 0.3).abs() < 1e-15);
    }

    #[test]
    fn paths_start_at_zero_and_are_reproducible() {
        let g = PathGrid::uniform(2.0, 0.01).unwrap();
        let a = sample_path(&g, SeedValue(3));
        let b = sample_path(&g, SeedValue(3));
        assert_eq!(a.values[0], 0.0);
        assert_eq!(a, b);
        assert_ne!(a.values, sample_path(&g, SeedValue(4)).values);
    }

    #[test]
    fn marginal_at_one_is_standard_normal() {
        let g = PathGrid::uniform(1.0, 0.05).unwrap();
        let xs: Vec<f64> = (0..20_000)
            .map(|k| *sample_path(&g, SeedValue(k)).values.last().unwrap())
            .collect();
        assert!(ks_statistic(&xs, normal_cdf) < ks_critical(0.01, xs.len()));
    }

    #[test]
    fn girsanov_cases() {
        let g = PathGrid::new(vec![0.0, 0.5, 1.0, 1.5]).unwrap();
        let path = BrownianPath {
            grid: g,
            values: vec![0.0, -0.2, 0.3, 1.0],
            seed: SeedValue(0),
        };
        assert!((girsanov_log_density(&path, 1).unwrap() + 0.2).abs() < 1e-15);
        assert_eq!(girsanov_log_density(&path, 2).unwrap(), 0.0);
        assert!(matches!(
            girsanov_log_density(&path, 3),
            Err(Error::GridCoverage { .. })
        ));
    }

    #[test]
    fn csv_dump() {
        let g = PathGrid::new(vec![0.0, 0.5]).unwrap();
        let path = BrownianPath {
            grid: g,
            values: vec![0.0, 0.25],
            seed: SeedValue(0),
        };
        assert_eq!(path.to_csv(), "t,value\n0.0,0.0\n0.5,0.25\n");
    }
}
