//! The Wiener–Riemann measure `r = Σ 2^{−n} r_n`, realized generatively:
//! draw the segment `n`, simulate `B` on `[√(n−1), √n]`, and form
//! `c(x) = G(x)(B_{√x} + p(x))` for `x ∈ [n−1, n]`.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::mc::{chunked_samples, doubling_sequence, grows_without_settling, MomentEstimate};
use super::{brownian_values, peak};
use crate::numerics::{gauss, integrate_real, SeedValue, Upper};
use crate::Result;

/// `x_max` values of the cutoff diagnostic.
pub const X_MAX_SEQUENCE: [f64; 4] = [10.0, 100.0, 1000.0, 10000.0];

/// Simulation settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WrConfig {
    /// Segments beyond this index get the residual mass.
    pub n_max: u32,
    /// Time step of the simulated Brownian segment.
    pub resolution: f64,
    /// Midpoints used for the `x`-integral of one path.
    pub integration_points: usize,
    pub parallel: bool,
}

impl Default for WrConfig {
    fn default() -> Self {
        Self {
            n_max: 30,
            resolution: 1e-3,
            integration_points: 1000,
            parallel: true,
        }
    }
}

fn draw_segment(rng: &mut impl Rng, n_max: u32) -> u32 {
    let mut n = 1;
    while n < n_max && rng.random::<bool>() {
        n += 1;
    }
    n
}

/// Segment index `n` with `t ∈ [n−1, n)`.
fn segment_of(t: f64) -> u32 {
    t.floor() as u32 + 1
}

/// A simulated Brownian segment on `τ ∈ [√(n−1), √n]`.
struct Segment {
    taus: Vec<f64>,
    values: Vec<f64>,
}

impl Segment {
    fn simulate(n: u32, resolution: f64, rng: &mut impl Rng) -> Self {
        let (a, b) = (((n - 1) as f64).sqrt(), (n as f64).sqrt());
        let steps = ((b - a) / resolution).ceil().max(1.0) as usize;
        let taus: Vec<f64> = (0..=steps)
            .map(|k| a + (b - a) * k as f64 / steps as f64)
            .collect();
        let z: f64 = rng.sample(StandardNormal);
        let start = z * a.sqrt();
        let values = brownian_values(&taus, start, rng);
        Self { taus, values }
    }

    fn at(&self, tau: f64) -> f64 {
        let (a, b) = (self.taus[0], self.taus[self.taus.len() - 1]);
        let steps = (self.taus.len() - 1) as f64;
        let pos = ((tau - a) / (b - a) * steps).clamp(0.0, steps);
        let i = (pos.floor() as usize).min(self.taus.len() - 2);
        let w = pos - i as f64;
        self.values[i] * (1.0 - w) + self.values[i + 1] * w
    }

    /// `c(x) = G(x)(B_{√x} + p(x))`.
    fn c(&self, x: f64) -> f64 {
        gauss(x) * (self.at(x.sqrt()) + peak(x).expect("x ≥ 0"))
    }
}

/// Monte Carlo estimate of `∫ c(t) dr(c)`.
pub fn wr_moment(
    t: f64,
    n_paths: usize,
    seed: SeedValue,
    cfg: &WrConfig,
) -> Result<MomentEstimate> {
    peak(t)?;
    let target = segment_of(t);
    let xs = chunked_samples(n_paths, seed, cfg.parallel, |rng| {
        let n = draw_segment(rng, cfg.n_max);
        if n != target {
            return 0.0;
        }
        Segment::simulate(n, cfg.resolution, rng).c(t)
    });
    Ok(MomentEstimate::from_samples(&xs))
}

/// `2^{−n}G(t)p(t)` for `t ∈ [n−1, n)`, since `E B = 0`.
pub fn wr_moment_closed_form(t: f64, n_max: u32) -> Result<f64> {
    let n = segment_of(t).min(n_max);
    let weight = if n == n_max {
        2f64.powi(1 - n_max as i32)
    } else {
        2f64.powi(-(n as i32))
    };
    Ok(weight * gauss(t) * peak(t)?)
}

/// Total mass and starting point `∫c(0)dr` under the printed weights `2^{−n}`
/// and under the doubled weights `2^{1−n}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Normalizations {
    pub total_mass_printed: f64,
    pub starting_point_printed: f64,
    pub total_mass_doubled: f64,
    pub starting_point_doubled: f64,
}

pub fn measure_normalizations(n_max: u32) -> Normalizations {
    // residual mass of n > n_max sits on n_max
    let total: f64 =
        (1..=n_max).map(|n| 2f64.powi(-(n as i32))).sum::<f64>() + 2f64.powi(-(n_max as i32));
    let start = 0.5 * gauss(0.0) * 1.0;
    Normalizations {
        total_mass_printed: total,
        starting_point_printed: start,
        total_mass_doubled: 2.0 * total,
        starting_point_doubled: 2.0 * start,
    }
}

/// Result of the `b_s` Monte Carlo with its divergence diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BsReport {
    pub u: f64,
    pub x_max: f64,
    pub estimate: MomentEstimate,
    /// `(x_max, mean, std_error)` over [`X_MAX_SEQUENCE`].
    pub by_x_max: Vec<(f64, f64, f64)>,
}

/// Monte Carlo estimate of `b_u = ∫₀^{x_max} x^{u−1} (∫|c(x)| dr) dx`.
///
/// The divergence flag is raised if the estimates over the `x_max` sequence,
/// or over doubling sample sizes, grow monotonically by more than two
/// standard errors.
pub fn b_s_estimate(
    u: f64,
    n_paths: usize,
    x_max: f64,
    seed: SeedValue,
    cfg: &WrConfig,
) -> Result<BsReport> {
    if !(u > 0.0) {
        return Err(crate::Error::Domain(format!("b_s needs u > 0, got {u}")));
    }
    if !(x_max >= 1.0) {
        return Err(crate::Error::Domain(format!(
            "b_s needs x_max ≥ 1, got {x_max}"
        )));
    }
    let cutoffs: Vec<f64> = std::iter::once(x_max).chain(X_MAX_SEQUENCE).collect();
    let rows = chunked_samples(n_paths, seed, cfg.parallel, |rng| {
        let n = draw_segment(rng, cfg.n_max);
        let seg = Segment::simulate(n, cfg.resolution, rng);
        cutoffs
            .iter()
            .map(|&x| segment_integral(&seg, n, u, x, cfg.integration_points))
            .collect::<Vec<f64>>()
    });
    let column = |k: usize| rows.iter().map(|r| r[k]).collect::<Vec<f64>>();
    let main = column(0);
    let mut estimate = MomentEstimate::from_samples(&main);
    estimate.diagnostic = doubling_sequence(&main);
    let by_x_max: Vec<(f64, f64, f64)> = X_MAX_SEQUENCE
        .iter()
        .enumerate()
        .map(|(k, &x)| {
            let e = MomentEstimate::from_samples(&column(k + 1));
            (x, e.mean, e.std_error)
        })
        .collect();
    let as_rows: Vec<(usize, f64, f64)> = by_x_max
        .iter()
        .map(|&(x, m, s)| (x as usize, m, s))
        .collect();
    estimate.divergence_flag =
        grows_without_settling(&as_rows) || grows_without_settling(&estimate.diagnostic);
    Ok(BsReport {
        u,
        x_max,
        estimate,
        by_x_max,
    })
}

/// `∫ x^{u−1}|c(x)| dx` over `[n−1, min(n, X)]`, in `v = x^u` where the
/// weight becomes `dv/u`.
fn segment_integral(seg: &Segment, n: u32, u: f64, x_max: f64, points: usize) -> f64 {
    let lo = (n - 1) as f64;
    let hi = (n as f64).min(x_max);
    if hi <= lo {
        return 0.0;
    }
    let (va, vb) = (lo.powf(u), hi.powf(u));
    let h = (vb - va) / points as f64;
    let mut acc = 0.0;
    for k in 0..points {
        let v = va + (k as f64 + 0.5) * h;
        let x = v.powf(1.0 / u);
        acc += seg.c(x).abs();
    }
    acc * h / u
}

/// `Σ 2^{−n} ∫_{n−1}^{n} x^{u−1} G(x)(E|B_{√x}| + p(x)) dx` with
/// `E|B_{√x}| = √(2/π) x^{1/4}`, an upper bound for `b_u`.
pub fn b_s_upper_bound(u: f64, n_max: u32) -> Result<f64> {
    let k = (2.0 / std::f64::consts::PI).sqrt();
    let mut total = 0.0;
    for n in 1..=n_max.min(12) {
        let w = 2f64.powi(-(n as i32));
        let r = integrate_real(
            |x| x.powf(u - 1.0) * gauss(x) * (k * x.powf(0.25) + peak(x).unwrap_or(0.0)),
            (n - 1) as f64,
            Upper::Finite(n as f64),
            1e-12,
        )?;
        total += w * (r.re() + r.err_bound);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_weights() {
        let ns = chunked_samples(100_000, SeedValue(5), true, |r| draw_segment(r, 30) as f64);
        let ones = ns.iter().filter(|&&n| n == 1.0).count() as f64 / ns.len() as f64;
        assert!((ones - 0.5).abs() < 0.01);
        let n = measure_normalizations(30);
        assert!((n.total_mass_printed - 1.0).abs() < 1e-15);
        assert_eq!(n.starting_point_printed, 0.5);
    }

    #[test]
    fn moment_at_half_matches_closed_form() {
        let cfg = WrConfig::default();
        let e = wr_moment(0.5, 20_000, SeedValue(0), &cfg).unwrap();
        let exact = wr_moment_closed_form(0.5, 30).unwrap();
        assert!((exact - 0.5 * (-std::f64::consts::PI / 4.0).exp() * 0.5).abs() < 1e-15);
        assert!(e.within(exact, 3.0), "{e:?} vs {exact}");
    }

    #[test]
    fn b_s_is_below_its_bound() {
        let cfg = WrConfig {
            integration_points: 200,
            resolution: 1e-2,
            ..Default::default()
        };
        let r = b_s_estimate(0.4, 4000, 10.0, SeedValue(0), &cfg).unwrap();
        assert!(r.estimate.mean <= b_s_upper_bound(0.4, 30).unwrap());
    }
}
