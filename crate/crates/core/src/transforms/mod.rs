//! Even test functions and the transforms acting on them: Fourier cosine,
//! lattice (theta) sums, Mellin, Poisson summation and the Fox equation.

mod fourier;
mod function;
pub(crate) mod jets;
mod mellin;
mod poisson;
mod theta;

pub use fourier::{
    cosine_quadrature, fourier_cosine, fourier_image, fox_residual, fox_solve, unitary_cosine,
    unitary_image,
};
pub use function::{Tail, TestFunction};
pub use mellin::{mellin, mellin_strip};
pub use poisson::{make_poisson_element, psf_residual, psf_sides};
pub use theta::theta_transform;

pub(crate) use fourier::flatten;
pub(crate) use function::Repr;

/// `max_x |x² c(x)|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormValue {
    pub value: f64,
    /// Where the maximum is attained.
    pub at: f64,
}

const SCAN_POINTS: usize = 20_000;

/// The second-moment sup norm, found by a dense scan refined by golden
/// section search around the best grid point.
pub fn s2_norm(c: &TestFunction) -> NormValue {
    let h = |x: f64| (x * x * c.eval(x)).abs();
    let hi = match c.tail() {
        Tail::Compact(l) => l,
        Tail::Exponential { coeff, rate } => {
            let mut x = 1.0;
            while x * x * coeff * (-rate * x).exp() > 1e-12 {
                x *= 1.25;
            }
            x
        }
        Tail::Power { .. } => 50.0,
    };
    let mut grid: Vec<f64> = (0..=SCAN_POINTS)
        .map(|i| hi * i as f64 / SCAN_POINTS as f64)
        .collect();
    grid.extend(c.breakpoints().into_iter().filter(|b| *b <= hi));
    grid.sort_by(f64::total_cmp);
    let (mut best_x, mut best) = (0.0, 0.0);
    for &x in &grid {
        let v = h(x);
        if v > best {
            best = v;
            best_x = x;
        }
    }
    let step = hi / SCAN_POINTS as f64;
    let (mut a, mut b) = ((best_x - step).max(0.0), (best_x + step).min(hi));
    // values at the bracket ends are kept so one-sided maxima at jumps are not lost
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = b - g * (b - a);
    let mut x2 = a + g * (b - a);
    let (mut f1, mut f2) = (h(x1), h(x2));
    for _ in 0..80 {
        if f1 > f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = h(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = h(x2);
        }
        if b - a < 1e-12 * (1.0 + best_x) {
            break;
        }
    }
    let xm = 0.5 * (a + b);
    let vm = h(xm);
    if vm > best {
        NormValue { value: vm, at: xm }
    } else {
        NormValue {
            value: best,
            at: best_x,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, PI};

    #[test]
    fn closed_form_norms() {
        let g = s2_norm(&TestFunction::gaussian());
        assert!((g.value - 1.0 / (PI * E)).abs() < 1e-14);
        let t = s2_norm(&TestFunction::triangle());
        assert!((t.value - 4.0 / 27.0).abs() < 1e-14);
        let s = s2_norm(&TestFunction::scaled(3.0, &TestFunction::gaussian()));
        assert!((s.value - 3.0 / (PI * E)).abs() < 1e-13);
        let e = s2_norm(&TestFunction::exp_decay());
        assert!((e.value - 4.0 / (E * E)).abs() < 1e-14);
    }

    #[test]
    fn peak_gauss_norm() {
        let n = s2_norm(&TestFunction::peak_times_gaussian());
        assert!(
            (n.value - 0.059_013_364_692_038_83).abs() < 1e-12,
            "{}",
            n.value
        );
        assert!((n.at - 0.439_754_566_668_781_9).abs() < 1e-6);
    }

    #[test]
    fn indicator_norm_is_attained_at_the_jump() {
        let n = s2_norm(&TestFunction::indicator01());
        assert_eq!(n.value, 1.0);
    }
}
