use std::f64::consts::PI;

use proptest::prelude::*;
use zetalab::continuation::{mellin_of_theta, tail_integral, zeta_via_theta_quotient, PoleTerm};
use zetalab::levy::{
    levy_cdf, levy_fractional_moment, levy_moment_mc, levy_moment_quadrature, levy_sample,
};
use zetalab::numerics::stats::{ks_critical, ks_statistic, normal_cdf};
use zetalab::numerics::{integrate_real, TailCertificate, Upper};
use zetalab::reference::{completed_zeta, gamma, zeta_reference};
use zetalab::stochastic::{chunked_samples, sample_path, PathGrid};
use zetalab::transforms::{
    fourier_cosine, fourier_image, mellin, psf_residual, s2_norm, theta_transform, TestFunction,
};
use zetalab::{ComplexValue, SeedValue};

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn builtins() -> Vec<(&'static str, TestFunction)> {
    vec![
        ("gaussian", TestFunction::gaussian()),
        ("triangle", TestFunction::triangle()),
        ("peak times gaussian", TestFunction::peak_times_gaussian()),
        ("exp decay", TestFunction::exp_decay()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quadrature_is_linear(alpha in -3.0..3.0f64, beta in -3.0..3.0f64, k in 0.5..8.0f64, p in 0.0..4.0f64) {
        let f = |x: f64| (k * x).sin() * (-x).exp();
        let g = |x: f64| x.powf(p);
        let tol = 1e-11;
        let a = integrate_real(f, 0.0, Upper::Finite(2.0), tol).unwrap();
        let b = integrate_real(g, 0.0, Upper::Finite(2.0), tol).unwrap();
        let ab = integrate_real(|x| alpha * f(x) + beta * g(x), 0.0, Upper::Finite(2.0), tol).unwrap();
        let bound = ab.err_bound + alpha.abs() * a.err_bound + beta.abs() * b.err_bound + 1e-14;
        prop_assert!((ab.re() - alpha * a.re() - beta * b.re()).abs() <= bound);
    }

    #[test]
    fn quadrature_is_deterministic(k in 0.1..20.0f64) {
        let f = |x: f64| (k * x).cos() / (1.0 + x * x);
        let a = integrate_real(f, 0.0, Upper::Finite(10.0), 1e-10).unwrap();
        let b = integrate_real(f, 0.0, Upper::Finite(10.0), 1e-10).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn gamma_recurrence(re in -19.5..19.5f64, im in -19.5..19.5f64) {
        let s = c(re, im);
        prop_assume!(s.norm() <= 20.0);
        // keep away from the poles at the non-positive integers
        prop_assume!(im.abs() > 0.1 || (re - re.round()).abs() > 0.1 || re > 0.5);
        let lhs = gamma(s + 1.0).unwrap();
        let rhs = s * gamma(s).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm(), "s = {s}: {lhs} vs {rhs}");
    }

    #[test]
    fn completed_zeta_is_symmetric(re in 0.01..0.99f64, im in -20.0..20.0f64) {
        let s = c(re, im);
        let a = completed_zeta(s).unwrap();
        let b = completed_zeta(1.0 - s).unwrap();
        prop_assert!((a - b).norm() < 1e-8, "s = {s}");
    }

    #[test]
    fn levy_scaling(u in 0.01..0.49f64, y0 in 0.1..5.0f64) {
        let m1 = levy_fractional_moment(u, 1.0).unwrap().value().unwrap();
        let my = levy_fractional_moment(u, y0).unwrap().value().unwrap();
        prop_assert!((my - y0.powf(2.0 * u) * m1).abs() <= 1e-13 * my);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn continuation_agrees_with_reference(re in 0.05..1.95f64, im in -10.0..10.0f64) {
        let s = c(re, im);
        prop_assume!((s - 1.0).norm() > 0.05);
        let q = zeta_via_theta_quotient(s, PoleTerm::Corrected, 1e-10).unwrap();
        let z = zeta_reference(s).unwrap();
        prop_assert!((q.value - z).norm() <= q.err_bound + 1e-9 * z.norm().max(1.0), "s = {s}");
    }

    #[test]
    fn theta_bounded_by_second_moment_norm(x in 1.0..50.0f64) {
        let z2 = PI * PI / 6.0;
        for (name, f) in builtins() {
            let n = s2_norm(&f).value;
            let t = theta_transform(&f, x, 1e-12).unwrap();
            prop_assert!(t.re().abs() * x * x <= n * z2 + 1e-9, "{name} at {x}");
        }
    }

    #[test]
    fn levy_cdf_is_increasing(x in 0.01..100.0f64, dx in 0.001..10.0f64, y0 in 0.2..3.0f64) {
        prop_assert!(levy_cdf(x + dx, y0).unwrap() >= levy_cdf(x, y0).unwrap());
    }
}

#[test]
fn quadrature_bounds_are_sound_on_a_closed_form_corpus() {
    type Case = (&'static str, Box<dyn Fn(f64) -> f64>, f64, Upper, f64);
    let cases: Vec<Case> = vec![
        (
            "x^2 on [0,1]",
            Box::new(|x| x * x),
            0.0,
            Upper::Finite(1.0),
            1.0 / 3.0,
        ),
        (
            "sin on [0,π]",
            Box::new(f64::sin),
            0.0,
            Upper::Finite(PI),
            2.0,
        ),
        (
            "1/√x on [0,1]",
            Box::new(|x| 1.0 / x.sqrt()),
            0.0,
            Upper::Finite(1.0),
            2.0,
        ),
        (
            "ln x on [0,1]",
            Box::new(f64::ln),
            0.0,
            Upper::Finite(1.0),
            -1.0,
        ),
        (
            "|x − 1/3| on [0,1]",
            Box::new(|x| (x - 1.0 / 3.0).abs()),
            0.0,
            Upper::Finite(1.0),
            5.0 / 18.0,
        ),
        (
            "e^{−x} on [0,∞)",
            Box::new(|x| (-x).exp()),
            0.0,
            Upper::Infinite(TailCertificate::Exponential {
                coeff: 1.0,
                rate: 1.0,
            }),
            1.0,
        ),
        (
            "1/(1+x²) on [0,∞)",
            Box::new(|x| 1.0 / (1.0 + x * x)),
            0.0,
            Upper::Infinite(TailCertificate::Power {
                coeff: 1.0,
                exponent: 2.0,
            }),
            PI / 2.0,
        ),
        (
            "e^{−πx²} on [0,∞)",
            Box::new(|x| (-PI * x * x).exp()),
            0.0,
            Upper::Infinite(TailCertificate::Exponential {
                coeff: 1.0,
                rate: PI,
            }),
            0.5,
        ),
        (
            "x^{−1/2}e^{−x} on [0,∞)",
            Box::new(|x| (-x).exp() / x.sqrt()),
            0.0,
            Upper::Infinite(TailCertificate::Exponential {
                coeff: 1.0,
                rate: 1.0,
            }),
            PI.sqrt(),
        ),
        (
            "cos(30x) on [0,1]",
            Box::new(|x| (30.0 * x).cos()),
            0.0,
            Upper::Finite(1.0),
            (30.0f64).sin() / 30.0,
        ),
        (
            "x^{-3/2} on [1,∞)",
            Box::new(|x| x.powf(-1.5)),
            1.0,
            Upper::Infinite(TailCertificate::Power {
                coeff: 1.0,
                exponent: 1.5,
            }),
            2.0,
        ),
        (
            "√(1−x²) on [0,1]",
            Box::new(|x| (1.0 - x * x).max(0.0).sqrt()),
            0.0,
            Upper::Finite(1.0),
            PI / 4.0,
        ),
    ];
    let mut misses = vec![];
    for tol in [1e-6, 1e-9, 1e-12] {
        for (name, f, a, b, truth) in &cases {
            let r = integrate_real(f, *a, b.clone(), tol).unwrap();
            if (r.re() - truth).abs() > r.err_bound {
                misses.push(format!(
                    "{name} at tol {tol:e}: error {:.2e} > bound {:.2e}",
                    (r.re() - truth).abs(),
                    r.err_bound
                ));
            }
        }
    }
    assert!(misses.is_empty(), "{misses:#?}");
}

#[test]
fn cosine_transform_is_an_involution() {
    for (name, f) in builtins() {
        let img = fourier_image(&f).unwrap();
        for x in [0.0, 0.3, 1.0, 2.5] {
            let back = fourier_cosine(&img, x, 1e-9).unwrap();
            assert!(
                (back.re() - f.eval(x)).abs() <= back.err_bound + 1e-8,
                "{name} at {x}: {} vs {}",
                back.re(),
                f.eval(x)
            );
        }
    }
}

#[test]
fn poisson_summation_for_the_gaussian() {
    for x in [0.3, 0.5, 1.0, 2.0, 3.0] {
        assert!(psf_residual(&TestFunction::gaussian(), x, 1e-12).unwrap() < 1e-8);
    }
}

#[test]
fn mellin_substitution_and_linearity() {
    for (name, f) in [
        ("gaussian", TestFunction::gaussian()),
        ("peak times gaussian", TestFunction::peak_times_gaussian()),
    ] {
        for s in [c(0.5, 1.0), c(1.5, -2.0)] {
            let m = mellin(&f, s, 1e-12).unwrap();
            for n in [1.0, 2.0, 3.0] {
                let d = mellin(&TestFunction::dilated(n, &f).unwrap(), s, 1e-12).unwrap();
                let expect = m.value / c(n, 0.0).powc(s);
                assert!(
                    (d.value - expect).norm() < 1e-10,
                    "{name}, n = {n}, s = {s}"
                );
            }
            let sum = TestFunction::sum(&f, &TestFunction::scaled(-2.5, &TestFunction::gaussian()));
            let ms = mellin(&sum, s, 1e-12).unwrap();
            let mg = mellin(&TestFunction::gaussian(), s, 1e-12).unwrap();
            assert!((ms.value - (m.value - 2.5 * mg.value)).norm() < 1e-10);
        }
    }
}

#[test]
fn mellin_of_theta_factorizes() {
    let g = TestFunction::gaussian();
    for s in [
        c(1.2, 0.0),
        c(1.5, 0.0),
        c(1.8, 0.0),
        c(1.3, 4.0),
        c(1.6, -7.0),
    ] {
        let lhs = mellin(&g, s, 1e-12).unwrap().value * zeta_reference(s).unwrap();
        let rhs = mellin_of_theta(&g, s, 1e-10).unwrap();
        assert!((lhs - rhs.value).norm() < 1e-8, "s = {s}");
    }
}

#[test]
fn tail_integral_is_symmetric() {
    let g = TestFunction::gaussian();
    for (re, im) in [
        (0.1, 0.0),
        (0.3, 1.0),
        (0.25, 5.0),
        (1.5, 0.0),
        (0.7, -3.0),
        (2.0, 2.0),
        (-1.0, 0.5),
        (0.5, 14.0),
        (3.0, 0.0),
        (0.9, 9.0),
    ] {
        let s = c(re, im);
        let a = tail_integral(&g, s, 1e-11).unwrap();
        let b = tail_integral(&g, 1.0 - s, 1e-11).unwrap();
        assert!(
            (a.value - b.value).norm() <= a.err_bound + b.err_bound + 1e-14,
            "s = {s}"
        );
    }
}

#[test]
fn brownian_marginal_is_standard_normal() {
    let grid = PathGrid::uniform(1.0, 0.05).unwrap();
    let b1: Vec<f64> = (0..100_000u64)
        .map(|k| *sample_path(&grid, SeedValue(k)).values.last().unwrap())
        .collect();
    let d = ks_statistic(&b1, normal_cdf);
    assert!(d < ks_critical(0.01, b1.len()), "{d}");
}

#[test]
fn parallel_and_serial_sampling_agree() {
    use rand::Rng;
    let draw = |rng: &mut rand_chacha::ChaCha12Rng| rng.random::<f64>();
    let a = chunked_samples(50_001, SeedValue(9), true, draw);
    let b = chunked_samples(50_001, SeedValue(9), false, draw);
    assert_eq!(a, b);
}

#[test]
fn levy_laws_are_consistent() {
    for x in [0.1, 1.0, 10.0] {
        let d = integrate_real(
            |t| zetalab::levy::levy_density(t, 1.0).unwrap_or(0.0),
            0.0,
            Upper::Finite(x),
            1e-12,
        )
        .unwrap();
        assert!((d.re() - levy_cdf(x, 1.0).unwrap()).abs() < 1e-9);
    }
    let xs = levy_sample(1.0, 100_000, SeedValue(21)).unwrap();
    assert!(ks_statistic(&xs, |x| levy_cdf(x, 1.0).unwrap()) < ks_critical(0.01, xs.len()));
    for u in [0.1, 0.2, 0.3, 0.4] {
        for y0 in [0.5, 1.0, 2.0] {
            let exact = levy_fractional_moment(u, y0).unwrap().value().unwrap();
            let q = levy_moment_quadrature(u, y0, 1e-11).unwrap();
            assert!(((q.re() - exact) / exact).abs() < 1e-8);
        }
    }
    // sampled scaling: same seed, so the draws are exactly y0² times the unit ones
    let u = 0.2;
    let one = levy_moment_mc(u, 1.0, 100_000, SeedValue(4)).unwrap();
    let two = levy_moment_mc(u, 2.0, 100_000, SeedValue(4)).unwrap();
    let k = 2f64.powf(2.0 * u);
    assert!((two.mean - k * one.mean).abs() <= 3.0 * (two.std_error + k * one.std_error));
}
