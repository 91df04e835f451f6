use proptest::prelude::*;
use zetalab::claims::{
    chebyshev_sum_check, evaluate_claim, evaluate_claims, verdict_of, ClaimConfig, ClaimId,
    PointReport, Report, Verdict,
};
use zetalab::{ComplexValue, Error};

fn flips(a: Verdict, b: Verdict) -> bool {
    matches!(
        (a, b),
        (Verdict::Supported, Verdict::Refuted) | (Verdict::Refuted, Verdict::Supported)
    )
}

#[test]
fn verdicts_survive_more_precision_and_tighter_tolerance() {
    let base = evaluate_claims(&ClaimId::ALL, &ClaimConfig::default()).unwrap();
    let strict = ClaimConfig {
        precision_bits: 512,
        tol: 5e-11,
        ..ClaimConfig::default()
    };
    let tighter = evaluate_claims(&ClaimId::ALL, &strict).unwrap();
    for (a, b) in base.claims.iter().zip(&tighter.claims) {
        assert_eq!(a.claim, b.claim);
        assert!(
            !flips(a.verdict, b.verdict),
            "{}: {} → {}",
            a.claim,
            a.verdict,
            b.verdict
        );
        for (va, vb) in a.variants.iter().zip(&b.variants) {
            assert!(
                !flips(va.verdict, vb.verdict),
                "{} / {}: {} → {}",
                a.claim,
                va.name,
                va.verdict,
                vb.verdict
            );
        }
    }
}

#[test]
fn identical_config_gives_identical_bytes() {
    let ids = [
        ClaimId::LevyMomentDichotomy,
        ClaimId::WrMoments,
        ClaimId::ImzetaStarSeries,
        ClaimId::PsfGaussian,
    ];
    let cfg = ClaimConfig {
        seed: 17,
        ..ClaimConfig::default()
    };
    let a = evaluate_claims(&ids, &cfg).unwrap().to_json();
    let b = evaluate_claims(&ids, &cfg).unwrap().to_json();
    assert_eq!(a, b);
    assert_eq!(Report::from_json(&a).unwrap().to_json(), a);
    let other = evaluate_claims(&ids, &ClaimConfig { seed: 18, ..cfg })
        .unwrap()
        .to_json();
    assert_ne!(a, other);
}

#[test]
fn mah_scan_only_reports_critical_line_points() {
    let r = evaluate_claim(ClaimId::MahZeroContainment, &[], &ClaimConfig::default()).unwrap();
    assert_eq!(r.points.len(), 10);
    for p in &r.points {
        assert_eq!(p.s.re, 0.5);
        assert_eq!(p.lhs, ComplexValue::new(0.0, 0.0));
    }
    assert!(r.notes.iter().any(|n| n.contains("off")));
    let off = evaluate_claim(
        ClaimId::MahZeroContainment,
        &[ComplexValue::new(0.6, 14.0)],
        &ClaimConfig::default(),
    );
    assert!(matches!(off, Err(Error::PointOutOfRegion { .. })));
}

#[test]
fn out_of_range_configuration_is_rejected() {
    for tol in [0.0, 1.0, -1e-3, f64::NAN] {
        let cfg = ClaimConfig {
            tol,
            ..ClaimConfig::default()
        };
        assert!(evaluate_claim(ClaimId::EtaRepresentation, &[], &cfg).is_err());
    }
}

fn point(abs_err: f64, budget: f64) -> PointReport {
    let s = ComplexValue::new(0.5, 1.0);
    PointReport::new(
        s,
        ComplexValue::new(abs_err, 0.0),
        ComplexValue::new(0.0, 0.0),
        budget,
    )
    .unwrap()
}

proptest! {
    #[test]
    fn verdict_rule(errs in proptest::collection::vec((0.0..1e3f64, 1e-6..10.0f64), 1..12)) {
        let points: Vec<PointReport> = errs.iter().map(|&(e, b)| point(e, b)).collect();
        let v = verdict_of(&points);
        let all_in = errs.iter().all(|&(e, b)| e <= b);
        let any_far = errs.iter().any(|&(e, b)| e > 10.0 * b);
        let want = if all_in { Verdict::Supported } else if any_far { Verdict::Refuted } else { Verdict::Inconclusive };
        prop_assert_eq!(v, want);
    }

    #[test]
    fn chebyshev_holds_for_similarly_ordered_sequences(mut pairs in proptest::collection::vec((0.01..100.0f64, 0.01..100.0f64), 1..40)) {
        let mut a: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        let mut b: Vec<f64> = pairs.drain(..).map(|p| p.1).collect();
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        let same = chebyshev_sum_check(&a, &b).unwrap();
        prop_assert!(same.holds || same.gap > -1e-9 * a.iter().chain(&b).fold(1.0f64, |m, x| m.max(x * x)));
        b.reverse();
        let opposite = chebyshev_sum_check(&a, &b).unwrap();
        prop_assert!(opposite.gap <= 1e-9 * a.iter().chain(&b).fold(1.0f64, |m, x| m.max(x * x)));
    }
}

#[test]
fn chebyshev_rejects_mismatched_input() {
    assert!(chebyshev_sum_check(&[1.0, 2.0], &[1.0]).is_err());
    assert!(chebyshev_sum_check(&[], &[]).is_err());
    let c = chebyshev_sum_check(&[1.0, 2.0, 3.0], &[3.0, 1.0, 2.0]).unwrap();
    assert!(!c.holds);
}
