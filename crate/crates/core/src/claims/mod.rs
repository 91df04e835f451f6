//! The falsification harness: every asserted identity, evaluated at concrete
//! points against independent evaluators, with an error budget and a
//! three-valued verdict.

mod evaluators;
mod fixed;
mod series;
mod zeros;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{ComplexValue, Error, Result};

pub use series::{binomial_series_partials, imzeta_inner, refinement_series, BinomialCoefficients};
pub use zeros::{chebyshev_sum_check, critical_zero_scan, ChebyshevCheck};

/// Report format version.
pub const REPORT_VERSION: &str = "1.0";

/// Identifier of an asserted identity, in registry order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimId {
    PsfGaussian,
    MuntzIdentity,
    ContinuationQuotient,
    ImDecomposition,
    WrAveragedFe,
    PGeneralFe,
    RefinementSeries,
    EtaRepresentation,
    ImzetaStarSeries,
    MaslankaFormula,
    RwrfeHyperbola,
    MahZeroContainment,
    LevyMomentDichotomy,
    WrMoments,
}

impl ClaimId {
    pub const ALL: [ClaimId; 14] = [
        ClaimId::PsfGaussian,
        ClaimId::MuntzIdentity,
        ClaimId::ContinuationQuotient,
        ClaimId::ImDecomposition,
        ClaimId::WrAveragedFe,
        ClaimId::PGeneralFe,
        ClaimId::RefinementSeries,
        ClaimId::EtaRepresentation,
        ClaimId::ImzetaStarSeries,
        ClaimId::MaslankaFormula,
        ClaimId::RwrfeHyperbola,
        ClaimId::MahZeroContainment,
        ClaimId::LevyMomentDichotomy,
        ClaimId::WrMoments,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::PsfGaussian => "psf-gaussian",
            ClaimId::MuntzIdentity => "muntz-identity",
            ClaimId::ContinuationQuotient => "continuation-quotient",
            ClaimId::ImDecomposition => "im-decomposition",
            ClaimId::WrAveragedFe => "wr-averaged-fe",
            ClaimId::PGeneralFe => "p-general-fe",
            ClaimId::RefinementSeries => "refinement-series",
            ClaimId::EtaRepresentation => "eta-representation",
            ClaimId::ImzetaStarSeries => "imzeta-star-series",
            ClaimId::MaslankaFormula => "maslanka-formula",
            ClaimId::RwrfeHyperbola => "rwrfe-hyperbola",
            ClaimId::MahZeroContainment => "mah-zero-containment",
            ClaimId::LevyMomentDichotomy => "levy-moment-dichotomy",
            ClaimId::WrMoments => "wr-moments",
        }
    }

    /// Phrase of the source text the identity is stated under.
    pub fn anchor(self) -> &'static str {
        match self {
            ClaimId::PsfGaussian => "Poisson Summation Formula",
            ClaimId::MuntzIdentity => "Muntz relations",
            ClaimId::ContinuationQuotient => "meromorphic continuation of the local zeta",
            ClaimId::ImDecomposition => "Im[(M(c)\\zeta)(s)]",
            ClaimId::WrAveragedFe => "Reasuming, we finally obtain",
            ClaimId::PGeneralFe => "new general functional equation for zeta",
            ClaimId::RefinementSeries => "refinement Riemann hypothesis",
            ClaimId::EtaRepresentation => "1-2^{1-s}",
            ClaimId::ImzetaStarSeries => "$Im(\\zeta^{*}(s))$",
            ClaimId::MaslankaFormula => "proposed a new formula",
            ClaimId::RwrfeHyperbola => "(rWRfe in short) of the form",
            ClaimId::MahZeroContainment => "Main Algebraic Hypothesis",
            ClaimId::LevyMomentDichotomy => "existence of the Orlicz moments",
            ClaimId::WrMoments => "Non-triviality, Starting point, Vanishing of moments",
        }
    }

    /// The identity in words.
    pub fn statement(self) -> &'static str {
        match self {
            ClaimId::PsfGaussian => "(1/x)θ(G)(1/x) + 1/(2x) = 1/2 + θ(G)(x)",
            ClaimId::MuntzIdentity => "M(c)(s)ζ(s) = 1/(s(s−1)) + ∫₁^∞ (x^{−s} + x^{s−1})θ(c)(x) dx",
            ClaimId::ContinuationQuotient => "ζ(s) = [1/(s(s−1)) + ∫₁^∞ (x^{−s} + x^{s−1})θ(G)(x) dx] / M(G)(s)",
            ClaimId::ImDecomposition => "Im[M(c)(s)ζ(s)] = ζ_t(s)/|s(s−1)|² + ∫₁^∞ (x^{σ−1} − x^{−σ})θ(c)(x) sin(t x) dx",
            ClaimId::WrAveragedFe => "Im{½ M(pG)(s) ζ(s)} = ζ_t(s)/|s(s−1)|² for 0 < Re s < 1/2",
            ClaimId::PGeneralFe => "ζ(s) = 2p(0)/(s(s−1)M(pG)(s)) for 0 < Re s < 1/2",
            ClaimId::RefinementSeries => "1/ζ(s) = Σ (−π)ⁿ s(s−1)/(2n!(s+2n)(s+2n+1)) for 0 < Re s < 1/2",
            ClaimId::EtaRepresentation => "ζ(s) = η(s)/(1 − 2^{1−s}) for Re s > 0",
            ClaimId::ImzetaStarSeries => {
                "Im ζ*(s) = Im(s)(1−2Re s) Σ_n Σ_j (−πn²)^j/j! (4j+1)/|(2j+s)(2j+1−s)|² for 0 < Re s < 1/2"
            }
            ClaimId::MaslankaFormula => "ζ(s) = 1/(1−s) Σ_k A_k (1−s/2)_k/k!, A_k = Σ_j C(k,j)(2j−1)ζ(2j+2)",
            ClaimId::RwrfeHyperbola => "Re{E[M(B^p)(s)]ζ(s)} = Re(1/(s(s−1))), with |s(s−1)|²Re(1/(s(s−1))) = R(s)",
            ClaimId::MahZeroContainment => "ζ(s) = 0, Im s ≠ 0 ⇒ ζ_t(s) = 0",
            ClaimId::LevyMomentDichotomy => "E[L^u] finite iff 0 < u < 1/2, equal to y0^{2u}2^{−u}Γ(1/2−u)/√π",
            ClaimId::WrMoments => "r(P) = 1, ∫c(0)dr = 1, ∫c(t)dr = 0 for t ≥ 1",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown claim id {s:?}")))
    }
}

/// Every claim with its anchor phrase, in registry order.
pub fn list_claims() -> Vec<(ClaimId, &'static str)> {
    ClaimId::ALL.iter().map(|&id| (id, id.anchor())).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Supported,
    Refuted,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Supported => "supported",
            Verdict::Refuted => "refuted",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Complex numbers as `{re, im}` objects.
mod complex_object {
    use super::ComplexValue;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Obj {
        re: f64,
        im: f64,
    }

    pub fn serialize<S: Serializer>(z: &ComplexValue, s: S) -> Result<S::Ok, S::Error> {
        Obj { re: z.re, im: z.im }.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ComplexValue, D::Error> {
        let o = Obj::deserialize(d)?;
        Ok(ComplexValue::new(o.re, o.im))
    }
}

/// One evaluation point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointReport {
    #[serde(with = "complex_object")]
    pub s: ComplexValue,
    #[serde(with = "complex_object")]
    pub lhs: ComplexValue,
    #[serde(with = "complex_object")]
    pub rhs: ComplexValue,
    pub abs_err: f64,
    pub rel_err: f64,
    pub err_budget: f64,
}

impl PointReport {
    pub fn new(
        s: ComplexValue,
        lhs: ComplexValue,
        rhs: ComplexValue,
        err_budget: f64,
    ) -> Result<Self> {
        for (what, z) in [("s", s), ("lhs", lhs), ("rhs", rhs)] {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::OracleFailure(format!("{what} = {z} is not finite")));
            }
        }
        if !(err_budget.is_finite() && err_budget >= 0.0) {
            return Err(Error::OracleFailure(format!(
                "error budget {err_budget} is not finite"
            )));
        }
        let abs_err = (lhs - rhs).norm();
        let scale = lhs.norm().max(rhs.norm());
        let rel_err = if scale > 0.0 { abs_err / scale } else { 0.0 };
        Ok(Self {
            s,
            lhs,
            rhs,
            abs_err,
            rel_err,
            err_budget,
        })
    }

    pub fn agrees(&self) -> bool {
        self.abs_err <= self.err_budget
    }
}

/// Supported iff every point agrees within budget; refuted iff some point
/// misses by more than ten budgets; inconclusive otherwise.
pub fn verdict_of(points: &[PointReport]) -> Verdict {
    if points.iter().all(PointReport::agrees) {
        Verdict::Supported
    } else if points.iter().any(|p| p.abs_err > 10.0 * p.err_budget) {
        Verdict::Refuted
    } else {
        Verdict::Inconclusive
    }
}

/// The same identity under another convention or reading.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VariantReport {
    pub name: String,
    pub points: Vec<PointReport>,
    pub verdict: Verdict,
}

impl VariantReport {
    pub fn new(name: impl Into<String>, points: Vec<PointReport>) -> Self {
        let verdict = verdict_of(&points);
        Self {
            name: name.into(),
            points,
            verdict,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Relative tolerance of quadratures and series, and the floor of every
    /// deterministic budget.
    pub tol: f64,
    /// Monte Carlo budgets are this many standard errors.
    pub mc_sigmas: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub seed: u64,
    pub precision_bits: u32,
    pub tolerances: Tolerances,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub points: Vec<PointReport>,
    pub verdict: Verdict,
    pub config: ReportConfig,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub variants: Vec<VariantReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Harness configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClaimConfig {
    pub seed: u64,
    pub precision_bits: u32,
    pub tol: f64,
}

impl Default for ClaimConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            precision_bits: 256,
            tol: 1e-10,
        }
    }
}

impl ClaimConfig {
    fn report_config(&self) -> ReportConfig {
        ReportConfig {
            seed: self.seed,
            precision_bits: self.precision_bits,
            tolerances: Tolerances {
                tol: self.tol,
                mc_sigmas: evaluators::MC_SIGMAS,
            },
        }
    }
}

/// Points used when none are given.
pub fn default_points(id: ClaimId) -> Vec<ComplexValue> {
    evaluators::default_points(id)
}

/// Evaluates one claim at `points`, or at its default points when empty.
pub fn evaluate_claim(
    id: ClaimId,
    points: &[ComplexValue],
    config: &ClaimConfig,
) -> Result<ClaimReport> {
    if !(config.tol > 0.0 && config.tol < 1.0) {
        return Err(Error::Domain(format!(
            "tolerance must lie in (0, 1), got {}",
            config.tol
        )));
    }
    let points = if points.is_empty() {
        evaluators::default_points(id)
    } else {
        points.to_vec()
    };
    let out = evaluators::evaluate(id, &points, config)?;
    Ok(ClaimReport {
        claim: id,
        verdict: verdict_of(&out.points),
        points: out.points,
        config: config.report_config(),
        variants: out.variants,
        notes: out.notes,
    })
}

/// The full report document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config: ClaimConfig,
    pub claims: Vec<ClaimReport>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report fields are finite")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Domain(format!("malformed report: {e}")))
    }
}

/// Evaluates `ids` (each at its default points), sorted by id.
pub fn evaluate_claims(ids: &[ClaimId], config: &ClaimConfig) -> Result<Report> {
    let mut ids = ids.to_vec();
    ids.sort();
    ids.dedup();
    let claims = run_all(&ids, config)?;
    Ok(Report {
        version: REPORT_VERSION.to_string(),
        config: *config,
        claims,
    })
}

#[cfg(feature = "parallel")]
fn run_all(ids: &[ClaimId], config: &ClaimConfig) -> Result<Vec<ClaimReport>> {
    use rayon::prelude::*;
    ids.par_iter()
        .map(|&id| evaluate_claim(id, &[], config))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn run_all(ids: &[ClaimId], config: &ClaimConfig) -> Result<Vec<ClaimReport>> {
    ids.iter()
        .map(|&id| evaluate_claim(id, &[], config))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn registry() {
        let list = list_claims();
        assert_eq!(list.len(), 14);
        assert!(list.contains(&(ClaimId::RefinementSeries, "refinement Riemann hypothesis")));
        assert!(list.contains(&(ClaimId::MaslankaFormula, "proposed a new formula")));
        for id in ClaimId::ALL {
            assert_eq!(id.as_str().parse::<ClaimId>().unwrap(), id);
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{id}\""));
        }
    }

    #[test]
    fn verdict_rule() {
        let p =
            |err: f64| PointReport::new(c(1.0, 0.0), c(1.0 + err, 0.0), c(1.0, 0.0), 1e-3).unwrap();
        assert_eq!(verdict_of(&[p(1e-4), p(5e-4)]), Verdict::Supported);
        assert_eq!(verdict_of(&[p(1e-4), p(5e-3)]), Verdict::Inconclusive);
        assert_eq!(verdict_of(&[p(1e-4), p(5e-2)]), Verdict::Refuted);
    }

    #[test]
    fn eta_representation_at_two() {
        let r = evaluate_claim(
            ClaimId::EtaRepresentation,
            &[c(2.0, 0.0)],
            &ClaimConfig::default(),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Supported);
        assert!(r.points[0].rel_err < 1e-10);
    }

    #[test]
    fn out_of_region_points_are_refused() {
        let e = evaluate_claim(
            ClaimId::RefinementSeries,
            &[c(0.7, 1.0)],
            &ClaimConfig::default(),
        )
        .unwrap_err();
        assert!(matches!(e, Error::PointOutOfRegion { .. }));
    }

    #[test]
    fn report_round_trip() {
        let report = evaluate_claims(
            &[ClaimId::EtaRepresentation, ClaimId::PsfGaussian],
            &ClaimConfig::default(),
        )
        .unwrap();
        let text = report.to_json();
        assert!(text.contains("\"re\""));
        assert_eq!(Report::from_json(&text).unwrap().to_json(), text);
        assert_eq!(report.claims[0].claim, ClaimId::PsfGaussian);
    }
}
