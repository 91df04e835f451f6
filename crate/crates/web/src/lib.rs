//! Browser bindings: zeta by several representations, the critical-line zero
//! scan, and Lévy fractional moments. Every call returns a JSON string.

use num_complex::Complex64;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;
use zetalab::claims::{
    binomial_series_partials, critical_zero_scan, refinement_series, BinomialCoefficients,
};
use zetalab::continuation::{zeta_via_theta_quotient, PoleTerm};
use zetalab::levy::{levy_fractional_moment, levy_moment_mc, FractionalMoment};
use zetalab::reference::{eta, zeta_anywhere};
use zetalab::SeedValue;

const MASLANKA_TERMS: usize = 128;
/// Keeps a single call responsive in the page.
pub const MAX_SAMPLES: usize = 2_000_000;

fn pair(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn zeta_by(s: Complex64, method: &str) -> Result<Complex64, String> {
    let e = |e: zetalab::Error| e.to_string();
    match method {
        "eta" if s.re > 0.0 => {
            let denom = 1.0 - (Complex64::new(2f64.ln(), 0.0) * (1.0 - s)).exp();
            Ok(eta(s).map_err(e)? / denom)
        }
        "eta" => Err("the eta representation needs Re s > 0".into()),
        "continuation" => Ok(zeta_via_theta_quotient(s, PoleTerm::Corrected, 1e-10)
            .map_err(e)?
            .value),
        "maslanka" => {
            let p =
                binomial_series_partials(s, MASLANKA_TERMS, BinomialCoefficients::Literature, 256)
                    .map_err(e)?;
            Ok(p[MASLANKA_TERMS])
        }
        "refinement" if s.re > 0.0 && s.re < 0.5 => {
            Ok(1.0 / refinement_series(s, 1e-10).map_err(e)?.0)
        }
        "refinement" => Err("the refinement series is stated for 0 < Re s < 1/2".into()),
        other => Err(format!("unknown method {other:?}")),
    }
}

/// `{method, value, reference, abs_diff}` or an error message.
pub fn zeta_json(re: f64, im: f64, method: &str) -> Result<String, String> {
    let s = Complex64::new(re, im);
    let value = zeta_by(s, method)?;
    let reference = zeta_anywhere(s).map_err(|e| e.to_string())?;
    Ok(json!({
        "method": method,
        "value": pair(value),
        "reference": pair(reference),
        "abs_diff": (value - reference).norm(),
    })
    .to_string())
}

/// `{zeros: [t...]}` for sign changes of ζ*(1/2 + it) on `[from, to]`.
pub fn zeros_json(from: f64, to: f64, step: f64) -> Result<String, String> {
    let zeros = critical_zero_scan(from, to, step).map_err(|e| e.to_string())?;
    Ok(json!({ "zeros": zeros }).to_string())
}

/// Monte Carlo and closed-form `E[L^u]` with `y0 = 1`.
pub fn levy_json(u: f64, samples: usize, seed: u64) -> Result<String, String> {
    if samples > MAX_SAMPLES {
        return Err(format!("at most {MAX_SAMPLES} samples"));
    }
    let e = levy_moment_mc(u, 1.0, samples, SeedValue(seed)).map_err(|e| e.to_string())?;
    let exact = match levy_fractional_moment(u, 1.0).map_err(|e| e.to_string())? {
        FractionalMoment::Finite { value } => json!(value),
        FractionalMoment::Divergent { .. } => Value::Null,
    };
    let prefixes: Vec<Value> = e
        .diagnostic
        .iter()
        .map(|(n, m, se)| json!({ "n": n, "mean": m, "std_error": se }))
        .collect();
    Ok(json!({
        "mean": e.mean,
        "std_error": e.std_error,
        "closed_form": exact,
        "tail_index": e.tail_index.map(|(a, se)| json!({ "alpha": a, "std_error": se, "exact": 0.5 / u })),
        "divergence_flag": e.divergence_flag,
        "prefixes": prefixes,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn zeta(re: f64, im: f64, method: &str) -> Result<String, JsError> {
    zeta_json(re, im, method).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn zeros(from: f64, to: f64, step: f64) -> Result<String, JsError> {
    zeros_json(from, to, step).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn levy(u: f64, samples: usize, seed: u64) -> Result<String, JsError> {
    levy_json(u, samples, seed).map_err(|e| JsError::new(&e))
}
