//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Each export takes a composition string such as `"2,1,3"` and returns a
//! JSON document. The plain Rust functions behind them are public so they
//! can be tested natively.

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use compoly::ehrhart_zeta::{ehrhart_polynomial, ehrhart_sp, hstar_from_series};
use compoly::lattice_enum::{for_each_point, gamma_direct, gamma_path, h_vector, to_path, LatticePoint};
use compoly::polynomial::sturm_report;
use compoly::{Composition, ExactPolynomial, Limits};

/// Largest `n` the page will analyze; keeps each click well under a second.
pub const ANALYZE_MAX_N: usize = 8;
/// Largest `n` for which every lattice path is drawn.
pub const PATHS_MAX_N: usize = 7;

fn parse(text: &str, max_n: usize) -> Result<Composition, String> {
    let sigma = Composition::parse(text).map_err(|e| e.to_string())?;
    if sigma.n() > max_n {
        return Err(format!("n = {} is too large for the demo (at most {max_n})", sigma.n()));
    }
    Ok(sigma)
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Bisects a root of the squarefree `p` inside `(a, b]` to about 1e-12.
fn refine_root(p: &ExactPolynomial, a: &BigRational, b: &BigRational) -> f64 {
    if p.eval(b).is_zero() {
        return to_f64(b);
    }
    let (mut lo, mut hi) = (a.clone(), b.clone());
    let hi_negative = p.eval(&hi).is_negative();
    for _ in 0..48 {
        let mid = (&lo + &hi) / q(2);
        let v = p.eval(&mid);
        if v.is_zero() {
            return to_f64(&mid);
        }
        if v.is_negative() == hi_negative {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    to_f64(&((lo + hi) / q(2)))
}

/// h-vector, γ-vector, Ehrhart and h*-polynomials, and the real roots of
/// the Ehrhart polynomial.
pub fn analyze_json(text: &str) -> Result<Value, String> {
    let sigma = parse(text, ANALYZE_MAX_N)?;
    let limits = Limits::default();
    let err = |e: compoly::Error| e.to_string();
    let h = h_vector(&sigma, &limits).map_err(err)?;
    let gamma = gamma_direct(&sigma, &limits).map_err(err)?;
    let ehr = ehrhart_polynomial(&sigma, &limits).map_err(err)?;
    let hstar = hstar_from_series(&sigma, &limits).map_err(err)?;
    let report = sturm_report(&ehr, &q(-1), &q(0)).map_err(err)?;
    let sq = ehr.squarefree_part();
    let roots: Vec<f64> = report
        .isolating_intervals
        .iter()
        .map(|(a, b)| refine_root(&sq, a, b))
        .collect();
    Ok(json!({
        "composition": sigma.parts(),
        "n": sigma.n(),
        "h": h.values(),
        "h_total": h.total(),
        "gamma": gamma.values(),
        "ehrhart": ehr.pretty("t"),
        "ehrhart_coeffs": ehr.coeffs().iter().map(to_f64).collect::<Vec<_>>(),
        "hstar": hstar.pretty("t"),
        "roots": roots,
        "all_real": report.all_real,
        "real_and_inside": report.real_and_inside(),
    }))
}

/// Vertex lists of `Γ_σ` and of every lattice path below it, with each
/// path's `EN`-corner count.
pub fn paths_json(text: &str) -> Result<Value, String> {
    let sigma = parse(text, PATHS_MAX_N)?;
    let mut paths = Vec::new();
    for_each_point(&sigma, |a| {
        let p = to_path(&LatticePoint::new(a.to_vec())).expect("points of P_σ have sum at most n");
        paths.push(json!({
            "point": a,
            "corners": p.en_corners(),
            "vertices": p.vertices(),
        }));
    });
    let gamma = gamma_path(&sigma);
    Ok(json!({
        "composition": sigma.parts(),
        "n": sigma.n(),
        "boundary": gamma.vertices(),
        "boundary_word": gamma.to_string(),
        "paths": paths,
    }))
}

/// Exact lattice-point count of the `m`-th dilate, as a decimal string.
pub fn dilate_count(text: &str, m: usize) -> Result<String, String> {
    let sigma = parse(text, ANALYZE_MAX_N)?;
    ehrhart_sp(&sigma, m, &Limits::default())
        .map(|v| v.to_string())
        .map_err(|e| e.to_string())
}

fn to_js(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn analyze(composition: &str) -> Result<String, JsError> {
    to_js(analyze_json(composition))
}

#[wasm_bindgen]
pub fn lattice_paths(composition: &str) -> Result<String, JsError> {
    to_js(paths_json(composition))
}

#[wasm_bindgen]
pub fn count_dilate(composition: &str, m: usize) -> Result<String, JsError> {
    dilate_count(composition, m).map_err(|e| JsError::new(&e))
}
