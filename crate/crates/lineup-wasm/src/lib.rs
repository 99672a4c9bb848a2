//! Browser demo: interactive generation of exclusion-principle systems,
//! membership tests for candidate spectra, and stability lifts, on top of
//! the `lineup` crate. The wasm-bindgen exports wrap plain functions that
//! also run (and are tested) on the host target.

use std::str::FromStr;

use wasm_bindgen::prelude::*;

use lineup::cli::{membership_violations, parse_rational_vector, render_affine};
use lineup::combinatorics::{Params, Statistics};
use lineup::engine::{
    check_weights, default_weight, generate_h_representation, stability_lift, GeneratedSystem,
};
use lineup::Rat;

const MAX_AMBIENT: u128 = 4000;

fn params_checked(statistics: &str, r: u32, n: u32, d: u32) -> Result<Params, String> {
    if d > 16 || n > 16 || r > 10 {
        return Err("demo limits: r <= 10, N <= 16, d <= 16".into());
    }
    let statistics = Statistics::from_str(statistics).map_err(|e| e.to_string())?;
    let params = Params::new(statistics, n, d, r).map_err(|e| e.to_string())?;
    if params.ambient_count() > MAX_AMBIENT {
        return Err(format!(
            "demo limits: configuration count {} exceeds {}",
            params.ambient_count(),
            MAX_AMBIENT
        ));
    }
    Ok(params)
}

fn system_json(system: &GeneratedSystem) -> String {
    let ineqs: Vec<serde_json::Value> = system
        .inequalities
        .iter()
        .map(|i| {
            serde_json::json!({
                "first_r": i.first_r,
                "lhs": i.lhs,
                "rhs": render_affine(&i.rhs_affine),
                "rhs_w": i.rhs_w,
            })
        })
        .collect();
    let vertices: Vec<String> = system
        .occupation_vectors
        .iter()
        .map(|m| format!("({})", m.render_symbolic().join(", ")))
        .collect();
    serde_json::json!({
        "statistics": system.params.statistics.to_string(),
        "r": system.params.r,
        "particles": system.params.n,
        "orbitals": system.params.d,
        "equation": format!("x1 + ... + x{} = {}", system.params.d, system.params.n),
        "vertices": vertices,
        "inequalities": ineqs,
    })
    .to_string()
}

pub fn generate_impl(statistics: &str, r: u32, n: u32, d: u32) -> Result<String, String> {
    let params = params_checked(statistics, r, n, d)?;
    let system = generate_h_representation(&params).map_err(|e| e.to_string())?;
    Ok(system_json(&system))
}

pub fn lift_impl(
    statistics: &str,
    r: u32,
    base_n: u32,
    base_d: u32,
    n: u32,
    d: u32,
) -> Result<String, String> {
    let params = params_checked(statistics, r, base_n, base_d)?;
    if d > 24 || n > 24 {
        return Err("demo limits: lift targets up to N, d <= 24".into());
    }
    let base = generate_h_representation(&params).map_err(|e| e.to_string())?;
    let lifted = stability_lift(&base, n, d).map_err(|e| e.to_string())?;
    Ok(system_json(&lifted))
}

pub fn membership_impl(
    statistics: &str,
    r: u32,
    n: u32,
    d: u32,
    weights: &str,
    spectrum: &str,
) -> Result<String, String> {
    let params = params_checked(statistics, r, n, d)?;
    let w: Vec<Rat> = if weights.trim().is_empty() {
        default_weight(r as usize)
    } else {
        parse_rational_vector(weights).map_err(|e| e.to_string())?
    };
    check_weights(&w, r as usize).map_err(|e| e.to_string())?;
    let x = parse_rational_vector(spectrum).map_err(|e| e.to_string())?;
    if x.len() != d as usize {
        return Err(format!("the spectrum needs {} entries, got {}", d, x.len()));
    }
    let sum: Rat = x.iter().cloned().sum();
    let expected = Rat::from(lineup::Int::from(n as i64));
    if sum != expected {
        return Err(format!(
            "the equation x1 + ... + x{d} = {n} fails: the sum is {sum}"
        ));
    }
    let system = generate_h_representation(&params).map_err(|e| e.to_string())?;
    let violations = membership_violations(&system, &x, &w);
    let weights_used: Vec<String> = w.iter().map(|q| q.to_string()).collect();
    Ok(serde_json::json!({
        "inside": violations.is_empty(),
        "weights": weights_used,
        "violations": violations,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn generate(statistics: &str, r: u32, n: u32, d: u32) -> Result<String, JsValue> {
    generate_impl(statistics, r, n, d).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn lift(
    statistics: &str,
    r: u32,
    base_n: u32,
    base_d: u32,
    n: u32,
    d: u32,
) -> Result<String, JsValue> {
    lift_impl(statistics, r, base_n, base_d, n, d).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn membership(
    statistics: &str,
    r: u32,
    n: u32,
    d: u32,
    weights: &str,
    spectrum: &str,
) -> Result<String, JsValue> {
    membership_impl(statistics, r, n, d, weights, spectrum).map_err(|e| JsValue::from_str(&e))
}

/// The stable base-case parameters for a lineup length, exposed so the page
/// can prefill the lift form.
#[wasm_bindgen]
pub fn base_case(statistics: &str, r: u32) -> Result<String, JsValue> {
    let statistics =
        Statistics::from_str(statistics).map_err(|e| JsValue::from_str(&e.to_string()))?;
    let (n, d) = lineup::cli::base_case_params(statistics, r);
    Ok(format!("{n},{d}"))
}
