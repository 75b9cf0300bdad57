//! Browser bindings: generate a gallery shape, analyze a body with a figure,
//! and sample the hexagon side-difference curve used by the three-piece
//! construction.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_3;

use borsuk_core::gallery::named_shape;
use borsuk_core::geometry::ConvexBody;
use borsuk_core::partition::pal_gap;
use borsuk_core::report::{analyze_body, AnalysisOptions, AnalysisReport};
use borsuk_core::svg::render;
use serde::Serialize;
use wasm_bindgen::prelude::*;

fn parse_body(body_json: &str) -> Result<ConvexBody, String> {
    ConvexBody::from_json(body_json).map_err(|e| e.to_string())
}

/// Body JSON for a named shape; `params_json` is an object of numbers, possibly empty.
pub fn generate(name: &str, params_json: &str) -> Result<String, String> {
    let params: BTreeMap<String, f64> = if params_json.trim().is_empty() {
        BTreeMap::new()
    } else {
        serde_json::from_str(params_json).map_err(|e| format!("parameters: {e}"))?
    };
    let shape = named_shape(name, &params).map_err(|e| e.to_string())?;
    Ok(shape.body.to_json())
}

#[derive(Serialize)]
struct AnalyzeOutput {
    report: AnalysisReport,
    svg: String,
}

/// `{"report": …, "svg": "…"}` for a body in the JSON body schema.
pub fn analyze(body_json: &str, eps_rel: f64, samples: usize) -> Result<String, String> {
    let body = parse_body(body_json)?;
    let opts = AnalysisOptions { eps_rel, samples, ..Default::default() };
    let out = analyze_body(&body, &opts).map_err(|e| e.to_string())?;
    let svg = render(&body, Some(&out.analysis), out.partition.as_ref());
    serde_json::to_string(&AnalyzeOutput { report: out.report, svg }).map_err(|e| e.to_string())
}

/// `[[theta, g(theta)], …]` at `steps + 1` evenly spaced angles over `[0, π/3]`.
pub fn gap_curve(body_json: &str, steps: usize) -> Result<String, String> {
    if steps == 0 {
        return Err("steps must be positive".into());
    }
    let outline = parse_body(body_json)?.outline();
    let curve: Vec<[f64; 2]> = (0..=steps)
        .map(|k| {
            let theta = FRAC_PI_3 * k as f64 / steps as f64;
            [theta, pal_gap(&outline, theta)]
        })
        .collect();
    serde_json::to_string(&curve).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = generateShape)]
pub fn generate_shape(name: &str, params_json: &str) -> Result<String, JsError> {
    generate(name, params_json).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = analyzeBody)]
pub fn analyze_body_json(body_json: &str, eps_rel: f64, samples: usize) -> Result<String, JsError> {
    analyze(body_json, eps_rel, samples).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = gapCurve)]
pub fn gap_curve_json(body_json: &str, steps: usize) -> Result<String, JsError> {
    gap_curve(body_json, steps).map_err(|e| JsError::new(&e))
}
