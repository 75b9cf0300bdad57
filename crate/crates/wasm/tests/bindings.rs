use std::f64::consts::FRAC_PI_3;

use borsuk_wasm::{analyze, gap_curve, generate};
use serde_json::Value;

#[test]
fn generated_square_analyzes_to_two() {
    let body = generate("square", r#"{"side": 2}"#).unwrap();
    let out: Value = serde_json::from_str(&analyze(&body, 1e-9, 512).unwrap()).unwrap();
    assert_eq!(out["report"]["alpha"], 2);
    assert!((out["report"]["diameter"].as_f64().unwrap() - 8f64.sqrt()).abs() < 1e-12);
    let svg = out["svg"].as_str().unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("id=\"pieces\""));
}

#[test]
fn empty_parameters_take_defaults() {
    let body: Value = serde_json::from_str(&generate("reuleaux", "").unwrap()).unwrap();
    assert_eq!(body["elements"].as_array().unwrap().len(), 3);
}

#[test]
fn errors_are_messages() {
    assert!(generate("nonagon", "{}").is_err());
    assert!(generate("square", "{side: 1}").unwrap_err().starts_with("parameters"));
    assert!(analyze("{}", 1e-9, 512).unwrap_err().contains("schema"));
    assert!(gap_curve(r#"{"type":"disc","center":[0,0],"radius":1}"#, 0).is_err());
}

#[test]
fn disc_gap_curve_is_flat() {
    let curve: Vec<[f64; 2]> =
        serde_json::from_str(&gap_curve(r#"{"type":"disc","center":[0,0],"radius":1}"#, 12).unwrap()).unwrap();
    assert_eq!(curve.len(), 13);
    assert_eq!(curve[0][0], 0.0);
    assert!((curve[12][0] - FRAC_PI_3).abs() < 1e-15);
    assert!(curve.iter().all(|p| p[1].abs() < 1e-9));
}

#[test]
fn gap_curve_changes_sign() {
    // g(π/3) = −g(0) for any body, so the curve must cross zero
    let body = generate("random", r#"{"n": 9, "seed": 3}"#).unwrap();
    let curve: Vec<[f64; 2]> = serde_json::from_str(&gap_curve(&body, 60).unwrap()).unwrap();
    let (first, last) = (curve[0][1], curve[60][1]);
    assert!((first + last).abs() < 1e-9 * (1.0 + first.abs()), "{first} {last}");
}
