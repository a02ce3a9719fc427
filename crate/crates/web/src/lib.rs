//! Browser bindings for the static demo page in `www/`.
//!
//! Every export takes plain strings and returns a JSON string: either the
//! result object or `{"error": "..."}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use dyckflip::bijection::{classify, phi, phi_inverse};
use dyckflip::ops::{apply_ops, parse_ops};
use dyckflip::render::{render, RenderSpec};
use dyckflip::{DyckPath, PathResult};

fn respond(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn parse(word: &str) -> Result<DyckPath, String> {
    word.trim().to_uppercase().parse().map_err(|e: dyckflip::Error| e.to_string())
}

fn describe(path: &DyckPath, bounce: bool, floating: bool) -> Value {
    let spec = RenderSpec {
        show_bounce: bounce,
        show_floating: floating,
        ..RenderSpec::default()
    };
    json!({
        "record": path.record(),
        "grid": render(path, &spec),
        "class": classify(path),
    })
}

/// Statistics, classification and a text grid for a path.
#[wasm_bindgen]
pub fn inspect(word: &str, bounce: bool, floating: bool) -> String {
    respond(parse(word).map(|p| describe(&p, bounce, floating)))
}

/// Applies an operator word such as `"S1,U2,A4,C3^-1,B1:2"`, left to right.
#[wasm_bindgen]
pub fn apply(word: &str, ops: &str) -> String {
    respond((|| {
        let p = parse(word)?;
        let ops = parse_ops(ops).map_err(|e| e.to_string())?;
        Ok(match apply_ops(&p, &ops).map_err(|e| e.to_string())? {
            PathResult::Path(q) => describe(&q, false, true),
            PathResult::Bottom => json!({ "bottom": true }),
        })
    })())
}

/// The area/bounce flipping bijection or its inverse.
#[wasm_bindgen]
pub fn flip(word: &str, inverse: bool) -> String {
    respond((|| {
        let p = parse(word)?;
        let q = if inverse { phi_inverse(&p) } else { phi(&p) }.map_err(|e| e.to_string())?;
        Ok(describe(&q, false, true))
    })())
}
