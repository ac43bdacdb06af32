//! Browser bindings: build a family's coloring, verify a coloring against
//! two targets, and blow up a bundled witness. Everything crosses the
//! boundary as JSON text.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use ramcert::certify;
use ramcert::constructions::{Block, FamilySpec};
use ramcert::witnesses;
use ramcert::{Graph, PatternSpec, TwoColoring};

#[derive(Serialize)]
struct Drawing {
    title: String,
    order: usize,
    red_edges: Vec<(usize, usize)>,
    blocks: Vec<Block>,
    claimed_bound: Option<usize>,
    red_target: Option<PatternSpec>,
    blue_target: Option<PatternSpec>,
    rbc: String,
}

fn js_err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> Result<String, JsValue> {
    serde_json::to_string(v).map_err(js_err)
}

/// `construct("fan:7,6")` → drawing JSON with the red edge list and blocks.
#[wasm_bindgen]
pub fn construct(family: &str) -> Result<String, JsValue> {
    let built = family
        .parse::<FamilySpec>()
        .and_then(|f| f.build())
        .map_err(js_err)?;
    let c = built.construction;
    to_json(&Drawing {
        title: c.spec.clone(),
        order: c.order,
        red_edges: built.coloring.red().edges(),
        blocks: c.blocks,
        claimed_bound: Some(c.claimed_bound),
        red_target: Some(c.red_target),
        blue_target: Some(c.blue_target),
        rbc: built.coloring.to_rbc(),
    })
}

/// Verifies `.rbc` text against two pattern strings; returns certificate JSON.
#[wasm_bindgen]
pub fn verify(rbc: &str, red: &str, blue: &str) -> Result<String, JsValue> {
    let (coloring, _) = TwoColoring::parse_rbc(rbc).map_err(js_err)?;
    let red: PatternSpec = red.parse().map_err(js_err)?;
    let blue: PatternSpec = blue.parse().map_err(js_err)?;
    Ok(certify::verify(&coloring, red, blue).to_json())
}

/// Red coloring `W[K_k]` for a registry witness such as `k3k5`.
#[wasm_bindgen]
pub fn blowup(witness: &str, k: usize) -> Result<String, JsValue> {
    if k == 0 {
        return Err(js_err("factor must be at least 1"));
    }
    let g = witnesses::resolve_witness(witness).map_err(js_err)?;
    let b = g.blow_up(&Graph::complete(k));
    let blocks = (0..g.order())
        .map(|v| Block {
            name: format!("w{v}"),
            start: k * v,
            len: k,
        })
        .collect();
    let coloring = TwoColoring::from_red(b);
    to_json(&Drawing {
        title: format!("{witness}[K{k}]"),
        order: coloring.order(),
        red_edges: coloring.red().edges(),
        blocks,
        claimed_bound: None,
        red_target: None,
        blue_target: None,
        rbc: coloring.to_rbc(),
    })
}

/// Bundled witness keys, as a JSON array of strings.
#[wasm_bindgen]
pub fn witness_keys() -> String {
    let keys: Vec<String> = witnesses::bundled_keys()
        .iter()
        .map(|k| k.to_string())
        .collect();
    serde_json::to_string(&keys).expect("strings serialize")
}
