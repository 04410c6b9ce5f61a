//! Browser bindings. Every export returns a JSON string; failures come back as
//! `{"error": "..."}` so the page never has to catch.

use ccker::generate::{random_urfc, rng};
use ccker::oracles::solve_urfc;
use ccker::polykernel::kernelize_urfc;
use ccker::relations::{is_permutation_invariant, make_nur, nur_or_witness, r_clique, NurItem, UrfcShape};
use ccker::Limits;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest `q^(d*l)` the page will materialize to test invariance.
const MATERIALIZE_CAP: u64 = 1 << 20;
/// Largest instance whose solutions are counted before and after the kernel.
const ORACLE_MAX_N: usize = 9;

fn render(v: Result<Value, String>) -> String {
    match v {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

/// Exponent, case and OR witnesses for the `(d, l, q)` shape.
#[wasm_bindgen]
pub fn analyze_shape(d: usize, l: usize, q: usize) -> String {
    render(shape_report(d, l, q))
}

pub fn shape_report(d: usize, l: usize, q: usize) -> Result<Value, String> {
    if q > ccker::MAX_COLORS {
        return Err(format!("q must be at most {}", ccker::MAX_COLORS));
    }
    let shape = UrfcShape::new(d, l, q).map_err(|e| e.to_string())?;
    let mut witnesses = Vec::new();
    for item in NurItem::ALL {
        if !item.applies(d, l, q) || item.arity(d, l) == 0 {
            continue;
        }
        let w = nur_or_witness(d, l, q, item).map_err(|e| e.to_string())?;
        witnesses.push(json!({
            "item": item.index(),
            "arity": w.arity(),
            "positions": w.positions.iter().map(|p| p + 1).collect::<Vec<_>>(),
            "alpha": w.alpha,
            "beta": w.beta,
        }));
    }
    let size = (q as u64).checked_pow(shape.arity() as u32).filter(|&s| s <= MATERIALIZE_CAP);
    let (tuples, invariant) = match size {
        Some(_) => {
            let rel = make_nur(d, l, q, &Limits::default()).map_err(|e| e.to_string())?;
            (json!(rel.len()), json!(is_permutation_invariant(&rel)))
        }
        None => (Value::Null, Value::Null),
    };
    Ok(json!({
        "d": d, "l": l, "q": q,
        "arity": shape.arity(),
        "eta": shape.eta(),
        "case": format!("{:?}", shape.eta_case()).to_lowercase(),
        "tuples": tuples,
        "invariant": invariant,
        "witnesses": witnesses,
    }))
}

/// `r_clique(q, t)` for `3 <= q <= q_max` and `1 <= t <= t_max`; `null` where `t > q`.
#[wasm_bindgen]
pub fn clique_exponents(q_max: usize, t_max: usize) -> String {
    render(clique_table(q_max, t_max))
}

pub fn clique_table(q_max: usize, t_max: usize) -> Result<Value, String> {
    if !(3..=ccker::MAX_COLORS).contains(&q_max) || t_max == 0 {
        return Err(format!("need 3 <= q_max <= {} and t_max >= 1", ccker::MAX_COLORS));
    }
    let rows: Vec<Value> = (3..=q_max)
        .map(|q| {
            let cells: Vec<Value> = (1..=t_max).map(|t| r_clique(q, t).map_or(Value::Null, |r| json!(r))).collect();
            json!({ "q": q, "r": cells })
        })
        .collect();
    Ok(json!({ "t_max": t_max, "rows": rows }))
}

/// Kernelizes a seeded random URFC instance and, when small, checks the
/// solution counts on both sides.
#[wasm_bindgen]
pub fn kernelize_random(n: usize, d: usize, l: usize, q: usize, density: f64, seed: u32) -> String {
    render(kernel_demo(n, d, l, q, density, seed))
}

pub fn kernel_demo(n: usize, d: usize, l: usize, q: usize, density: f64, seed: u32) -> Result<Value, String> {
    if !(0.0..=1.0).contains(&density) {
        return Err("density must lie in [0, 1]".into());
    }
    if n > 14 || d * l > 8 {
        return Err("keep n <= 14 and d*l <= 8 in the browser".into());
    }
    UrfcShape::new(d, l, q).map_err(|e| e.to_string())?;
    let inst = random_urfc(n, d, l, 0.15, density, &mut rng(seed as u64));
    let k = kernelize_urfc(&inst, q).map_err(|e| e.to_string())?;
    let fields: serde_json::Map<String, Value> = k.meta.fields().into_iter().map(|(k, v)| (k, Value::String(v))).collect();
    let kept: Vec<Vec<usize>> = k.instance.block.tuples().take(40).map(|t| t.iter().map(|v| v + 1).collect()).collect();
    let mut out = json!({
        "n": n,
        "edges": inst.graph.m(),
        "input_tuples": inst.block.len(),
        "output_tuples": k.instance.block.len(),
        "meta": fields,
        "kept_sample": kept,
    });
    if n <= ORACLE_MAX_N {
        let limits = Limits::default();
        let before = solve_urfc(&inst, q, &limits).map_err(|e| e.to_string())?;
        let after = solve_urfc(&k.instance, q, &limits).map_err(|e| e.to_string())?;
        out["solutions_before"] = json!(before.len());
        out["solutions_after"] = json!(after.len());
        out["answers_agree"] = json!(before.is_empty() == after.is_empty());
    }
    Ok(out)
}
