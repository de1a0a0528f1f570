//! Browser bindings: build an example, check a relation, classify.
//!
//! Every function takes and returns JSON text. Errors come back as
//! `{"error": "..."}` so the page never has to catch exceptions.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use ocrlab::classify::classify;
use ocrlab::decompose::{standard_example, STANDARD_NAMES};
use ocrlab::io::{parse_semigroup, to_pretty_json};
use ocrlab::terms::{letter_name, parse_relation};
use ocrlab::varieties::satisfies;

fn reply(r: ocrlab::Result<Value>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e.to_string() })).to_string()
}

/// Names accepted by [`example`], as a JSON array.
#[wasm_bindgen]
pub fn example_names() -> String {
    json!(STANDARD_NAMES).to_string()
}

/// A built-in example in the semigroup file format.
#[wasm_bindgen]
pub fn example(name: &str) -> String {
    match standard_example(name) {
        Ok(a) => to_pretty_json(&a),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

/// Decide `relation` on the semigroup in `file`.
#[wasm_bindgen]
pub fn check(relation: &str, file: &str) -> String {
    reply((|| {
        let r = parse_relation(relation)?;
        let a = parse_semigroup(file)?;
        let s = satisfies(&a, &r)?;
        let witness = s.counterexample.map(|c| {
            let assignment: serde_json::Map<String, Value> = c
                .assignment
                .iter()
                .map(|&(l, e)| (letter_name(l), json!(a.sgp().label(e))))
                .collect();
            json!({ "assignment": assignment, "description": c.describe(&a) })
        });
        Ok(json!({ "relation": r.to_string(), "holds": s.holds, "counterexample": witness }))
    })())
}

/// Classification report for the pseudovariety generated by one semigroup.
#[wasm_bindgen]
pub fn classify_file(file: &str) -> String {
    reply((|| {
        let a = parse_semigroup(file)?;
        let report = classify(&[a], 2)?;
        Ok(serde_json::to_value(&report).expect("serializable"))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_through_text() {
        let u = example("U+");
        let v: Value = serde_json::from_str(&check("x <= x y", &u)).unwrap();
        assert_eq!(v["holds"], true);
        let v: Value = serde_json::from_str(&check("x y <= x", &u)).unwrap();
        assert_eq!(v["holds"], false);
        let v: Value = serde_json::from_str(&classify_file(&u)).unwrap();
        assert_eq!(v["nocr_triple"]["sl"], "SlPlus");
    }

    #[test]
    fn errors_are_json() {
        let v: Value = serde_json::from_str(&check("x <=", "{}")).unwrap();
        assert!(v["error"].is_string());
        let v: Value = serde_json::from_str(&example("nope")).unwrap();
        assert!(v["error"].is_string());
        let names: Vec<String> = serde_json::from_str(&example_names()).unwrap();
        assert!(names.contains(&"U+".to_string()));
    }
}
