//! Browser bindings: standard pairs, the GG table and a full verification,
//! each returning the JSON of a single task result.

use adeg::run::{run_script, RunConfig};
use adeg::session::parse_session;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn script(vars: &str, j: &str, i: Option<&str>, task: &str) -> Result<String, String> {
    for s in [vars, j, i.unwrap_or("")] {
        if s.contains([';', '#', '[', ']']) {
            return Err("inputs may not contain ';', '#' or brackets".into());
        }
    }
    let mut out = format!("ring S = Q[{vars}];\nideal J = {j};\n");
    if let Some(i) = i {
        out += &format!("ideal I = {i};\ncertify origin J;\n");
    }
    out += &format!("task {task};\n");
    Ok(out)
}

/// Runs a one-task script and returns the task's result object.
pub fn run_one(vars: &str, j: &str, i: Option<&str>, task: &str) -> Value {
    let res = script(vars, j, i, task)
        .and_then(|text| parse_session(&text).map_err(|e| e.to_string()))
        .and_then(|s| {
            let cfg = RunConfig {
                // No filesystem in the browser; reproducers are dropped.
                cache_dir: Some(".".into()),
                ..RunConfig::default()
            };
            run_script(&s, &cfg).map_err(|e| e.to_string())
        });
    match res {
        Ok(report) => report.to_json()["results"][0].clone(),
        Err(e) => json!({"status": "error", "error": e}),
    }
}

/// Standard pairs and arithmetic degrees of `S/J` for a monomial `J`.
#[wasm_bindgen]
pub fn standard_pairs(vars: &str, j: &str) -> String {
    run_one(vars, j, None, "stdpairs J").to_string()
}

/// Dimensions of the bigraded pieces of `GG_I(S/J)` near the origin.
#[wasm_bindgen]
pub fn gg_table(vars: &str, j: &str, i: &str) -> String {
    run_one(vars, j, Some(i), "gg J I").to_string()
}

/// Every check of the verification record for `(J, I)`.
#[wasm_bindgen]
pub fn verify(vars: &str, j: &str, i: &str) -> String {
    run_one(vars, j, Some(i), "verify J I").to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ops_return_task_results() {
        let v: Value = serde_json::from_str(&standard_pairs("x, y", "x^2, x*y")).unwrap();
        assert_eq!(v["adeg"], json!({"1": 1, "0": 1}));
        let v: Value = serde_json::from_str(&gg_table("x", "0", "x^2")).unwrap();
        assert_eq!(v["relations"], json!(["x^2"]));
        let v: Value = serde_json::from_str(&verify("x, y", "y^2 - x^3", "x, y")).unwrap();
        assert_eq!(v["record"]["pass"], json!(true));
    }

    #[test]
    fn bad_input_is_reported() {
        let v: Value = serde_json::from_str(&standard_pairs("x", "x; task gb J")).unwrap();
        assert_eq!(v["status"], "error");
        let v: Value = serde_json::from_str(&verify("x", "x^2", "z")).unwrap();
        assert_eq!(v["status"], "error");
    }
}
