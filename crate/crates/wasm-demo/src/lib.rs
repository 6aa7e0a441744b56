//! Browser bindings for the Schubert engine. Every exported function returns
//! a JSON string; failures come back as `{"error": "..."}`.

use grassmann_roberts::chow::parse_class;
use grassmann_roberts::cone::{cone_chow_dims_in, roberts_report};
use grassmann_roberts::{ChowElement, ChowRing, GrassmannShape, Partition, ReportMode};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Keeps a single click under a few seconds in the browser.
pub const MAX_N: usize = 10;

fn shape(d: usize, n: usize) -> Result<GrassmannShape, String> {
    if n > MAX_N {
        return Err(format!("the demo is limited to n <= {MAX_N}"));
    }
    GrassmannShape::new(d, n).map_err(|e| e.to_string())
}

fn terms(c: &ChowElement) -> Value {
    c.terms()
        .iter()
        .map(|(p, q)| json!({ "partition": p.to_string(), "coefficient": q.to_string(), "diagram": p.young_diagram() }))
        .collect()
}

pub fn roberts_value(d: usize, n: usize) -> Result<Value, String> {
    let shape = shape(d, n)?;
    let report = roberts_report(&ChowRing::new(shape), ReportMode::Full);
    let records: Vec<Value> = report
        .records
        .iter()
        .map(|r| {
            json!({
                "degree": r.degree,
                "index": r.homological_index,
                "todd": r.todd_component.to_string(),
                "tau": r.representative.to_string(),
                "zero": r.is_zero,
            })
        })
        .collect();
    Ok(json!({
        "shape": shape.to_string(),
        "t": shape.dim(),
        "verdict": report.verdict,
        "witness": report.witness,
        "records": records,
    }))
}

pub fn multiply_value(d: usize, n: usize, a: &str, b: &str) -> Result<Value, String> {
    let ring = ChowRing::new(shape(d, n)?);
    let class = |s: &str| -> Result<ChowElement, String> {
        let p: Partition = s.parse().map_err(|e| format!("{e}"))?;
        ring.schubert(p).map_err(|e| e.to_string())
    };
    let (x, y) = (class(a)?, class(b)?);
    let product = ring.multiply(&x, &y).map_err(|e| e.to_string())?;
    let reduced = match product.homogeneous_degree() {
        Some(k) if k >= 1 => Some(ring.reduce_mod_h(&product).map_err(|e| e.to_string())?),
        _ => None,
    };
    Ok(json!({
        "a": x.to_string(),
        "b": y.to_string(),
        "product": product.to_string(),
        "terms": terms(&product),
        "mod_h": reduced.map(|r| json!({ "representative": r.representative.to_string(), "zero": r.is_zero })),
    }))
}

/// Cone Chow dimensions and, if `class` is non-empty, its reduction mod `h`.
pub fn cone_value(d: usize, n: usize, class: &str) -> Result<Value, String> {
    let shape = shape(d, n)?;
    let ring = ChowRing::new(shape);
    let dims = cone_chow_dims_in(&ring).dims;
    let reduction = if class.trim().is_empty() {
        None
    } else {
        let c = parse_class(shape, class).map_err(|e| e.to_string())?;
        let r = ring.reduce_mod_h(&c).map_err(|e| e.to_string())?;
        Some(json!({
            "class": c.to_string(),
            "representative": r.representative.to_string(),
            "terms": terms(&r.representative),
            "zero": r.is_zero,
        }))
    };
    Ok(json!({ "shape": shape.to_string(), "dims": dims, "reduction": reduction }))
}

fn respond(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

#[wasm_bindgen]
pub fn roberts(d: usize, n: usize) -> String {
    respond(roberts_value(d, n))
}

#[wasm_bindgen]
pub fn multiply(d: usize, n: usize, a: &str, b: &str) -> String {
    respond(multiply_value(d, n, a, b))
}

#[wasm_bindgen]
pub fn cone(d: usize, n: usize, class: &str) -> String {
    respond(cone_value(d, n, class))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roberts_reports() {
        let v = roberts_value(2, 5).unwrap();
        assert_eq!(v["verdict"], false);
        assert_eq!(v["witness"], 2);
        assert_eq!(v["records"][1]["tau"], "-1/12·[2]");
        assert_eq!(roberts_value(3, 6).unwrap()["verdict"], true);
    }

    #[test]
    fn products_carry_diagrams() {
        let v = multiply_value(2, 4, "1", "[1]").unwrap();
        assert_eq!(v["product"], "[2] + [1,1]");
        assert_eq!(v["terms"][1]["diagram"], "□\n□");
        // σ₁·σ₁ = h·σ₁
        assert_eq!(v["mod_h"]["zero"], true);
    }

    #[test]
    fn cone_and_reduction() {
        let v = cone_value(2, 4, "").unwrap();
        assert_eq!(v["dims"], json!([0, 0, 0, 1, 0, 1]));
        assert!(v["reduction"].is_null());
        let v = cone_value(2, 5, "[2]:1 [1,1]:1").unwrap();
        assert_eq!(v["reduction"]["zero"], true);
    }

    #[test]
    fn errors_become_json() {
        assert!(roberts(0, 5).contains("\"error\""));
        assert!(roberts(2, 11).contains("n <= 10"));
        assert!(multiply(2, 4, "3", "1").contains("does not fit"));
        assert!(cone(2, 5, "[2] [1]").contains("\"error\""));
    }
}
