//! The output envelope. Values are built as `serde_json::Value`, whose
//! objects keep keys sorted, so parsing and re-serializing is byte-stable.

use grassmann_roberts::{BigRational, ChowElement, GrassmannShape, Partition};
use serde_json::{json, Value};

pub fn rational(q: &BigRational) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

pub fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

/// Terms in basis order.
pub fn class(c: &ChowElement) -> Value {
    Value::Array(
        c.terms()
            .iter()
            .map(|(p, q)| json!({ "partition": partition(p), "coefficient": rational(q) }))
            .collect(),
    )
}

pub fn shape(s: GrassmannShape) -> Value {
    json!({ "d": s.d(), "n": s.n(), "t": s.dim() })
}

pub fn envelope(command: &str, parameters: Value, result: Value) -> Value {
    json!({
        "command": command,
        "parameters": parameters,
        "result": result,
        "engine_version": grassmann_roberts::VERSION,
        "exact_arithmetic": true,
    })
}

pub fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced_with_positive_denominator() {
        let q = BigRational::new((4).into(), (-6).into());
        assert_eq!(rational(&q), json!({ "num": "-2", "den": "3" }));
    }

    #[test]
    fn envelope_round_trips() {
        let s = GrassmannShape::new(2, 5).unwrap();
        let c = ChowElement::special(s, 2).scale(&BigRational::new((-1).into(), 12.into()));
        let text = render(&envelope("x", shape(s), class(&c)));
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(render(&back), text);
        assert!(text.contains("\"exact_arithmetic\": true"));
    }
}
