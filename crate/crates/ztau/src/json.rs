//! JSON shapes for CLI output: elements as [m, n] pairs, triple records,
//! shift results and search reports. Coefficients are emitted as JSON
//! numbers at full precision (serde_json's arbitrary-precision mode), so
//! nothing is truncated on the way out.

use crate::fermat::SearchReport;
use crate::ring::RingElement;
use crate::triples::{Parametrization, PowerTriple};
use crate::window_shift::ShiftResult;
use num_bigint::BigInt;
use serde_json::{json, Number, Value};
use std::str::FromStr;

fn number(i: &BigInt) -> Value {
    Value::Number(Number::from_str(&i.to_string()).expect("integer literal is a JSON number"))
}

/// `[m, n]`
pub fn element_value(x: &RingElement) -> Value {
    Value::Array(vec![number(x.m()), number(x.n())])
}

/// `{"x": [m,n], "y": [m,n], "z": [m,n], "k": k}`
pub fn triple_value(t: &PowerTriple) -> Value {
    json!({
        "x": element_value(&t.x),
        "y": element_value(&t.y),
        "z": element_value(&t.z),
        "k": t.k,
    })
}

/// `{"l": .., "m": .., "n": .., "sign": ±1, "swapped": bool}`
pub fn parametrization_value(p: &Parametrization) -> Value {
    json!({
        "l": element_value(&p.l),
        "m": element_value(&p.m),
        "n": element_value(&p.n),
        "sign": p.sign(),
        "swapped": p.swapped,
    })
}

/// `{"N": n, "triple": .., "sigma": [three 6-place decimal strings]}`
pub fn shift_value(r: &ShiftResult) -> Value {
    let sigma: Vec<Value> = r
        .sigma_values
        .iter()
        .map(|s| Value::String(s.decimal_string(6)))
        .collect();
    json!({
        "N": r.exponent,
        "triple": triple_value(&r.shifted),
        "sigma": sigma,
    })
}

/// `{"k": .., "bound": .., "pairs_tested": .., "elapsed_ms": .., "solutions": [..]}`
pub fn report_value(r: &SearchReport) -> Value {
    let solutions: Vec<Value> = r.solutions.iter().map(triple_value).collect();
    json!({
        "k": r.config.k,
        "bound": r.config.bound,
        "pairs_tested": r.pairs_tested,
        "elapsed_ms": r.elapsed.as_millis() as u64,
        "solutions": solutions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_round_trips_through_json_text() {
        let huge = RingElement::new(
            BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap(),
            BigInt::from(-7),
        );
        let text = element_value(&huge).to_string();
        assert_eq!(text, "[123456789012345678901234567890,-7]");
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back[0].to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn triple_record_shape() {
        let t = PowerTriple::new(
            RingElement::new(4, 3),
            RingElement::new(5, 6),
            RingElement::new(6, 6),
            3,
        );
        let v = triple_value(&t);
        assert_eq!(v["x"], json!([4, 3]));
        assert_eq!(v["y"], json!([5, 6]));
        assert_eq!(v["z"], json!([6, 6]));
        assert_eq!(v["k"], json!(3));
    }
}
