//! JSON encodings of numbers, vertices and edges.

use aztec::{Edge, GaussRational, KCoord, C64};
use serde_json::{json, Value};

/// Integral values print as JSON integers; non-finite values as `null`.
pub fn real(x: f64) -> Value {
    if !x.is_finite() {
        Value::Null
    } else if x.fract() == 0.0 && x.abs() < 9.0e15 {
        json!(x as i64)
    } else {
        json!(x)
    }
}

pub fn exact_real(x: &num_rational::BigRational) -> Value {
    match (x.is_integer(), i64::try_from(x.to_integer())) {
        (true, Ok(v)) => json!(v),
        _ => real(num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)),
    }
}

/// A scalar from one of the two backends as `{"re", "im"}`, plus the exact
/// rational parts when available.
pub trait ScalarJson {
    fn to_json(&self) -> Value;
}

impl ScalarJson for C64 {
    fn to_json(&self) -> Value {
        json!({ "re": real(self.re), "im": real(self.im) })
    }
}

impl ScalarJson for GaussRational {
    fn to_json(&self) -> Value {
        json!({
            "re": exact_real(&self.re),
            "im": exact_real(&self.im),
            "exact": { "re": self.re.to_string(), "im": self.im.to_string() },
        })
    }
}

pub fn complex<F: ScalarJson>(v: &F) -> Value {
    v.to_json()
}

pub fn vertex_json(v: KCoord) -> Value {
    json!([v.x1, v.x2])
}

pub fn edge_json(e: &Edge) -> Value {
    json!({ "black": vertex_json(e.black), "white": vertex_json(e.white) })
}
