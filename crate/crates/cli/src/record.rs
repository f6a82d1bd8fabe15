//! Output records and numeric formatting.

use polycenter::{Error, Point2, Polygon};
use serde_json::{json, Map, Value};

/// Rounds every printed number to a fixed count of significant digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Precision(pub usize);

impl Default for Precision {
    fn default() -> Self {
        Precision(12)
    }
}

impl Precision {
    pub fn round(&self, x: f64) -> f64 {
        if !x.is_finite() {
            return x;
        }
        let r: f64 = format!("{:.*e}", self.0.max(1) - 1, x)
            .parse()
            .expect("formatted float parses");
        if r == 0.0 {
            0.0
        } else {
            r
        }
    }

    /// Non-finite values become `null`.
    pub fn num(&self, x: f64) -> Value {
        serde_json::Number::from_f64(self.round(x)).map_or(Value::Null, Value::Number)
    }

    pub fn nums(&self, xs: &[f64]) -> Value {
        Value::Array(xs.iter().map(|&x| self.num(x)).collect())
    }

    pub fn point(&self, p: Point2) -> Value {
        json!([self.num(p.x), self.num(p.y)])
    }

    pub fn polygon(&self, p: &Polygon) -> Value {
        Value::Array(p.vertices().iter().map(|&v| self.point(v)).collect())
    }
}

/// One center evaluated on one polygon. `point` is set exactly when `error`
/// is not.
#[derive(Debug, Clone)]
pub struct CenterRecord {
    pub name: String,
    pub coords: Option<Vec<f64>>,
    pub weights: Option<Vec<f64>>,
    pub outcome: Result<Point2, Error>,
}

impl CenterRecord {
    pub fn failed(name: impl Into<String>, error: Error) -> Self {
        CenterRecord {
            name: name.into(),
            coords: None,
            weights: None,
            outcome: Err(error),
        }
    }

    pub fn to_value(&self, prec: Precision) -> Value {
        let mut obj = Map::new();
        obj.insert("name".into(), Value::String(self.name.clone()));
        obj.insert(
            "coords".into(),
            self.coords.as_deref().map_or(Value::Null, |c| prec.nums(c)),
        );
        obj.insert(
            "weights".into(),
            self.weights.as_deref().map_or(Value::Null, |w| prec.nums(w)),
        );
        match &self.outcome {
            Ok(p) => {
                obj.insert("point".into(), prec.point(*p));
                obj.insert("error".into(), Value::Null);
            }
            Err(e) => {
                obj.insert("point".into(), Value::Null);
                obj.insert("error".into(), Value::String(e.to_string()));
            }
        }
        Value::Object(obj)
    }
}
