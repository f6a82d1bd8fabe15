//! The polygon file format.
//!
//! ```json
//! { "name": "square", "vertices": [[0, 0], [1, 0], [1, 1], [0, 1]] }
//! { "name": "square", "distances": [[0, 1, 1.414, 1], ...] }
//! ```
//!
//! Exactly one of `vertices` and `distances` must be present. Numbers are
//! written in shortest round-trip form, so `write(read(x))` keeps every
//! value bit for bit.

use polycenter::distance::reconstruct;
use polycenter::{DistanceMatrix, Point2, Polygon};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{path}: {message}")]
pub struct SchemaError {
    /// JSON-path style location, e.g. `$.vertices[2][1]`.
    pub path: String,
    pub message: String,
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> SchemaError {
    SchemaError {
        path: path.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Geometry {
    Vertices(Polygon),
    Distances(DistanceMatrix),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolygonDocument {
    pub name: String,
    pub geometry: Geometry,
}

impl PolygonDocument {
    pub fn from_polygon(name: impl Into<String>, polygon: Polygon) -> Self {
        PolygonDocument {
            name: name.into(),
            geometry: Geometry::Vertices(polygon),
        }
    }

    pub fn parse(text: &str) -> Result<Self, SchemaError> {
        let root: Value = serde_json::from_str(text).map_err(|e| schema("$", format!("malformed JSON: {e}")))?;
        let obj = root.as_object().ok_or_else(|| schema("$", "expected an object"))?;
        for key in obj.keys() {
            if !matches!(key.as_str(), "name" | "vertices" | "distances") {
                return Err(schema(format!("$.{key}"), "unknown field"));
            }
        }
        let name = match obj.get("name") {
            Some(Value::String(s)) => s.clone(),
            Some(_) => return Err(schema("$.name", "expected a string")),
            None => return Err(schema("$.name", "missing field")),
        };
        let geometry = match (obj.get("vertices"), obj.get("distances")) {
            (Some(_), Some(_)) => return Err(schema("$", "give either `vertices` or `distances`, not both")),
            (None, None) => return Err(schema("$", "one of `vertices` or `distances` is required")),
            (Some(v), None) => Geometry::Vertices(parse_vertices(v)?),
            (None, Some(d)) => Geometry::Distances(parse_distances(d)?),
        };
        Ok(PolygonDocument { name, geometry })
    }

    pub fn to_value(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("name".into(), Value::String(self.name.clone()));
        match &self.geometry {
            Geometry::Vertices(p) => {
                obj.insert(
                    "vertices".into(),
                    p.vertices().iter().map(|v| json!([v.x, v.y])).collect(),
                );
            }
            Geometry::Distances(d) => {
                obj.insert("distances".into(), json!(d.rows()));
            }
        }
        Value::Object(obj)
    }

    pub fn write(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("finite values serialize");
        s.push('\n');
        s
    }

    /// The vertex form, reconstructing from distances when needed.
    pub fn polygon(&self) -> polycenter::Result<Polygon> {
        match &self.geometry {
            Geometry::Vertices(p) => Ok(p.clone()),
            Geometry::Distances(d) => Ok(reconstruct(d)?.polygon),
        }
    }
}

fn number(v: &Value, path: &str) -> Result<f64, SchemaError> {
    let x = v.as_f64().ok_or_else(|| schema(path, "expected a number"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(schema(path, "number is not finite"))
    }
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, SchemaError> {
    v.as_array().ok_or_else(|| schema(path, "expected an array"))
}

fn parse_vertices(v: &Value) -> Result<Polygon, SchemaError> {
    let items = array(v, "$.vertices")?;
    if items.len() < 3 {
        return Err(schema(
            "$.vertices",
            format!("need at least 3 vertices, got {}", items.len()),
        ));
    }
    let mut pts = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        let path = format!("$.vertices[{i}]");
        let pair = array(item, &path)?;
        if pair.len() != 2 {
            return Err(schema(
                path,
                format!("expected an [x, y] pair, got {} numbers", pair.len()),
            ));
        }
        pts.push(Point2::new(
            number(&pair[0], &format!("{path}[0]"))?,
            number(&pair[1], &format!("{path}[1]"))?,
        ));
    }
    Polygon::new(pts).map_err(|e| schema("$.vertices", e.to_string()))
}

fn parse_distances(v: &Value) -> Result<DistanceMatrix, SchemaError> {
    let rows = array(v, "$.distances")?;
    let n = rows.len();
    if n < 3 {
        return Err(schema("$.distances", format!("need at least 3 rows, got {n}")));
    }
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let path = format!("$.distances[{i}]");
        let row = array(row, &path)?;
        if row.len() != n {
            return Err(schema(path, format!("expected {n} entries, got {}", row.len())));
        }
        out.push(
            row.iter()
                .enumerate()
                .map(|(j, x)| number(x, &format!("{path}[{j}]")))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    DistanceMatrix::from_rows(&out).map_err(|e| schema("$.distances", e.to_string()))
}
