//! Concrete centers, each available as a center function and as a direct
//! point computation.
//!
//! | name           | kind   | domain                 | value on `(V1, ..., Vn)`                          |
//! |----------------|--------|------------------------|---------------------------------------------------|
//! | `centroid`     | vertex | all                    | `1`                                               |
//! | `perimeter`    | length | convex                 | `e_n1 + e_12`                                     |
//! | `lamina`       | vertex | convex                 | fan areas around `B = mean(V)` adjacent to `V1`, plus their mean |
//! | `medoid`       | vertex | non-degenerate         | `1` if `V1` minimizes the distance sum, else `0`  |
//! | `circumcenter` | length | convex triangles       | `a²(b² + c² − a²)` with `a = d23, b = d31, c = d12` |

use crate::error::{Error, Result};
use crate::framework::{geometric_center, CenterFunction, Domain, LengthCenterFunction, VertexCenterFunction};
use crate::geom::{classify, orient, DistanceMatrix, Point2, Polygon};

/// Medoid ties are decided relative to the polygon diameter.
pub const MEDOID_TIE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Vertex,
    Length,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub kind: Kind,
    pub function: CenterFunction,
    pub domain_note: &'static str,
}

pub const NAMES: [&str; 5] = ["centroid", "perimeter", "lamina", "medoid", "circumcenter"];

pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "centroid",
            kind: Kind::Vertex,
            function: centroid_function().into(),
            domain_note: "any polygon",
        },
        CatalogEntry {
            name: "perimeter",
            kind: Kind::Length,
            function: perimeter_function().into(),
            domain_note: "convex polygons",
        },
        CatalogEntry {
            name: "lamina",
            kind: Kind::Vertex,
            function: lamina_function().into(),
            domain_note: "convex polygons",
        },
        CatalogEntry {
            name: "medoid",
            kind: Kind::Vertex,
            function: medoid_function().into(),
            domain_note: "non-degenerate polygons",
        },
        CatalogEntry {
            name: "circumcenter",
            kind: Kind::Length,
            function: circumcenter_function().into(),
            domain_note: "non-collinear triangles",
        },
    ]
}

pub fn lookup(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

pub fn centroid_function() -> VertexCenterFunction {
    VertexCenterFunction::new("centroid", Domain::ALL, |_| Ok(1.0))
}

pub fn perimeter_function() -> LengthCenterFunction {
    LengthCenterFunction::new("perimeter", Domain::CONVEX, |d: &DistanceMatrix| {
        Ok(d.get(d.n() - 1, 0) + d.get(0, 1))
    })
}

/// Absolute wedges `|(B - V_j) ∧ (B - V_{j+1})|`, twice the fan triangle areas.
fn fan_wedges(p: &Polygon) -> Vec<f64> {
    let b = p.mean();
    let n = p.len();
    let v = p.vertices();
    (0..n).map(|j| (b - v[j]).wedge(b - v[(j + 1) % n]).abs()).collect()
}

pub fn lamina_function() -> VertexCenterFunction {
    VertexCenterFunction::new("lamina", Domain::CONVEX, |p: &Polygon| {
        let w = fan_wedges(p);
        let n = w.len();
        Ok(w[0] + w[n - 1] + w.iter().sum::<f64>() / n as f64)
    })
}

/// Distance sums `Σ_i |V_k - V_i|` for every vertex `k`.
fn distance_sums(p: &Polygon) -> Vec<f64> {
    let v = p.vertices();
    v.iter().map(|&a| v.iter().map(|&b| a.dist(b)).sum()).collect()
}

/// Labels whose distance sum is within the tie tolerance of the minimum.
fn medoid_candidates(p: &Polygon) -> Vec<usize> {
    let sums = distance_sums(p);
    let min = sums.iter().copied().fold(f64::INFINITY, f64::min);
    let tol = MEDOID_TIE_TOL * p.diameter();
    (0..sums.len()).filter(|&k| sums[k] - min <= tol).collect()
}

/// The 0/1 indicator of `V1` being a minimizer. Tied vertices all score 1,
/// so regular polygons get `[1 : ... : 1]`.
pub fn medoid_function() -> VertexCenterFunction {
    VertexCenterFunction::new("medoid", Domain::NON_DEGENERATE, |p: &Polygon| {
        Ok(if medoid_candidates(p).contains(&0) { 1.0 } else { 0.0 })
    })
}

/// Barycentric circumcenter weight of `V1`: `a²(b² + c² − a²)`, the
/// trilinear function `a(b² + c² − a²)` times the opposite side `a`.
pub fn circumcenter_function() -> LengthCenterFunction {
    LengthCenterFunction::new("circumcenter", Domain::CONVEX.with_arity(3), |d: &DistanceMatrix| {
        let (a, b, c) = (d.get(1, 2), d.get(2, 0), d.get(0, 1));
        Ok(circumcenter_trilinear(a, b, c) * a)
    })
}

/// Trilinear circumcenter function `f(a, b, c) = a(b² + c² − a²)`.
pub fn circumcenter_trilinear(a: f64, b: f64, c: f64) -> f64 {
    a * (b * b + c * c - a * a)
}

/// Trilinears `[t1 : t2 : t3]` to barycentrics `[a t1 : b t2 : c t3]`, where
/// `a, b, c` are the sides opposite `V1, V2, V3`.
pub fn trilinear_to_barycentric(t: [f64; 3], sides: [f64; 3]) -> [f64; 3] {
    [t[0] * sides[0], t[1] * sides[1], t[2] * sides[2]]
}

pub fn centroid_vertices(p: &Polygon) -> Point2 {
    p.mean()
}

fn require_convex(name: &str, p: &Polygon) -> Result<()> {
    Domain::CONVEX.check(name, p)
}

/// `Σ (e_{i-1,i} + e_{i,i+1}) / (2 · perimeter) · V_i`.
pub fn perimeter_centroid(p: &Polygon) -> Result<Point2> {
    require_convex("perimeter", p)?;
    let e = p.edge_lengths();
    let n = p.len();
    let total: f64 = e.iter().sum();
    Ok(p.vertices().iter().enumerate().fold(Point2::ORIGIN, |acc, (i, &v)| {
        acc + v * ((e[(i + n - 1) % n] + e[i]) / (2.0 * total))
    }))
}

/// Centroid of the convex lamina, through the affine weights of the lamina
/// center function.
pub fn lamina_centroid(p: &Polygon) -> Result<Point2> {
    require_convex("lamina", p)?;
    geometric_center(&lamina_function().into(), p)
}

/// The classical shoelace centroid. Its weights sum to 2/3, so it is a
/// reference value here rather than a center function.
pub fn lamina_centroid_direct(p: &Polygon) -> Result<Point2> {
    let n = p.len();
    let v = p.vertices();
    let w: Vec<f64> = (0..n).map(|j| v[j].wedge(v[(j + 1) % n])).collect();
    let total: f64 = w.iter().sum();
    let scale = p.coordinate_scale();
    if total.abs() <= 1e-12 * scale * scale {
        return Err(Error::ZeroArea);
    }
    Ok(v.iter().enumerate().fold(Point2::ORIGIN, |acc, (i, &vi)| {
        acc + vi * ((w[(i + n - 1) % n] + w[i]) / (3.0 * total))
    }))
}

/// 0-based index of the vertex minimizing the sum of distances to all vertices.
pub fn medoid(p: &Polygon) -> Result<usize> {
    if !classify(p).nondegenerate {
        return Err(Error::DomainViolation {
            name: "medoid".into(),
            reason: "polygon has coincident vertices".into(),
        });
    }
    match medoid_candidates(p).as_slice() {
        [k] => Ok(*k),
        tied => Err(Error::Tie {
            vertices: tied.iter().map(|k| k + 1).collect(),
        }),
    }
}

pub fn triangle_circumcenter(p: &Polygon) -> Result<Point2> {
    if p.len() != 3 {
        return Err(Error::DomainViolation {
            name: "circumcenter".into(),
            reason: format!("defined for triangles, got n = {}", p.len()),
        });
    }
    let v = p.vertices();
    let scale = p.coordinate_scale();
    if orient(v[0], v[1], v[2]).abs() <= 1e-12 * scale * scale {
        return Err(Error::Collinear);
    }
    geometric_center(&circumcenter_function().into(), p)
}
