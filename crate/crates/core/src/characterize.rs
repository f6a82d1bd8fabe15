//! Characterizing polygon families by coincidence of cyclic center values,
//! checked against direct angle and side-length predicates.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::framework::{CenterFunction, Domain, VertexCenterFunction};
use crate::geom::{classify, Polygon};

/// Default relative tolerance for coincidence of cyclic values.
pub const COINCIDENCE_TOL: f64 = 1e-9;
/// Default relative tolerance for the angle and side oracles.
pub const ORACLE_TOL: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq)]
pub struct CoincidenceReport {
    pub values: Vec<f64>,
    pub coincident: bool,
    /// `(max - min) / max|value|`, with the function's magnitude floor.
    pub spread: f64,
}

pub fn coincidence(f: &CenterFunction, p: &Polygon, tol: f64) -> Result<CoincidenceReport> {
    let values = f.cyclic_values(p)?;
    let (lo, hi) = values.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
        (lo.min(v), hi.max(v))
    });
    let mag = values
        .iter()
        .fold(0.0f64, |m, v| m.max(v.abs()))
        .max(f.magnitude_floor());
    let spread = if mag == 0.0 { 0.0 } else { (hi - lo) / mag };
    Ok(CoincidenceReport {
        coincident: spread <= tol,
        spread,
        values,
    })
}

/// Cosine of the angle at `V1` between `V1V2` and `V1Vn`.
pub fn f1_cosine(p: &Polygon) -> Result<f64> {
    let n = p.len() as isize;
    let (a, b, c) = (p.vertex(0), p.vertex(1), p.vertex(n - 1));
    let (u, w) = (b - a, c - a);
    let (nu, nw) = (u.norm(), w.norm());
    if nu == 0.0 || nw == 0.0 {
        return Err(Error::DegenerateVertex { vertex: 1 });
    }
    Ok(u.dot(w) / (nu * nw))
}

/// `|V_{(n+1)/2} - V_{(n+3)/2}|`, the side opposite `V1`, for odd `n`.
pub fn f2_odd(p: &Polygon) -> Result<f64> {
    let n = p.len();
    if n.is_multiple_of(2) {
        return Err(Error::ParityMismatch {
            name: "f2",
            expected: "odd",
            n,
        });
    }
    let v = p.vertices();
    Ok(v[(n - 1) / 2].dist(v[n.div_ceil(2)]))
}

/// `|V_{n/2} - V_{n/2+2}|`, the diagonal around the vertex opposite `V1`,
/// for even `n`.
pub fn f3_even(p: &Polygon) -> Result<f64> {
    let n = p.len();
    if n % 2 == 1 {
        return Err(Error::ParityMismatch {
            name: "f3",
            expected: "even",
            n,
        });
    }
    let v = p.vertices();
    Ok(v[n / 2 - 1].dist(v[n / 2 + 1]))
}

pub fn f1_function() -> VertexCenterFunction {
    VertexCenterFunction::new("f1-cosine", Domain::NON_DEGENERATE, f1_cosine).with_magnitude_floor(1.0)
}

pub fn f2_function() -> VertexCenterFunction {
    VertexCenterFunction::new("f2-odd", Domain::ALL, f2_odd)
}

pub fn f3_function() -> VertexCenterFunction {
    VertexCenterFunction::new("f3-even", Domain::ALL, f3_even)
}

/// Interior angles. When the edges turn once around in total (every simple
/// polygon, and weakly simple ones such as two triangles meeting at a
/// vertex), the oriented turning is used so reflex angles exceed π. Other
/// polygons get the unsigned angle between the two edges at each vertex.
pub fn interior_angles(p: &Polygon) -> Vec<f64> {
    let n = p.len() as isize;
    let turns: Vec<f64> = (0..n)
        .map(|i| {
            let incoming = p.vertex(i) - p.vertex(i - 1);
            let outgoing = p.vertex(i + 1) - p.vertex(i);
            incoming.wedge(outgoing).atan2(incoming.dot(outgoing))
        })
        .collect();
    let winding = turns.iter().sum::<f64>() / (2.0 * PI);
    if (winding.abs() - 1.0).abs() < 1e-6 {
        let orientation = winding.signum();
        turns.iter().map(|t| PI - orientation * t).collect()
    } else {
        (0..n)
            .map(|i| {
                let (u, w) = (p.vertex(i - 1) - p.vertex(i), p.vertex(i + 1) - p.vertex(i));
                u.wedge(w).abs().atan2(u.dot(w))
            })
            .collect()
    }
}

fn relative_spread(values: &[f64]) -> f64 {
    let (lo, hi) = values.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
        (lo.min(v), hi.max(v))
    });
    if hi <= 0.0 {
        0.0
    } else {
        (hi - lo) / hi
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Predicates {
    pub equiangular: bool,
    pub equilateral: bool,
    pub regular: bool,
}

pub fn predicates(p: &Polygon, tol: f64) -> Predicates {
    let equiangular = relative_spread(&interior_angles(p)) <= tol;
    let equilateral = relative_spread(&p.edge_lengths()) <= tol;
    Predicates {
        equiangular,
        equilateral,
        regular: equiangular && equilateral,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub coincidence: f64,
    pub oracle: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            coincidence: COINCIDENCE_TOL,
            oracle: ORACLE_TOL,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CharacterizationReport {
    pub equiangular: bool,
    pub equilateral: bool,
    pub regular: bool,
    pub f1_coincident: bool,
    /// Only for odd `n`.
    pub f2_coincident: Option<bool>,
    /// Only for even `n`.
    pub f3_coincident: Option<bool>,
    pub convex: bool,
    pub nondegenerate: bool,
    pub consistent_with_theorems: bool,
    /// Implications that failed numerically.
    pub inconsistencies: Vec<String>,
}

/// Fills every field and cross-checks the implications:
/// convex ⇒ (f1 coincident ⇔ equiangular); odd n ⇒ (f2 coincident ⇔
/// equilateral); equiangular quadrilateral ⇒ f3 coincident; regular ⇒
/// every evaluated function coincident.
pub fn characterize(p: &Polygon, tol: Tolerances) -> Result<CharacterizationReport> {
    let n = p.len();
    let c = classify(p);
    if !c.nondegenerate {
        return Err(Error::DomainViolation {
            name: "characterize".into(),
            reason: "polygon has coincident vertices".into(),
        });
    }
    let pred = predicates(p, tol.oracle);
    let f1 = coincidence(&f1_function().into(), p, tol.coincidence)?.coincident;
    let f2 = (!n.is_multiple_of(2))
        .then(|| coincidence(&f2_function().into(), p, tol.coincidence))
        .transpose()?
        .map(|r| r.coincident);
    let f3 = n
        .is_multiple_of(2)
        .then(|| coincidence(&f3_function().into(), p, tol.coincidence))
        .transpose()?
        .map(|r| r.coincident);

    let mut bad = Vec::new();
    if c.convex && f1 != pred.equiangular {
        bad.push(format!(
            "convex polygon: f1 coincident = {f1} but equiangular = {}",
            pred.equiangular
        ));
    }
    if let Some(f2) = f2 {
        if f2 != pred.equilateral {
            bad.push(format!(
                "odd n: f2 coincident = {f2} but equilateral = {}",
                pred.equilateral
            ));
        }
    }
    if n == 4 && pred.equiangular && f3 == Some(false) {
        bad.push("equiangular quadrilateral without coincident f3".into());
    }
    if pred.regular && !(f1 && f2.unwrap_or(true) && f3.unwrap_or(true)) {
        bad.push("regular polygon with a non-coincident center function".into());
    }

    Ok(CharacterizationReport {
        equiangular: pred.equiangular,
        equilateral: pred.equilateral,
        regular: pred.regular,
        f1_coincident: f1,
        f2_coincident: f2,
        f3_coincident: f3,
        convex: c.convex,
        nondegenerate: c.nondegenerate,
        consistent_with_theorems: bad.is_empty(),
        inconsistencies: bad,
    })
}

/// Two unit equilateral triangles side by side, traced as one pentagon
/// whose closing edge passes through `V3`. Every interior angle is π/3
/// except the reflex one at `V3`, which is 2π − π/3.
pub fn mountain_pentagon() -> Polygon {
    let h = 3f64.sqrt() / 2.0;
    Polygon::from_xy(&[(0.0, 0.0), (0.5, h), (1.0, 0.0), (1.5, h), (2.0, 0.0)]).expect("fixture")
}
