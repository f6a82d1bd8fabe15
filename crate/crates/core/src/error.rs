use thiserror::Error;

use crate::geom::Polygon;

/// Which defining property of a center function was violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// Invariance under the reflection relabeling that fixes the first vertex.
    Relabel,
    /// Invariance under rigid motions.
    Motion,
    /// Existence of a single homogeneity degree.
    Homogeneity,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Axiom::Relabel => "relabel symmetry",
            Axiom::Motion => "motion invariance",
            Axiom::Homogeneity => "homogeneity",
        })
    }
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("invalid distance matrix: {0}")]
    InvalidMatrix(String),

    #[error("`{name}` is not defined on this polygon: {reason}")]
    DomainViolation { name: String, reason: String },

    #[error("every cyclic value is zero, the coordinate map is undefined")]
    AllZero,

    #[error("coordinates sum to zero, barycentric normalization is impossible")]
    ZeroSum,

    #[error("distances admit no planar embedding (max residual {residual:e})")]
    InfeasibleDistances { residual: f64 },

    #[error("zero-length edge at vertex {vertex}")]
    DegenerateVertex { vertex: usize },

    #[error("{name} requires {expected} n, got n = {n}")]
    ParityMismatch {
        name: &'static str,
        expected: &'static str,
        n: usize,
    },

    #[error("medoid is not unique: vertices {vertices:?} tie")]
    Tie { vertices: Vec<usize> },

    #[error("triangle is collinear")]
    Collinear,

    #[error("polygon has zero signed area")]
    ZeroArea,

    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence {
        iterations: usize,
        residual: f64,
        best: crate::geom::Point2,
    },

    #[error("evaluation failed: {0}")]
    Eval(String),

    #[error("{property} violated; witness polygon {witness}")]
    AxiomViolation { property: Axiom, witness: Polygon },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
