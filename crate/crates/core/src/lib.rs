//! Center functions for polygons with any number of vertices.
//!
//! A center function assigns each labelled polygon a weight per vertex; the
//! center is the weighted mean of the vertices. This crate provides the
//! framework (coordinate maps, axiom checks), a small catalog of centers,
//! distance-matrix reconstruction, optimization-defined centers, regularity
//! tests built from center coincidences, and an expression language for
//! user-defined length-based centers.

pub mod catalog;
pub mod characterize;
pub mod distance;
pub mod dsl;
pub mod error;
pub mod framework;
pub mod geom;
pub mod optim;
pub mod sample;

pub use error::{Axiom, Error, Result};
pub use framework::{
    geometric_center, normalize, verify_axioms, AxiomReport, BarycentricWeights, CenterFunction, Domain,
    LengthCenterFunction, ProjectiveCoords, VertexCenterFunction,
};
pub use geom::{distance_matrix, relabel, DihedralElement, DistanceMatrix, Point2, Polygon, RigidMotion, Similarity};
