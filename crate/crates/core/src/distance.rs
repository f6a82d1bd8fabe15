//! Rebuilding a polygon, up to congruence, from its full distance matrix.

use crate::error::{Error, Result};
use crate::geom::{cayley_menger_quad, distance_matrix, DistanceMatrix, Point2, Polygon};

/// Reconstruction fails when some pairwise distance is off by more than
/// this fraction of the largest entry.
pub const RESIDUAL_TOL: f64 = 1e-6;
/// Points this close to the `V1V2` axis (relative to the largest entry) are
/// snapped onto it.
const AXIS_SNAP: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct ReconstructionResult {
    /// `V1 = (0, 0)`, `V2 = (d12, 0)`, clockwise (non-positive signed area).
    pub polygon: Polygon,
    /// Largest `|measured d_ij - given d_ij|`.
    pub max_residual: f64,
}

/// Trilateration from `V1` and `V2`. Each later vertex picks the mirror
/// solution that best matches its distances to the already placed
/// off-axis vertices; the whole figure is then reflected across the x-axis
/// if it winds counterclockwise.
pub fn reconstruct(d: &DistanceMatrix) -> Result<ReconstructionResult> {
    let n = d.n();
    let d12 = d.get(0, 1);
    if d12 <= 0.0 {
        return Err(Error::InvalidMatrix("d12 must be positive to fix the base edge".into()));
    }
    let scale = d.max_entry();
    let mut pts = vec![Point2::ORIGIN, Point2::new(d12, 0.0)];
    let mut off_axis: Vec<usize> = Vec::new();

    for k in 2..n {
        let (r1, r2) = (d.get(0, k), d.get(1, k));
        let x = (r1 * r1 - r2 * r2 + d12 * d12) / (2.0 * d12);
        let y2 = r1 * r1 - x * x;
        if y2 < -(RESIDUAL_TOL * scale).powi(2) {
            // trilateration circles do not meet
            return Err(Error::InfeasibleDistances { residual: (-y2).sqrt() });
        }
        let y = y2.max(0.0).sqrt();
        if y <= AXIS_SNAP * scale {
            pts.push(Point2::new(x, 0.0));
            continue;
        }
        let err = |cand: Point2| -> f64 {
            off_axis
                .iter()
                .map(|&j| (cand.dist(pts[j]) - d.get(j, k)).powi(2))
                .sum()
        };
        let (up, down) = (Point2::new(x, y), Point2::new(x, -y));
        pts.push(if err(down) < err(up) { down } else { up });
        off_axis.push(k);
    }

    let mut polygon = Polygon::new(pts)?;
    if polygon.signed_area() > 0.0 {
        polygon = polygon.map(|p| Point2::new(p.x, -p.y));
    }

    let measured = distance_matrix(&polygon);
    let mut max_residual = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            max_residual = max_residual.max((measured.get(i, j) - d.get(i, j)).abs());
        }
    }
    if max_residual > RESIDUAL_TOL * scale {
        return Err(Error::InfeasibleDistances { residual: max_residual });
    }
    Ok(ReconstructionResult { polygon, max_residual })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Validation {
    pub feasible: bool,
    pub max_residual: f64,
    /// Cayley–Menger determinants of `{1, 2, a, b}`, lengths scaled to a
    /// largest entry of one; ordered by `(a, b)` lexicographically.
    pub cm_checks: Vec<f64>,
}

pub fn validate(d: &DistanceMatrix) -> Validation {
    let n = d.n();
    let scale = d.max_entry();
    let s = if scale > 0.0 { 1.0 / scale } else { 1.0 };
    let e = |i: usize, j: usize| d.get(i, j) * s;
    let mut cm_checks = Vec::new();
    for a in 2..n {
        for b in a + 1..n {
            // quadrilateral (1, 2, a, b)
            cm_checks.push(cayley_menger_quad(e(0, 1), e(1, a), e(a, b), e(b, 0), e(0, a), e(1, b)));
        }
    }
    match reconstruct(d) {
        Ok(r) => Validation {
            feasible: true,
            max_residual: r.max_residual,
            cm_checks,
        },
        Err(Error::InfeasibleDistances { residual }) => Validation {
            feasible: false,
            max_residual: residual,
            cm_checks,
        },
        Err(_) => Validation {
            feasible: false,
            max_residual: f64::INFINITY,
            cm_checks,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::SQRT_2;

    fn matrix(rows: &[&[f64]]) -> DistanceMatrix {
        DistanceMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn equilateral_triangle_is_placed_clockwise() {
        let r = reconstruct(&matrix(&[&[0.0, 2.0, 2.0], &[2.0, 0.0, 2.0], &[2.0, 2.0, 0.0]])).unwrap();
        let v = r.polygon.vertices();
        assert_eq!(v[0], Point2::ORIGIN);
        assert_eq!(v[1], Point2::new(2.0, 0.0));
        assert!((v[2].x - 1.0).abs() < 1e-15 && (v[2].y + 3f64.sqrt()).abs() < 1e-15);
        assert!(r.polygon.signed_area() < 0.0);
    }

    #[test]
    fn unit_square_round_trip() {
        let d = matrix(&[
            &[0.0, 1.0, SQRT_2, 1.0],
            &[1.0, 0.0, 1.0, SQRT_2],
            &[SQRT_2, 1.0, 0.0, 1.0],
            &[1.0, SQRT_2, 1.0, 0.0],
        ]);
        let r = reconstruct(&d).unwrap();
        let back = distance_matrix(&r.polygon);
        for i in 0..4 {
            for j in 0..4 {
                assert!((back.get(i, j) - d.get(i, j)).abs() < 1e-9);
            }
        }
        assert!((r.polygon.signed_area() + 1.0).abs() < 1e-12);
    }

    #[test]
    fn triangle_inequality_violation_is_infeasible() {
        let d = matrix(&[&[0.0, 1.0, 5.0], &[1.0, 0.0, 1.0], &[5.0, 1.0, 0.0]]);
        assert!(matches!(reconstruct(&d), Err(Error::InfeasibleDistances { .. })));
    }

    #[test]
    fn zero_base_edge_is_rejected() {
        let d = matrix(&[&[0.0, 0.0, 1.0], &[0.0, 0.0, 1.0], &[1.0, 1.0, 0.0]]);
        assert!(matches!(reconstruct(&d), Err(Error::InvalidMatrix(_))));
    }

    #[test]
    fn collinear_points_stay_on_the_axis() {
        let p = Polygon::from_xy(&[(0.0, 0.0), (1.0, 0.0), (3.0, 0.0), (2.0, 0.0)]).unwrap();
        let r = reconstruct(&distance_matrix(&p)).unwrap();
        assert!(r.polygon.vertices().iter().all(|v| v.y == 0.0));
        assert!(r.max_residual <= 1e-9);
    }

    #[test]
    fn validate_examples() {
        let tetra = matrix(&[
            &[0.0, 1.0, 1.0, 1.0],
            &[1.0, 0.0, 1.0, 1.0],
            &[1.0, 1.0, 0.0, 1.0],
            &[1.0, 1.0, 1.0, 0.0],
        ]);
        let v = validate(&tetra);
        assert!(!v.feasible);
        assert_eq!(v.cm_checks.len(), 1);
        assert!((v.cm_checks[0] - 4.0).abs() < 1e-12);

        let bent = matrix(&[
            &[0.0, 1.0, SQRT_2 + 0.1, 1.0],
            &[1.0, 0.0, 1.0, SQRT_2],
            &[SQRT_2 + 0.1, 1.0, 0.0, 1.0],
            &[1.0, SQRT_2, 1.0, 0.0],
        ]);
        assert!(!validate(&bent).feasible);

        let p = Polygon::from_xy(&[(0.0, 0.0), (4.0, 1.0), (5.0, 3.0), (2.0, 6.0), (-1.0, 2.0)]).unwrap();
        let v = validate(&distance_matrix(&p));
        assert!(v.feasible);
        assert_eq!(v.cm_checks.len(), 3);
        assert!(v.cm_checks.iter().all(|c| c.abs() <= 1e-9));
    }
}
