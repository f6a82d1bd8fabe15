//! Centers defined as minimizers: the geometric median of the vertices and
//! the Chebyshev center (minimum enclosing circle) of the vertex set.

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::geom::{classify, relabel, DihedralElement, Point2, Polygon};
use crate::sample::{random_rigid_motion, seeded};

/// An iterate this close to a vertex (relative to the diameter) is treated
/// as sitting on it.
const VERTEX_SNAP: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct MedianResult {
    pub point: Point2,
    pub iterations: usize,
    /// `|Σ (V_j - X) / |V_j - X||` over the vertices distinct from `X`.
    pub residual: f64,
    /// Set when the minimizer is a vertex (0-based), where the balance
    /// equation does not apply.
    pub at_vertex: Option<usize>,
}

fn require_nondegenerate(name: &str, p: &Polygon) -> Result<()> {
    if classify(p).nondegenerate {
        Ok(())
    } else {
        Err(Error::DomainViolation {
            name: name.into(),
            reason: "polygon has coincident vertices".into(),
        })
    }
}

/// `Σ_j |V_j - x|`.
pub fn median_objective(p: &Polygon, x: Point2) -> f64 {
    p.vertices().iter().map(|v| v.dist(x)).sum()
}

/// Sum of unit vectors from `x` towards each vertex, skipping `skip`.
fn unit_sum(p: &Polygon, x: Point2, skip: Option<usize>) -> Point2 {
    p.vertices()
        .iter()
        .enumerate()
        .filter(|&(j, _)| Some(j) != skip)
        .fold(Point2::ORIGIN, |acc, (_, &v)| {
            let d = v.dist(x);
            if d == 0.0 {
                acc
            } else {
                acc + (v - x) * (1.0 / d)
            }
        })
}

/// Weiszfeld step over the vertices other than `skip`.
fn weiszfeld_step(p: &Polygon, x: Point2, skip: Option<usize>) -> Point2 {
    let (mut num, mut den) = (Point2::ORIGIN, 0.0);
    for (j, &v) in p.vertices().iter().enumerate() {
        if Some(j) == skip {
            continue;
        }
        let w = 1.0 / v.dist(x);
        num = num + v * w;
        den += w;
    }
    num * (1.0 / den)
}

/// Residual of the balance equation at `x`, ignoring a vertex `x` sits on.
pub fn median_residual(p: &Polygon, x: Point2) -> f64 {
    let skip = p.vertices().iter().position(|&v| v == x);
    unit_sum(p, x, skip).norm()
}

/// Weiszfeld iteration from the vertex centroid until the balance residual
/// drops to `tol`. A vertex is the answer exactly when the unit vectors
/// from it to the other vertices sum to norm at most one; that test runs
/// up front and whenever an iterate lands on a vertex, which is then left
/// along the descent direction.
pub fn geometric_median(p: &Polygon, tol: f64, max_iter: usize) -> Result<MedianResult> {
    require_nondegenerate("median", p)?;
    assert!(tol > 0.0, "median tolerance must be positive");
    let v = p.vertices();
    for (j, &vj) in v.iter().enumerate() {
        if unit_sum(p, vj, Some(j)).norm() <= 1.0 {
            return Ok(MedianResult {
                point: vj,
                iterations: 0,
                residual: 0.0,
                at_vertex: Some(j),
            });
        }
    }

    let snap = VERTEX_SNAP * p.diameter();
    let mut x = p.mean();
    let mut best = (median_objective(p, x), x);
    let mut residual = f64::INFINITY;
    for it in 0..=max_iter {
        let on_vertex = v.iter().position(|&vj| vj.dist(x) <= snap);
        residual = unit_sum(p, x, on_vertex).norm();
        if on_vertex.is_none() && residual <= tol {
            return Ok(MedianResult {
                point: x,
                iterations: it,
                residual,
                at_vertex: None,
            });
        }
        if it == max_iter {
            break;
        }
        x = match on_vertex {
            None => weiszfeld_step(p, x, None),
            Some(j) => {
                // the up-front test guarantees residual > 1 here
                let t = weiszfeld_step(p, x, Some(j));
                let r = residual;
                t * (1.0 - 1.0 / r) + x * (1.0 / r)
            }
        };
        let obj = median_objective(p, x);
        if obj < best.0 {
            best = (obj, x);
        }
    }
    Err(Error::NoConvergence {
        iterations: max_iter,
        residual,
        best: best.1,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnclosingCircle {
    pub center: Point2,
    pub radius: f64,
    /// 0-based vertex indices on the boundary (2 or 3 of them).
    pub support: Vec<usize>,
}

impl EnclosingCircle {
    fn from_two(pts: &[Point2], a: usize, b: usize) -> Self {
        let center = (pts[a] + pts[b]) * 0.5;
        EnclosingCircle {
            center,
            radius: center.dist(pts[a]).max(center.dist(pts[b])),
            support: vec![a, b],
        }
    }

    fn from_three(pts: &[Point2], a: usize, b: usize, c: usize) -> Self {
        let (pa, pb, pc) = (pts[a], pts[b], pts[c]);
        let (bx, by) = (pb.x - pa.x, pb.y - pa.y);
        let (cx, cy) = (pc.x - pa.x, pc.y - pa.y);
        let d = 2.0 * (bx * cy - by * cx);
        if d == 0.0 {
            // collinear: the widest pair spans the circle
            let pairs = [(a, b), (a, c), (b, c)];
            let &(i, j) = pairs
                .iter()
                .max_by(|x, y| pts[x.0].dist(pts[x.1]).total_cmp(&pts[y.0].dist(pts[y.1])))
                .expect("three pairs");
            return Self::from_two(pts, i, j);
        }
        let (b2, c2) = (bx * bx + by * by, cx * cx + cy * cy);
        let center = Point2::new(pa.x + (cy * b2 - by * c2) / d, pa.y + (bx * c2 - cx * b2) / d);
        let radius = center.dist(pa).max(center.dist(pb)).max(center.dist(pc));
        EnclosingCircle {
            center,
            radius,
            support: vec![a, b, c],
        }
    }

    fn contains(&self, p: Point2, eps: f64) -> bool {
        self.center.dist(p) <= self.radius + eps
    }
}

/// Seed of the shuffle in front of the move-to-front pass.
pub const MEC_SEED: u64 = 0x6d65_635f_7365_6564;

/// Minimum enclosing circle of the vertex set, by Welzl's incremental
/// method over a seeded shuffle.
pub fn chebyshev_center(p: &Polygon) -> Result<EnclosingCircle> {
    require_nondegenerate("chebyshev", p)?;
    let pts = p.vertices();
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.shuffle(&mut seeded(MEC_SEED));
    let eps = 1e-12 * p.coordinate_scale().max(1.0);

    let mut c = EnclosingCircle::from_two(pts, order[0], order[1]);
    for i in 2..order.len() {
        let pi = order[i];
        if c.contains(pts[pi], eps) {
            continue;
        }
        // pi is on the boundary of the circle for order[..=i]
        c = EnclosingCircle::from_two(pts, order[0], pi);
        for j in 1..i {
            let pj = order[j];
            if c.contains(pts[pj], eps) {
                continue;
            }
            c = EnclosingCircle::from_two(pts, pj, pi);
            for &pk in &order[..j] {
                if !c.contains(pts[pk], eps) {
                    c = EnclosingCircle::from_three(pts, pk, pj, pi);
                }
            }
        }
    }
    c.support.sort_unstable();
    Ok(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimalCenterKind {
    GeometricMedian,
    Chebyshev,
}

pub const MEDIAN_TOL: f64 = 1e-12;
pub const MEDIAN_MAX_ITER: usize = 100_000;

fn solve(kind: MinimalCenterKind, p: &Polygon) -> Result<Point2> {
    match kind {
        MinimalCenterKind::GeometricMedian => match geometric_median(p, MEDIAN_TOL, MEDIAN_MAX_ITER) {
            Ok(r) => Ok(r.point),
            Err(Error::NoConvergence { best, .. }) => Ok(best),
            Err(e) => Err(e),
        },
        MinimalCenterKind::Chebyshev => chebyshev_center(p).map(|c| c.center),
    }
}

/// Operational test of the minimal-center axioms: for `trials` random
/// relabelings, rigid motions and scales, re-solve on the transformed
/// polygon and compare with the transformed candidate. Returns the largest
/// mismatch divided by the transformed diameter; the untransformed problem
/// is included, so a candidate that is not the minimizer scores high.
pub fn check_minimal_center(
    kind: MinimalCenterKind,
    p: &Polygon,
    candidate: Point2,
    trials: usize,
    seed: u64,
) -> Result<f64> {
    use rand::Rng;
    let mut rng = seeded(seed);
    let n = p.len();
    let mut score = solve(kind, p)?.dist(candidate) / p.diameter();
    for _ in 0..trials {
        let alpha = DihedralElement::new(n, rng.random_range(0..n), rng.random_bool(0.5));
        let motion = random_rigid_motion(&mut rng, 10.0);
        let lambda: f64 = rng.random_range(0.1..10.0);
        let transform = |x: Point2| motion.apply(x * lambda);
        let q = relabel(&alpha, p).map(transform);
        let mismatch = solve(kind, &q)?.dist(transform(candidate)) / q.diameter();
        score = score.max(mismatch);
    }
    Ok(score)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{random_polygon, regular_polygon};
    use std::f64::consts::SQRT_2;

    fn square() -> Polygon {
        Polygon::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap()
    }

    /// Coarse grid over the bounding box, then two refinements around the best cell.
    fn grid_median(p: &Polygon) -> Point2 {
        let v = p.vertices();
        let (mut lo, mut hi) = (v[0], v[0]);
        for &q in v {
            lo = Point2::new(lo.x.min(q.x), lo.y.min(q.y));
            hi = Point2::new(hi.x.max(q.x), hi.y.max(q.y));
        }
        let mut best = lo;
        for _ in 0..3 {
            let steps = 400;
            let (dx, dy) = ((hi.x - lo.x) / steps as f64, (hi.y - lo.y) / steps as f64);
            let mut best_obj = f64::INFINITY;
            for i in 0..=steps {
                for j in 0..=steps {
                    let x = Point2::new(lo.x + i as f64 * dx, lo.y + j as f64 * dy);
                    let o = median_objective(p, x);
                    if o < best_obj {
                        best_obj = o;
                        best = x;
                    }
                }
            }
            lo = Point2::new(best.x - 2.0 * dx, best.y - 2.0 * dy);
            hi = Point2::new(best.x + 2.0 * dx, best.y + 2.0 * dy);
        }
        best
    }

    #[test]
    fn median_of_symmetric_polygons() {
        let r = geometric_median(&square(), 1e-12, 1000).unwrap();
        assert!(r.point.dist(Point2::new(0.5, 0.5)) < 1e-12);
        assert_eq!(r.at_vertex, None);

        let t = regular_polygon(3, 1, 2.0, Point2::new(1.0, 1.0), 0.2);
        let r = geometric_median(&t, 1e-12, 1000).unwrap();
        assert!(r.point.dist(Point2::new(1.0, 1.0)) < 1e-12);
    }

    #[test]
    fn median_at_obtuse_apex() {
        let p = Polygon::from_xy(&[(0.0, 0.0), (1.0, 0.0), (0.5, 0.05)]).unwrap();
        let r = geometric_median(&p, 1e-10, 10_000).unwrap();
        assert_eq!(r.at_vertex, Some(2));
        assert!(r.point.dist(grid_median(&p)) < 1e-4);
    }

    #[test]
    fn median_residual_objective_and_grid() {
        let mut rng = seeded(31);
        for _ in 0..10 {
            let p = random_polygon(&mut rng, 5, 3.0);
            let r = geometric_median(&p, 1e-10, 100_000).unwrap();
            if r.at_vertex.is_none() {
                assert!(r.residual <= 1e-8);
                assert!(median_residual(&p, r.point) <= 1e-8);
            }
            let g = grid_median(&p);
            assert!(median_objective(&p, r.point) <= median_objective(&p, g) + 1e-9);
            assert!(r.point.dist(g) < 1e-4, "{p}");
        }
    }

    #[test]
    fn weiszfeld_objective_never_increases() {
        let mut rng = seeded(32);
        for _ in 0..20 {
            let p = random_polygon(&mut rng, 6, 3.0);
            let mut x = p.mean();
            let mut prev = median_objective(&p, x);
            for _ in 0..200 {
                if p.vertices().contains(&x) {
                    break;
                }
                x = weiszfeld_step(&p, x, None);
                let o = median_objective(&p, x);
                assert!(o <= prev + 1e-12 * prev);
                prev = o;
            }
        }
    }

    #[test]
    fn median_reports_non_convergence() {
        let p = Polygon::from_xy(&[(0.0, 0.0), (4.0, 0.3), (3.0, 3.0), (-1.0, 2.0), (1.0, 5.0)]).unwrap();
        match geometric_median(&p, 1e-12, 1) {
            Err(Error::NoConvergence {
                iterations: 1, best, ..
            }) => assert!(best.is_finite()),
            other => panic!("expected NoConvergence, got {other:?}"),
        }
    }

    #[test]
    fn square_and_right_triangle_circles() {
        let c = chebyshev_center(&square()).unwrap();
        assert!(c.center.dist(Point2::new(0.5, 0.5)) <= 1e-12);
        assert!((c.radius - SQRT_2 / 2.0).abs() <= 1e-12);

        let t = Polygon::from_xy(&[(0.0, 0.0), (3.0, 0.0), (0.0, 4.0)]).unwrap();
        let c = chebyshev_center(&t).unwrap();
        assert!(c.center.dist(Point2::new(1.5, 2.0)) <= 1e-12);
        assert!((c.radius - 2.5).abs() <= 1e-12);
        assert_eq!(c.support, vec![1, 2]);
    }

    #[test]
    fn circle_invariants_hold() {
        let mut rng = seeded(33);
        for n in 3..=12 {
            for _ in 0..20 {
                let p = random_polygon(&mut rng, n, 5.0);
                let c = chebyshev_center(&p).unwrap();
                assert!(c.support.len() == 2 || c.support.len() == 3);
                for v in p.vertices() {
                    assert!(v.dist(c.center) <= c.radius + 1e-12 * c.radius.max(1.0));
                }
                for &s in &c.support {
                    assert!((p.vertices()[s].dist(c.center) - c.radius).abs() <= 1e-12 * c.radius.max(1.0));
                }
                assert_eq!(chebyshev_center(&p).unwrap(), c);
            }
        }
    }

    #[test]
    fn minimal_center_scores() {
        let mut rng = seeded(34);
        for _ in 0..3 {
            let p = random_polygon(&mut rng, 5, 3.0);
            let m = geometric_median(&p, 1e-12, 100_000).unwrap().point;
            assert!(check_minimal_center(MinimalCenterKind::GeometricMedian, &p, m, 5, 1).unwrap() < 1e-6);
            let c = chebyshev_center(&p).unwrap().center;
            assert!(check_minimal_center(MinimalCenterKind::Chebyshev, &p, c, 5, 2).unwrap() < 1e-9);
        }
        let skewed = Polygon::from_xy(&[(0.0, 0.0), (10.0, 0.0), (10.2, 0.5), (9.8, 0.8), (10.1, 1.0)]).unwrap();
        let wrong = skewed.mean();
        assert!(check_minimal_center(MinimalCenterKind::Chebyshev, &skewed, wrong, 5, 3).unwrap() > 0.1);
    }
}
