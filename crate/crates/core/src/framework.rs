//! Center functions and their coordinate maps.
//!
//! A center function is evaluated on every cyclic shift of a polygon; the
//! resulting tuple is a projective point read as barycentric coordinates
//! with respect to the vertices. Both flavors are supported: functions of
//! the vertices and functions of the distance matrix.

use std::fmt;
use std::sync::Arc;

use crate::distance::reconstruct;
use crate::error::{Axiom, Error, Result};
use crate::geom::{apply_motion, classify, distance_matrix, relabel, DihedralElement, DistanceMatrix, Point2, Polygon};
use crate::sample::{random_rigid_motion, seeded, Sampler};

/// Relative tolerance used when two projective points are compared.
pub const PROJECTIVE_TOL: f64 = 1e-9;

/// `|sum| <= ZERO_SUM_TOL * max|coord|` means the tuple cannot be normalized.
pub const ZERO_SUM_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainKind {
    All,
    NonDegenerate,
    Convex,
}

/// Where a center function is defined: a polygon class, optionally for a
/// single vertex count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Domain {
    pub kind: DomainKind,
    pub arity: Option<usize>,
}

impl Domain {
    pub const ALL: Domain = Domain {
        kind: DomainKind::All,
        arity: None,
    };
    pub const NON_DEGENERATE: Domain = Domain {
        kind: DomainKind::NonDegenerate,
        arity: None,
    };
    pub const CONVEX: Domain = Domain {
        kind: DomainKind::Convex,
        arity: None,
    };

    pub fn with_arity(self, n: usize) -> Domain {
        Domain { arity: Some(n), ..self }
    }

    fn violation(name: &str, reason: impl Into<String>) -> Error {
        Error::DomainViolation {
            name: name.to_string(),
            reason: reason.into(),
        }
    }

    pub fn check(&self, name: &str, p: &Polygon) -> Result<()> {
        if let Some(n) = self.arity {
            if p.len() != n {
                return Err(Self::violation(
                    name,
                    format!("defined for n = {n}, got n = {}", p.len()),
                ));
            }
        }
        match self.kind {
            DomainKind::All => Ok(()),
            DomainKind::NonDegenerate => {
                if classify(p).nondegenerate {
                    Ok(())
                } else {
                    Err(Self::violation(name, "polygon has coincident vertices"))
                }
            }
            DomainKind::Convex => {
                if classify(p).convex {
                    Ok(())
                } else {
                    Err(Self::violation(name, "polygon is not convex"))
                }
            }
        }
    }

    /// Membership decided from lengths alone; convexity is tested on the
    /// reconstructed representative.
    pub fn check_lengths(&self, name: &str, d: &DistanceMatrix) -> Result<()> {
        if let Some(n) = self.arity {
            if d.n() != n {
                return Err(Self::violation(name, format!("defined for n = {n}, got n = {}", d.n())));
            }
        }
        match self.kind {
            DomainKind::All => Ok(()),
            DomainKind::NonDegenerate => {
                let n = d.n();
                if (0..n).all(|i| (i + 1..n).all(|j| d.get(i, j) > 0.0)) {
                    Ok(())
                } else {
                    Err(Self::violation(name, "two vertices coincide"))
                }
            }
            DomainKind::Convex => self.check(name, &reconstruct(d)?.polygon),
        }
    }
}

type VertexEval = dyn Fn(&Polygon) -> Result<f64> + Send + Sync;
type LengthEval = dyn Fn(&DistanceMatrix) -> Result<f64> + Send + Sync;

/// `f(V1, ..., Vn)`.
#[derive(Clone)]
pub struct VertexCenterFunction {
    name: String,
    domain: Domain,
    floor: f64,
    eval: Arc<VertexEval>,
}

impl VertexCenterFunction {
    pub fn new(
        name: impl Into<String>,
        domain: Domain,
        eval: impl Fn(&Polygon) -> Result<f64> + Send + Sync + 'static,
    ) -> Self {
        VertexCenterFunction {
            name: name.into(),
            domain,
            floor: 0.0,
            eval: Arc::new(eval),
        }
    }

    /// Values below this magnitude count as zero in coincidence tests.
    pub fn with_magnitude_floor(mut self, floor: f64) -> Self {
        self.floor = floor;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// Evaluates without the domain guard.
    pub fn eval_unchecked(&self, p: &Polygon) -> Result<f64> {
        (self.eval)(p)
    }

    pub fn evaluate(&self, p: &Polygon) -> Result<f64> {
        self.domain.check(&self.name, p)?;
        (self.eval)(p)
    }
}

impl fmt::Debug for VertexCenterFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VertexCenterFunction")
            .field("name", &self.name)
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

/// `g(d_ij)`.
#[derive(Clone)]
pub struct LengthCenterFunction {
    name: String,
    domain: Domain,
    floor: f64,
    eval: Arc<LengthEval>,
}

impl LengthCenterFunction {
    pub fn new(
        name: impl Into<String>,
        domain: Domain,
        eval: impl Fn(&DistanceMatrix) -> Result<f64> + Send + Sync + 'static,
    ) -> Self {
        LengthCenterFunction {
            name: name.into(),
            domain,
            floor: 0.0,
            eval: Arc::new(eval),
        }
    }

    pub fn with_magnitude_floor(mut self, floor: f64) -> Self {
        self.floor = floor;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn eval_unchecked(&self, d: &DistanceMatrix) -> Result<f64> {
        (self.eval)(d)
    }

    pub fn evaluate(&self, d: &DistanceMatrix) -> Result<f64> {
        self.domain.check_lengths(&self.name, d)?;
        (self.eval)(d)
    }
}

impl fmt::Debug for LengthCenterFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LengthCenterFunction")
            .field("name", &self.name)
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

#[derive(Debug, Clone)]
pub enum CenterFunction {
    Vertex(VertexCenterFunction),
    Length(LengthCenterFunction),
}

impl From<VertexCenterFunction> for CenterFunction {
    fn from(f: VertexCenterFunction) -> Self {
        CenterFunction::Vertex(f)
    }
}

impl From<LengthCenterFunction> for CenterFunction {
    fn from(g: LengthCenterFunction) -> Self {
        CenterFunction::Length(g)
    }
}

impl CenterFunction {
    pub fn name(&self) -> &str {
        match self {
            CenterFunction::Vertex(f) => f.name(),
            CenterFunction::Length(g) => g.name(),
        }
    }

    pub fn domain(&self) -> Domain {
        match self {
            CenterFunction::Vertex(f) => f.domain(),
            CenterFunction::Length(g) => g.domain(),
        }
    }

    pub fn magnitude_floor(&self) -> f64 {
        match self {
            CenterFunction::Vertex(f) => f.floor,
            CenterFunction::Length(g) => g.floor,
        }
    }

    /// Value on the polygon as labeled. Length functions measure it first.
    pub fn evaluate(&self, p: &Polygon) -> Result<f64> {
        self.domain().check(self.name(), p)?;
        self.eval_unchecked(p)
    }

    fn eval_unchecked(&self, p: &Polygon) -> Result<f64> {
        match self {
            CenterFunction::Vertex(f) => f.eval_unchecked(p),
            CenterFunction::Length(g) => g.eval_unchecked(&distance_matrix(p)),
        }
    }

    /// The `n` values on the cyclic shifts `(V_k, ..., V_{k-1})`.
    pub fn cyclic_values(&self, p: &Polygon) -> Result<Vec<f64>> {
        self.domain().check(self.name(), p)?;
        match self {
            CenterFunction::Vertex(f) => (0..p.len()).map(|k| f.eval_unchecked(&p.cyclic_shift(k))).collect(),
            CenterFunction::Length(g) => {
                let d = distance_matrix(p);
                (0..p.len()).map(|k| g.eval_unchecked(&d.shifted(k))).collect()
            }
        }
    }

    pub fn coordinate_map(&self, p: &Polygon) -> Result<ProjectiveCoords> {
        ProjectiveCoords::new(self.cyclic_values(p)?)
    }
}

/// A point of real projective space, given by homogeneous coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveCoords {
    coords: Vec<f64>,
}

impl ProjectiveCoords {
    /// Rejects the all-zero tuple, and non-finite entries.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if let Some(i) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::Eval(format!("coordinate {} is not finite", i + 1)));
        }
        if coords.iter().all(|&c| c == 0.0) {
            return Err(Error::AllZero);
        }
        Ok(ProjectiveCoords { coords })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// `alpha([t_1 : ... : t_n]) = [t_{alpha(1)} : ... : t_{alpha(n)}]`.
    pub fn permuted(&self, alpha: &DihedralElement) -> ProjectiveCoords {
        ProjectiveCoords {
            coords: (0..self.coords.len())
                .map(|i| self.coords[alpha.apply_index(i)])
                .collect(),
        }
    }

    /// Distance between the two points after dividing both tuples by the
    /// entry where `self` is largest in magnitude.
    pub fn distance(&self, other: &ProjectiveCoords) -> f64 {
        if self.coords.len() != other.coords.len() {
            return f64::INFINITY;
        }
        let k = argmax_abs(&self.coords);
        let (a, b) = (self.coords[k], other.coords[k]);
        if b == 0.0 {
            return f64::INFINITY;
        }
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(x, y)| (x / a - y / b).abs())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &ProjectiveCoords, tol: f64) -> bool {
        self.distance(other) <= tol
    }
}

fn argmax_abs(v: &[f64]) -> usize {
    let mut k = 0;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[k].abs() {
            k = i;
        }
    }
    k
}

/// Affine weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct BarycentricWeights {
    weights: Vec<f64>,
}

impl BarycentricWeights {
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `Σ w_k V_k`.
    pub fn combine(&self, p: &Polygon) -> Point2 {
        self.weights
            .iter()
            .zip(p.vertices())
            .fold(Point2::ORIGIN, |acc, (&w, &v)| acc + v * w)
    }
}

pub fn normalize(c: &ProjectiveCoords) -> Result<BarycentricWeights> {
    let sum: f64 = c.coords.iter().sum();
    let max = c.coords.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if sum.abs() <= ZERO_SUM_TOL * max {
        return Err(Error::ZeroSum);
    }
    Ok(BarycentricWeights {
        weights: c.coords.iter().map(|x| x / sum).collect(),
    })
}

pub fn coordinate_map_vertex(f: &VertexCenterFunction, p: &Polygon) -> Result<ProjectiveCoords> {
    CenterFunction::Vertex(f.clone()).coordinate_map(p)
}

/// Entry `k` is `g` applied to `d_{rho^k(i), rho^k(j)}`.
pub fn coordinate_map_length(g: &LengthCenterFunction, d: &DistanceMatrix) -> Result<ProjectiveCoords> {
    g.domain.check_lengths(&g.name, d)?;
    let values = (0..d.n())
        .map(|k| g.eval_unchecked(&d.shifted(k)))
        .collect::<Result<Vec<_>>>()?;
    ProjectiveCoords::new(values)
}

/// The point whose barycentric coordinates are the normalized coordinate map.
pub fn geometric_center(f: &CenterFunction, p: &Polygon) -> Result<Point2> {
    let w = normalize(&f.coordinate_map(p)?)?;
    Ok(w.combine(p))
}

/// `f(V) = g(|V_i - V_j|)`.
pub fn lift_length_to_vertex(g: &LengthCenterFunction) -> VertexCenterFunction {
    let inner = g.clone();
    VertexCenterFunction {
        name: format!("lifted({})", g.name),
        domain: g.domain,
        floor: g.floor,
        eval: Arc::new(move |p: &Polygon| inner.eval_unchecked(&distance_matrix(p))),
    }
}

/// `g(d) = f(V(d))` with `V(d)` the clockwise representative rebuilt from
/// the lengths. Exact only for functions that are also invariant under
/// reflections of the plane, since lengths cannot see orientation.
pub fn lower_vertex_to_length(f: &VertexCenterFunction) -> LengthCenterFunction {
    let inner = f.clone();
    LengthCenterFunction {
        name: format!("lowered({})", f.name),
        domain: f.domain,
        floor: f.floor,
        eval: Arc::new(move |d: &DistanceMatrix| inner.eval_unchecked(&reconstruct(d)?.polygon)),
    }
}

/// Outcome of a statistical check of the center-function axioms.
#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    pub relabel_ok: bool,
    pub motion_ok: bool,
    pub homogeneity_ok: bool,
    /// Mean log-log slope; `None` when homogeneity failed or every sample was zero.
    pub estimated_degree: Option<f64>,
    pub max_violation: f64,
    pub trials: usize,
    /// First polygon on which a property failed.
    pub witness: Option<(Axiom, Polygon)>,
}

impl AxiomReport {
    pub fn all_ok(&self) -> bool {
        self.relabel_ok && self.motion_ok && self.homogeneity_ok
    }
}

/// Relative tolerance for the relabel and motion checks.
pub const AXIOM_TOL: f64 = 1e-9;
/// Allowed spread of the estimated homogeneity degree.
pub const DEGREE_TOL: f64 = 1e-6;
const SCALES: [f64; 3] = [0.5, 2.0, 4.0];

fn rel_diff(a: f64, b: f64, floor: f64) -> f64 {
    let denom = a.abs().max(b.abs()).max(floor);
    if denom == 0.0 {
        0.0
    } else {
        (a - b).abs() / denom
    }
}

/// Checks, on `trials` seeded samples: invariance under the reflection
/// relabeling fixing `V1`, invariance under a random rigid motion, and a
/// constant log-log slope of `f(tV)/f(V)` for `t` in `{1/2, 2, 4}`.
pub fn verify_axioms(f: &CenterFunction, sampler: Sampler, trials: usize, seed: u64) -> Result<AxiomReport> {
    assert!(trials >= 1, "verify_axioms needs at least one trial");
    let mut rng = seeded(seed);
    let floor = f.magnitude_floor();
    let sigma = DihedralElement::sigma(sampler.n());
    let (mut relabel_max, mut motion_max) = (0.0f64, 0.0f64);
    let mut sign_flip = false;
    let mut slopes = Vec::new();
    let mut witness: Option<(Axiom, Polygon)> = None;
    let mut slope_witness: Vec<Polygon> = Vec::new();

    for _ in 0..trials {
        let p = sampler.draw(&mut rng);
        f.domain().check(f.name(), &p)?;
        let v = f.eval_unchecked(&p)?;

        let r = rel_diff(v, f.eval_unchecked(&relabel(&sigma, &p))?, floor);
        if r > AXIOM_TOL && witness.is_none() {
            witness = Some((Axiom::Relabel, p.clone()));
        }
        relabel_max = relabel_max.max(r);

        let m = random_rigid_motion(&mut rng, 10.0);
        let r = rel_diff(v, f.eval_unchecked(&apply_motion(&m, &p))?, floor);
        if r > AXIOM_TOL && witness.is_none() {
            witness = Some((Axiom::Motion, p.clone()));
        }
        motion_max = motion_max.max(r);

        for t in SCALES {
            let vt = f.eval_unchecked(&p.scaled(t))?;
            if v == 0.0 || vt == 0.0 {
                if (v == 0.0) != (vt == 0.0) {
                    sign_flip = true;
                    slope_witness.push(p.clone());
                }
                continue;
            }
            let ratio = vt / v;
            if ratio <= 0.0 {
                sign_flip = true;
                slope_witness.push(p.clone());
                continue;
            }
            slopes.push(ratio.ln() / t.ln());
            slope_witness.push(p.clone());
        }
    }

    let (estimated_degree, spread) = if slopes.is_empty() {
        (None, 0.0)
    } else {
        let mean = slopes.iter().sum::<f64>() / slopes.len() as f64;
        let spread = slopes.iter().map(|s| (s - mean).abs()).fold(0.0, f64::max);
        (Some(mean), spread)
    };
    let homogeneity_ok = !sign_flip && spread <= DEGREE_TOL;
    if !homogeneity_ok && witness.is_none() {
        // the sample whose slope strays furthest from the mean
        let mean = estimated_degree.unwrap_or(0.0);
        let worst = slopes
            .iter()
            .enumerate()
            .max_by(|a, b| (a.1 - mean).abs().total_cmp(&(b.1 - mean).abs()))
            .map(|(i, _)| i)
            .unwrap_or(0);
        witness = slope_witness.get(worst).cloned().map(|p| (Axiom::Homogeneity, p));
    }

    Ok(AxiomReport {
        relabel_ok: relabel_max <= AXIOM_TOL,
        motion_ok: motion_max <= AXIOM_TOL,
        homogeneity_ok,
        estimated_degree: if homogeneity_ok { estimated_degree } else { None },
        max_violation: relabel_max.max(motion_max).max(spread),
        trials,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri345() -> Polygon {
        Polygon::from_xy(&[(0.0, 0.0), (3.0, 0.0), (0.0, 4.0)]).unwrap()
    }

    fn g1() -> LengthCenterFunction {
        LengthCenterFunction::new("g1", Domain::ALL, |d| Ok(d.get(d.n() - 1, 0) + d.get(0, 1)))
    }

    fn one() -> VertexCenterFunction {
        VertexCenterFunction::new("one", Domain::ALL, |_| Ok(1.0))
    }

    fn side_difference() -> LengthCenterFunction {
        LengthCenterFunction::new("d12-d23", Domain::ALL, |d| Ok(d.get(0, 1) - d.get(1, 2)))
    }

    #[test]
    fn constant_function_gives_all_ones() {
        let p = Polygon::from_xy(&[(0.0, 0.0), (2.0, 0.0), (3.0, 1.0), (1.0, 3.0), (-1.0, 1.0)]).unwrap();
        assert_eq!(coordinate_map_vertex(&one(), &p).unwrap().coords(), &[1.0; 5]);
    }

    #[test]
    fn perimeter_weights_on_345_triangle() {
        let c = coordinate_map_length(&g1(), &distance_matrix(&tri345())).unwrap();
        assert_eq!(c.coords(), &[7.0, 8.0, 9.0]);
        let w = normalize(&c).unwrap();
        let expect = [7.0 / 24.0, 8.0 / 24.0, 9.0 / 24.0];
        for (a, b) in w.weights().iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
        let g = geometric_center(&g1().into(), &tri345()).unwrap();
        assert!((g.x - 1.0).abs() < 1e-12 && (g.y - 1.5).abs() < 1e-12);
    }

    #[test]
    fn zero_sum_and_all_zero() {
        let c = coordinate_map_length(&side_difference(), &distance_matrix(&tri345())).unwrap();
        assert_eq!(c.coords(), &[-2.0, 1.0, 1.0]);
        assert!(matches!(normalize(&c), Err(Error::ZeroSum)));

        // exactly equal sides, so every difference vanishes
        let d = DistanceMatrix::from_rows(&[vec![0.0, 1.0, 1.0], vec![1.0, 0.0, 1.0], vec![1.0, 1.0, 0.0]]).unwrap();
        assert!(matches!(
            coordinate_map_length(&side_difference(), &d),
            Err(Error::AllZero)
        ));
        let lifted = lift_length_to_vertex(&side_difference());
        let exact = Polygon::from_xy(&[(0.0, 0.0), (2.0, 0.0), (1.0, 3f64.sqrt())]).unwrap();
        // 2 and |(1, √3)| = 2 exactly in floating point
        assert!(matches!(coordinate_map_vertex(&lifted, &exact), Err(Error::AllZero)));
    }

    #[test]
    fn normalize_all_ones() {
        let w = normalize(&ProjectiveCoords::new(vec![1.0; 4]).unwrap()).unwrap();
        assert_eq!(w.weights(), &[0.25; 4]);
    }

    #[test]
    fn projective_comparison_ignores_scale_and_sign() {
        let a = ProjectiveCoords::new(vec![1.0, -2.0, 3.0]).unwrap();
        let b = ProjectiveCoords::new(vec![-2.0, 4.0, -6.0]).unwrap();
        assert!(a.approx_eq(&b, 1e-15));
        let c = ProjectiveCoords::new(vec![1.0, -2.0, 3.1]).unwrap();
        assert!(!a.approx_eq(&c, 1e-9));
        assert!(ProjectiveCoords::new(vec![0.0, 0.0]).is_err());
    }

    #[test]
    fn lift_evaluates_on_measured_lengths() {
        let f = lift_length_to_vertex(&g1());
        assert_eq!(f.evaluate(&tri345()).unwrap(), 7.0);
        assert!(f.name().starts_with("lifted"));
        let l = lift_length_to_vertex(&LengthCenterFunction::new("one", Domain::ALL, |_| Ok(1.0)));
        assert_eq!(l.evaluate(&tri345()).unwrap(), 1.0);
    }

    #[test]
    fn lower_rejects_infeasible_lengths() {
        let g = lower_vertex_to_length(&one());
        let ok = distance_matrix(&tri345());
        assert_eq!(g.evaluate(&ok).unwrap(), 1.0);
        let bad = DistanceMatrix::from_rows(&[vec![0.0, 1.0, 5.0], vec![1.0, 0.0, 1.0], vec![5.0, 1.0, 0.0]]).unwrap();
        assert!(matches!(g.evaluate(&bad), Err(Error::InfeasibleDistances { .. })));
    }

    #[test]
    fn axioms_for_simple_functions() {
        let r = verify_axioms(&one().into(), Sampler::Generic { n: 5 }, 50, 1).unwrap();
        assert!(r.all_ok());
        assert_eq!(r.estimated_degree, Some(0.0));

        let r = verify_axioms(&lift_length_to_vertex(&g1()).into(), Sampler::Generic { n: 6 }, 50, 2).unwrap();
        assert!(r.all_ok());
        assert!((r.estimated_degree.unwrap() - 1.0).abs() < 1e-9);

        let x1 = VertexCenterFunction::new("x1", Domain::ALL, |p: &Polygon| Ok(p.vertices()[0].x));
        let r = verify_axioms(&x1.into(), Sampler::Generic { n: 4 }, 20, 3).unwrap();
        assert!(!r.motion_ok);
        assert!(r.relabel_ok);
        assert!(matches!(r.witness, Some((Axiom::Motion, _))));
    }

    #[test]
    fn axioms_detect_relabel_and_homogeneity_failures() {
        let edge12 = LengthCenterFunction::new("d12", Domain::ALL, |d| Ok(d.get(0, 1)));
        let r = verify_axioms(&edge12.into(), Sampler::Generic { n: 5 }, 10, 4).unwrap();
        assert!(!r.relabel_ok && r.motion_ok && r.homogeneity_ok);

        let mixed = LengthCenterFunction::new("d12+d12^2", Domain::ALL, |d| {
            let (a, b) = (d.get(0, 1) + d.get(0, 4), d.get(0, 1) * d.get(0, 4));
            Ok(a + b)
        });
        let r = verify_axioms(&mixed.into(), Sampler::Generic { n: 5 }, 10, 5).unwrap();
        assert!(r.relabel_ok && !r.homogeneity_ok);
        assert_eq!(r.estimated_degree, None);
        assert!(matches!(r.witness, Some((Axiom::Homogeneity, _))));
    }

    #[test]
    fn sampler_leaving_domain_is_an_error() {
        let convex_only = VertexCenterFunction::new("c", Domain::CONVEX, |_| Ok(1.0));
        let r = verify_axioms(&convex_only.into(), Sampler::Generic { n: 7 }, 50, 6);
        assert!(matches!(r, Err(Error::DomainViolation { .. })));
    }
}
