//! Planar primitives: points, polygons, motions, dihedral relabelings and
//! distance matrices.
//!
//! Vertices are stored 0-based. Documentation and the expression language
//! use 1-based labels `V1..Vn`; every index is understood cyclically.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Collinearity threshold for orientation tests, relative to the squared
/// coordinate scale.
pub const ORIENTATION_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// The wedge `x1*y2 - x2*y1`.
    pub fn wedge(self, other: Point2) -> f64 {
        self.x * other.y - other.x * self.y
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Point2) -> f64 {
        (self - other).norm()
    }

    pub fn rotate(self, angle: f64) -> Point2 {
        let (s, c) = angle.sin_cos();
        Point2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, t: f64) -> Point2 {
        Point2::new(self.x * t, self.y * t)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Orientation of the triple `(a, b, c)`: twice the signed triangle area.
pub fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    (b - a).wedge(c - a)
}

/// An ordered, closed chain of at least three finite vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point2>,
}

impl Polygon {
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidPolygon(format!(
                "need at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        if let Some(i) = vertices.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidPolygon(format!("vertex {} is not finite", i + 1)));
        }
        Ok(Polygon { vertices })
    }

    pub fn from_xy(coords: &[(f64, f64)]) -> Result<Self> {
        Polygon::new(coords.iter().map(|&(x, y)| Point2::new(x, y)).collect())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Always false: a polygon has at least three vertices.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    /// Vertex at a cyclic 0-based index.
    pub fn vertex(&self, i: isize) -> Point2 {
        let n = self.vertices.len() as isize;
        self.vertices[i.rem_euclid(n) as usize]
    }

    /// The chain read from vertex `k` (0-based) onwards: `(V_{k+1}, ..., V_n, V_1, ..., V_k)`
    /// in 1-based labels. Entry `k` of a coordinate map evaluates on this.
    pub fn cyclic_shift(&self, k: usize) -> Polygon {
        let n = self.len();
        Polygon {
            vertices: (0..n).map(|i| self.vertices[(i + k) % n]).collect(),
        }
    }

    pub fn mean(&self) -> Point2 {
        let s = self.vertices.iter().fold(Point2::ORIGIN, |acc, &v| acc + v);
        s * (1.0 / self.len() as f64)
    }

    pub fn diameter(&self) -> f64 {
        let mut d: f64 = 0.0;
        for (i, &a) in self.vertices.iter().enumerate() {
            for &b in &self.vertices[i + 1..] {
                d = d.max(a.dist(b));
            }
        }
        d
    }

    pub fn edge_lengths(&self) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| self.vertices[i].dist(self.vertices[(i + 1) % n]))
            .collect()
    }

    pub fn perimeter(&self) -> f64 {
        self.edge_lengths().iter().sum()
    }

    /// Shoelace area, positive for counterclockwise order.
    pub fn signed_area(&self) -> f64 {
        let n = self.len();
        0.5 * (0..n)
            .map(|i| self.vertices[i].wedge(self.vertices[(i + 1) % n]))
            .sum::<f64>()
    }

    pub fn map(&self, f: impl Fn(Point2) -> Point2) -> Polygon {
        Polygon {
            vertices: self.vertices.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn scaled(&self, t: f64) -> Polygon {
        self.map(|v| v * t)
    }

    /// Largest absolute coordinate, used to scale tolerances.
    pub fn coordinate_scale(&self) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.x.abs().max(v.y.abs()))
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// Orientation-preserving isometry `p -> R(angle) p + translation`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidMotion {
    pub rotation_angle: f64,
    pub translation: Point2,
}

impl RigidMotion {
    pub const IDENTITY: RigidMotion = RigidMotion {
        rotation_angle: 0.0,
        translation: Point2::ORIGIN,
    };

    pub fn new(rotation_angle: f64, translation: Point2) -> Self {
        RigidMotion {
            rotation_angle,
            translation,
        }
    }

    pub fn apply(&self, p: Point2) -> Point2 {
        p.rotate(self.rotation_angle) + self.translation
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &RigidMotion) -> RigidMotion {
        RigidMotion {
            rotation_angle: self.rotation_angle + other.rotation_angle,
            translation: self.apply(other.translation),
        }
    }

    pub fn inverse(&self) -> RigidMotion {
        RigidMotion {
            rotation_angle: -self.rotation_angle,
            translation: (-self.translation).rotate(-self.rotation_angle),
        }
    }
}

/// `p -> motion(scale * p)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Similarity {
    scale: f64,
    pub motion: RigidMotion,
}

impl Similarity {
    pub fn new(scale: f64, motion: RigidMotion) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(Error::InvalidPolygon(format!(
                "similarity scale must be positive, got {scale}"
            )));
        }
        Ok(Similarity { scale, motion })
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn apply(&self, p: Point2) -> Point2 {
        self.motion.apply(p * self.scale)
    }
}

/// Anything that moves points of the plane.
pub trait PlaneMap {
    fn apply_point(&self, p: Point2) -> Point2;
}

impl PlaneMap for RigidMotion {
    fn apply_point(&self, p: Point2) -> Point2 {
        self.apply(p)
    }
}

impl PlaneMap for Similarity {
    fn apply_point(&self, p: Point2) -> Point2 {
        self.apply(p)
    }
}

pub fn apply_motion(m: &impl PlaneMap, p: &Polygon) -> Polygon {
    p.map(|v| m.apply_point(v))
}

/// Element `rho^rotation ∘ sigma^flip` of the dihedral group acting on the
/// labels `1..n`, with `rho(i) = i + 1` and `sigma(i) = 2 + n - i` (mod n,
/// representatives in `1..n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    n: usize,
    rotation: usize,
    flip: bool,
}

impl DihedralElement {
    pub fn new(n: usize, rotation: usize, flip: bool) -> Self {
        assert!(n >= 1, "dihedral group needs n >= 1");
        DihedralElement {
            n,
            rotation: rotation % n,
            flip,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, 0, false)
    }

    pub fn rho(n: usize) -> Self {
        Self::new(n, 1, false)
    }

    pub fn sigma(n: usize) -> Self {
        Self::new(n, 0, true)
    }

    /// All `2n` elements.
    pub fn all(n: usize) -> impl Iterator<Item = DihedralElement> {
        (0..n).flat_map(move |r| [false, true].map(|f| DihedralElement::new(n, r, f)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rotation(&self) -> usize {
        self.rotation
    }

    pub fn flip(&self) -> bool {
        self.flip
    }

    /// Image of a 0-based label.
    pub fn apply_index(&self, i: usize) -> usize {
        let n = self.n;
        let i = i % n;
        let s = if self.flip { (n - i) % n } else { i };
        (s + self.rotation) % n
    }

    /// Image of a 1-based label, returned in `1..=n`.
    pub fn apply_label(&self, i: usize) -> usize {
        self.apply_index(i - 1) + 1
    }

    /// The realized permutation on 0-based labels.
    pub fn permutation(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.apply_index(i)).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &DihedralElement) -> DihedralElement {
        assert_eq!(self.n, other.n, "composing elements of different groups");
        // rho^a s^f rho^b s^g = rho^(a ± b) s^(f xor g)
        let b = if self.flip {
            self.n - other.rotation
        } else {
            other.rotation
        };
        DihedralElement::new(self.n, self.rotation + b, self.flip ^ other.flip)
    }

    pub fn inverse(&self) -> DihedralElement {
        if self.flip {
            *self
        } else {
            DihedralElement::new(self.n, self.n - self.rotation, false)
        }
    }
}

/// Vertex `i` of the result is `V_{alpha(i)}` of the input.
pub fn relabel(alpha: &DihedralElement, p: &Polygon) -> Polygon {
    assert_eq!(alpha.n(), p.len(), "dihedral element does not match polygon size");
    Polygon {
        vertices: (0..p.len()).map(|i| p.vertices[alpha.apply_index(i)]).collect(),
    }
}

/// Symmetric matrix of pairwise lengths with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<f64>,
}

impl DistanceMatrix {
    /// Validates symmetry (to `1e-12` relative), zero diagonal and non-negativity.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if n < 3 {
            return Err(Error::InvalidMatrix(format!("need at least 3 rows, got {n}")));
        }
        let mut d = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            d.extend_from_slice(row);
        }
        let m = DistanceMatrix { n, d };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        let scale = self.max_entry().max(f64::MIN_POSITIVE);
        for i in 0..n {
            for j in 0..n {
                let v = self.get(i, j);
                if !v.is_finite() {
                    return Err(Error::InvalidMatrix(format!(
                        "entry ({}, {}) is not finite",
                        i + 1,
                        j + 1
                    )));
                }
                if i == j && v != 0.0 {
                    return Err(Error::InvalidMatrix(format!(
                        "diagonal entry ({0}, {0}) is nonzero",
                        i + 1
                    )));
                }
                if v < 0.0 {
                    return Err(Error::InvalidMatrix(format!(
                        "entry ({}, {}) is negative",
                        i + 1,
                        j + 1
                    )));
                }
                if (v - self.get(j, i)).abs() > 1e-12 * scale {
                    return Err(Error::InvalidMatrix(format!("not symmetric at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based indices.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.d[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.d.chunks(self.n).map(<[f64]>::to_vec).collect()
    }

    pub fn max_entry(&self) -> f64 {
        self.d.iter().copied().fold(0.0, f64::max)
    }

    /// `d'_{ij} = d_{alpha(i), alpha(j)}`: the matrix measured on `relabel(alpha, p)`.
    pub fn permuted(&self, alpha: &DihedralElement) -> DistanceMatrix {
        let perm = alpha.permutation();
        self.reindexed(|i| perm[i])
    }

    /// `d'_{ij} = d_{rho^k(i), rho^k(j)}`.
    pub fn shifted(&self, k: usize) -> DistanceMatrix {
        let n = self.n;
        self.reindexed(|i| (i + k) % n)
    }

    fn reindexed(&self, idx: impl Fn(usize) -> usize) -> DistanceMatrix {
        let n = self.n;
        let mut d = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                d.push(self.get(idx(i), idx(j)));
            }
        }
        DistanceMatrix { n, d }
    }

    pub fn scaled(&self, t: f64) -> DistanceMatrix {
        DistanceMatrix {
            n: self.n,
            d: self.d.iter().map(|v| v * t).collect(),
        }
    }
}

pub fn distance_matrix(p: &Polygon) -> DistanceMatrix {
    let n = p.len();
    let mut d = vec![0.0; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let v = p.vertices[i].dist(p.vertices[j]);
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    }
    DistanceMatrix { n, d }
}

/// Determinant by Gaussian elimination with partial pivoting.
pub(crate) fn determinant<const N: usize>(mut m: [[f64; N]; N]) -> f64 {
    let mut det = 1.0;
    for col in 0..N {
        let pivot = (col..N)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .unwrap_or(col);
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        let pivot_row = m[col];
        for row in m.iter_mut().skip(col + 1) {
            let factor = row[col] / pivot_row[col];
            for (x, &p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= factor * p;
            }
        }
    }
    det
}

/// Bordered 5×5 Cayley–Menger determinant of the quadrilateral with sides
/// `e12, e23, e34, e41` and diagonals `d13, d24`. Equals `288·V²` for the
/// tetrahedron on those lengths, so it vanishes for planar quadruples.
pub fn cayley_menger_quad(e12: f64, e23: f64, e34: f64, e41: f64, d13: f64, d24: f64) -> f64 {
    let [a, b, c, d, p, q] = [e12, e23, e34, e41, d13, d24].map(|x| x * x);
    determinant([
        [0.0, 1.0, 1.0, 1.0, 1.0],
        [1.0, 0.0, a, p, d],
        [1.0, a, 0.0, b, q],
        [1.0, p, b, 0.0, c],
        [1.0, d, q, c, 0.0],
    ])
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub nondegenerate: bool,
    pub simple: bool,
    pub convex: bool,
    pub signed_area: f64,
}

fn segments_intersect(a: Point2, b: Point2, c: Point2, d: Point2, eps: f64) -> bool {
    let sign = |v: f64| {
        if v.abs() <= eps {
            0
        } else if v > 0.0 {
            1
        } else {
            -1
        }
    };
    let o1 = sign(orient(a, b, c));
    let o2 = sign(orient(a, b, d));
    let o3 = sign(orient(c, d, a));
    let o4 = sign(orient(c, d, b));
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    let on_segment = |p: Point2, q: Point2, r: Point2| {
        r.x >= p.x.min(q.x) - eps.sqrt()
            && r.x <= p.x.max(q.x) + eps.sqrt()
            && r.y >= p.y.min(q.y) - eps.sqrt()
            && r.y <= p.y.max(q.y) + eps.sqrt()
    };
    (o1 == 0 && on_segment(a, b, c))
        || (o2 == 0 && on_segment(a, b, d))
        || (o3 == 0 && on_segment(c, d, a))
        || (o4 == 0 && on_segment(c, d, b))
}

pub fn classify(p: &Polygon) -> Classification {
    let n = p.len();
    let v = p.vertices();
    let scale = p.coordinate_scale().max(f64::MIN_POSITIVE);
    let eps = ORIENTATION_EPS * scale * scale;

    let nondegenerate = (0..n).all(|i| (i + 1..n).all(|j| v[i] != v[j]));

    // Adjacent edges share an endpoint by construction; only test the rest.
    let mut simple = nondegenerate;
    'outer: for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            if segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n], eps) {
                simple = false;
                break 'outer;
            }
        }
    }
    // Two adjacent edges folding back onto each other also break simplicity.
    if simple {
        for i in 0..n {
            let (a, b, c) = (v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
            if orient(a, b, c).abs() <= eps && (a - b).dot(c - b) > 0.0 {
                simple = false;
                break;
            }
        }
    }

    // Every other vertex strictly on one side of each edge line.
    let convex = nondegenerate
        && (0..n).all(|i| {
            let (a, b) = (v[i], v[(i + 1) % n]);
            let mut side = 0i8;
            (0..n).filter(|&k| k != i && k != (i + 1) % n).all(|k| {
                let o = orient(a, b, v[k]);
                if o.abs() <= eps {
                    return false;
                }
                let s = if o > 0.0 { 1 } else { -1 };
                if side == 0 {
                    side = s;
                }
                side == s
            })
        });

    Classification {
        nondegenerate,
        simple,
        convex,
        signed_area: p.signed_area(),
    }
}
