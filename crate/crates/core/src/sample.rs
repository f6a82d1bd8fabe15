//! Seeded polygon generators.
//!
//! Everything here is deterministic given the seed: the generator is ChaCha8,
//! whose stream is stable across platforms and releases.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{Point2, Polygon, RigidMotion, Similarity};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Vertex `j` at angle `phase + 2πjk/n`. `k = 1` gives the convex regular
/// polygon, `gcd(n, k) = 1` with `1 < k < n/2` the star `{n/k}`.
pub fn regular_polygon(n: usize, k: usize, radius: f64, center: Point2, phase: f64) -> Polygon {
    Polygon::new(
        (0..n)
            .map(|j| {
                let a = phase + TAU * (j * k) as f64 / n as f64;
                center + Point2::new(a.cos(), a.sin()) * radius
            })
            .collect(),
    )
    .expect("regular polygon has n >= 3 finite vertices")
}

/// Uniform points in `[-extent, extent]²`; generally non-simple.
pub fn random_polygon(rng: &mut SeededRng, n: usize, extent: f64) -> Polygon {
    Polygon::new(
        (0..n)
            .map(|_| Point2::new(rng.random_range(-extent..extent), rng.random_range(-extent..extent)))
            .collect(),
    )
    .expect("n >= 3")
}

/// Strictly convex polygon: jittered angles on a random ellipse, then a
/// random rotation and translation. Orientation is counterclockwise.
pub fn random_convex_polygon(rng: &mut SeededRng, n: usize) -> Polygon {
    let step = TAU / n as f64;
    let phase = rng.random_range(0.0..TAU);
    let (a, b) = (rng.random_range(1.0..3.0), rng.random_range(1.0..3.0));
    let motion = random_rigid_motion(rng, 5.0);
    Polygon::new(
        (0..n)
            .map(|k| {
                let t = phase + (k as f64 + rng.random_range(0.0..0.6)) * step;
                motion.apply(Point2::new(a * t.cos(), b * t.sin()))
            })
            .collect(),
    )
    .expect("n >= 3")
}

/// Convex polygon with every exterior angle `2π/n` and positive,
/// generally unequal, side lengths. Sides `0..n-2` are drawn at random and
/// the last two are solved from the closure condition `Σ s_k u_k = 0`.
pub fn equiangular_convex_polygon(rng: &mut SeededRng, n: usize) -> Polygon {
    let step = TAU / n as f64;
    let dir = |k: usize| Point2::new((step * k as f64).cos(), (step * k as f64).sin());
    loop {
        let mut sides: Vec<f64> = (0..n - 2).map(|_| rng.random_range(0.5..1.5)).collect();
        let rest = sides
            .iter()
            .enumerate()
            .fold(Point2::ORIGIN, |acc, (k, &s)| acc + dir(k) * s);
        // s_{n-2} u_{n-2} + s_{n-1} u_{n-1} = -rest
        let (u, v) = (dir(n - 2), dir(n - 1));
        let det = u.wedge(v);
        let target = -rest;
        let s1 = target.wedge(v) / det;
        let s2 = u.wedge(target) / det;
        if s1 > 0.2 && s2 > 0.2 {
            sides.push(s1);
            sides.push(s2);
            let mut pos = Point2::ORIGIN;
            let mut verts = Vec::with_capacity(n);
            for (k, &s) in sides.iter().enumerate() {
                verts.push(pos);
                pos = pos + dir(k) * s;
            }
            let motion = random_rigid_motion(rng, 3.0);
            return Polygon::new(verts.into_iter().map(|p| motion.apply(p)).collect()).expect("n >= 3");
        }
    }
}

pub fn random_rigid_motion(rng: &mut SeededRng, extent: f64) -> RigidMotion {
    RigidMotion::new(
        rng.random_range(0.0..TAU),
        Point2::new(rng.random_range(-extent..extent), rng.random_range(-extent..extent)),
    )
}

pub fn random_similarity(rng: &mut SeededRng) -> Similarity {
    let scale = rng.random_range(0.2f64..5.0);
    Similarity::new(scale, random_rigid_motion(rng, 5.0)).expect("positive scale")
}

/// Families of test polygons, chosen to stay inside a center function's domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampler {
    /// Uniform random vertices (usually self-intersecting).
    Generic { n: usize },
    /// Strictly convex polygons.
    Convex { n: usize },
}

impl Sampler {
    pub fn n(&self) -> usize {
        match *self {
            Sampler::Generic { n } | Sampler::Convex { n } => n,
        }
    }

    pub fn draw(&self, rng: &mut SeededRng) -> Polygon {
        match *self {
            Sampler::Generic { n } => random_polygon(rng, n, 5.0),
            Sampler::Convex { n } => random_convex_polygon(rng, n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::classify;

    #[test]
    fn convex_generator_is_convex() {
        let mut rng = seeded(7);
        for n in 3..=12 {
            for _ in 0..20 {
                let p = random_convex_polygon(&mut rng, n);
                let c = classify(&p);
                assert!(c.convex && c.simple && c.signed_area > 0.0, "{p}");
            }
        }
    }

    #[test]
    fn equiangular_generator_closes_and_turns_evenly() {
        let mut rng = seeded(11);
        for n in 3..=10 {
            let p = equiangular_convex_polygon(&mut rng, n);
            assert!(classify(&p).convex);
            // brute-force check: each turn is exactly 2π/n
            for i in 0..n as isize {
                let a = p.vertex(i) - p.vertex(i - 1);
                let b = p.vertex(i + 1) - p.vertex(i);
                let turn = a.wedge(b).atan2(a.dot(b));
                assert!((turn - TAU / n as f64).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn same_seed_same_polygon() {
        let a = random_polygon(&mut seeded(3), 6, 1.0);
        let b = random_polygon(&mut seeded(3), 6, 1.0);
        assert_eq!(a, b);
    }
}
