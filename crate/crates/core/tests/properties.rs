//! Property tests over the public API.

use polycenter::catalog::{catalog, perimeter_function};
use polycenter::distance::reconstruct;
use polycenter::dsl::parse;
use polycenter::optim::{chebyshev_center, geometric_median, median_objective};
use polycenter::sample::{random_convex_polygon, random_polygon, seeded};
use polycenter::{
    distance_matrix, geometric_center, relabel, CenterFunction, DihedralElement, Point2, Polygon, RigidMotion,
};
use proptest::prelude::*;

fn polygon_strategy() -> impl Strategy<Value = Polygon> {
    (3usize..=9, any::<u64>(), any::<bool>()).prop_map(|(n, seed, convex)| {
        let mut rng = seeded(seed);
        if convex {
            random_convex_polygon(&mut rng, n)
        } else {
            random_polygon(&mut rng, n, 3.0)
        }
    })
}

fn dihedral_strategy(n: usize) -> impl Strategy<Value = DihedralElement> {
    (0..n, any::<bool>()).prop_map(move |(r, f)| DihedralElement::new(n, r, f))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn relabeling_permutes_coordinates((p, alpha) in polygon_strategy().prop_flat_map(|p| {
        let n = p.len();
        (Just(p), dihedral_strategy(n))
    })) {
        for entry in catalog() {
            let Ok(base) = entry.function.coordinate_map(&p) else { continue };
            let moved = entry.function.coordinate_map(&relabel(&alpha, &p)).unwrap();
            prop_assert!(base.permuted(&alpha).approx_eq(&moved, 1e-9), "{}: {:?} vs {:?}", entry.name, base, moved);
        }
    }

    #[test]
    fn relabeling_keeps_the_center(p in polygon_strategy(), r in 0usize..9, flip in any::<bool>()) {
        let alpha = DihedralElement::new(p.len(), r % p.len(), flip);
        let q = relabel(&alpha, &p);
        for entry in catalog() {
            if let Ok(c) = geometric_center(&entry.function, &p) {
                let d = geometric_center(&entry.function, &q).unwrap();
                prop_assert!(c.dist(d) <= 1e-9 * p.coordinate_scale().max(1.0), "{}", entry.name);
            }
        }
    }

    #[test]
    fn centers_follow_rigid_motions(p in polygon_strategy(), angle in 0.0..std::f64::consts::TAU, tx in -5.0..5.0f64, ty in -5.0..5.0f64) {
        let m = RigidMotion::new(angle, Point2::new(tx, ty));
        let q = p.map(|v| m.apply(v));
        for entry in catalog() {
            if let Ok(c) = geometric_center(&entry.function, &p) {
                let d = geometric_center(&entry.function, &q).unwrap();
                prop_assert!(m.apply(c).dist(d) <= 1e-9 * q.coordinate_scale().max(1.0), "{}", entry.name);
            }
        }
        let a = chebyshev_center(&p).unwrap().center;
        let b = chebyshev_center(&q).unwrap().center;
        prop_assert!(m.apply(a).dist(b) <= 1e-9 * q.coordinate_scale().max(1.0));
    }

    #[test]
    fn reconstruction_preserves_lengths(p in polygon_strategy()) {
        let d = distance_matrix(&p);
        let r = reconstruct(&d).unwrap();
        let back = distance_matrix(&r.polygon);
        for i in 0..p.len() {
            for j in 0..p.len() {
                prop_assert!((back.get(i, j) - d.get(i, j)).abs() <= 1e-9 * d.max_entry().max(1.0));
            }
        }
        prop_assert!(r.polygon.signed_area() <= 0.0);
        prop_assert_eq!(r.polygon.vertices()[0], Point2::ORIGIN);
    }

    #[test]
    fn median_beats_every_vertex_and_the_mean(p in polygon_strategy()) {
        let m = geometric_median(&p, 1e-12, 100_000).unwrap();
        let best = median_objective(&p, m.point);
        for &v in p.vertices().iter().chain(std::iter::once(&p.mean())) {
            prop_assert!(best <= median_objective(&p, v) + 1e-9);
        }
    }

    #[test]
    fn parsed_perimeter_matches_builtin(seed in any::<u64>(), n in 3usize..=10) {
        let p = random_convex_polygon(&mut seeded(seed), n);
        let parsed: CenterFunction = parse("d(n,1)+d(1,2)").unwrap().to_function().into();
        let builtin: CenterFunction = perimeter_function().into();
        prop_assert_eq!(parsed.coordinate_map(&p).unwrap(), builtin.coordinate_map(&p).unwrap());
    }
}
