use proptest::prelude::*;
use sigma_geom::linalg::symmetric_eigenvalues;
use sigma_geom::world::IntervalMap;
use sigma_geom::*;

fn coords(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-10.0..10.0f64, n)
}

fn geometries() -> Vec<Geometry> {
    vec![
        Geometry::euclidean(3).unwrap(),
        Geometry::minkowski(3, 1.0).unwrap(),
        Geometry::minkowski(3, 2.5).unwrap(),
        Geometry::distorted(3, 1.0, 0.01, 0.001).unwrap(),
        Geometry::distorted(3, 1.0, 0.3, 0.05).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn sigma_is_symmetric(p in coords(3), q in coords(3)) {
        for g in geometries() {
            let a = g.sigma_raw(&p, &q);
            let b = g.sigma_raw(&q, &p);
            prop_assert!((a - b).abs() <= 1e-12 * (1.0 + a.abs()), "{g:?}: {a} vs {b}");
        }
    }

    #[test]
    fn self_distance_vanishes(p in coords(3)) {
        for g in geometries() {
            prop_assert_eq!(g.sigma_raw(&p, &p), 0.0);
        }
    }

    #[test]
    fn self_scalar_product_is_twice_sigma(p in coords(3), q in coords(3)) {
        let (p, q) = (Point::new(p).unwrap(), Point::new(q).unwrap());
        for g in geometries() {
            let v = Vector::new(p.clone(), q.clone()).unwrap();
            let s = evaluate_sigma(&g, &p, &q).unwrap();
            prop_assert_eq!(scalar_product(&g, &v, &v).unwrap(), 2.0 * s);
            prop_assert_eq!(squared_length(&g, &v).unwrap(), 2.0 * s);
        }
    }

    #[test]
    fn distortion_is_continuous(d in 0.0..1.0f64, s0 in 1e-4..1.0f64) {
        let map = Distortion::new(d, s0).unwrap();
        for x in [0.0, s0] {
            let below = map.apply(x * (1.0 - 1e-15) - 1e-300);
            let above = map.apply(x * (1.0 + 1e-15) + 1e-300);
            prop_assert!((below - above).abs() <= 1e-12, "jump {} at {x}", above - below);
        }
    }

    #[test]
    fn euclidean_gram_is_positive_semidefinite(pts in prop::collection::vec(coords(3), 2..6)) {
        let g = Geometry::euclidean(3).unwrap();
        let sk = Skeleton::new(pts.into_iter().map(|c| Point::new(c).unwrap()).collect()).unwrap();
        let gram = sigma_geom::calculus::gram_matrix(&g, &sk).unwrap();
        let eig = symmetric_eigenvalues(&gram);
        prop_assert!(eig[0] >= -1e-10 * gram.max_abs().max(1.0), "{eig:?}");
    }

    #[test]
    fn covariant_coordinates_reconstruct_sigma(
        base in coords(3),
        e1 in coords(3), e2 in coords(3), e3 in coords(3),
        p in coords(3), q in coords(3),
    ) {
        let g = Geometry::euclidean(3).unwrap();
        let pts: Vec<Point> = [&base, &e1, &e2, &e3].iter().map(|c| Point::new(c.to_vec()).unwrap()).collect();
        let sk = Skeleton::new(pts).unwrap();
        let Ok(mt) = metric_tensor(&g, &sk) else {
            return Ok(());
        };
        // skip skeletons too close to singular for a 1e-9 reconstruction
        let eig = symmetric_eigenvalues(&mt.lower);
        prop_assume!(eig[0] > 1e-3 * eig[2]);
        let (p, q) = (Point::new(p).unwrap(), Point::new(q).unwrap());
        let xp = covariant_coordinates(&g, &sk, &p).unwrap();
        let xq = covariant_coordinates(&g, &sk, &q).unwrap();
        let dx: Vec<f64> = xp.iter().zip(&xq).map(|(a, b)| a - b).collect();
        let s = evaluate_sigma(&g, &p, &q).unwrap();
        let rebuilt = mt.quadratic_form(&dx);
        prop_assert!((s - rebuilt).abs() <= 1e-9 * s.max(1.0), "{s} vs {rebuilt}");
    }
}

#[test]
fn minkowski_light_speed_sets_units() {
    // a light ray is null for every c
    for c in [1.0, 3.0, 299_792_458.0] {
        let g = Geometry::minkowski(2, c).unwrap();
        let v = Vector::new(Point::origin(2), Point::new([2.0, 2.0 * c]).unwrap()).unwrap();
        assert_eq!(classify(&g, &v).unwrap(), IntervalClass::Null);
    }
}
