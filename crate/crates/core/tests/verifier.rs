use proptest::prelude::*;
use sigma_geom::verify::*;
use sigma_geom::*;

#[test]
fn euclidean_passes_in_low_dimensions() {
    for n in 1..=3 {
        let rep = verify_euclidean(&Geometry::euclidean(n).unwrap(), n, &SamplingSpec::default()).unwrap();
        assert!(rep.overall, "n={n}: {:?}", rep.failed());
        assert_eq!(rep.inferred_dimension, Some(n));
    }
}

#[test]
fn wrong_declared_dimension_fails_two() {
    // a plane declared as a line
    let rep = verify_euclidean(&Geometry::euclidean(2).unwrap(), 1, &SamplingSpec::default()).unwrap();
    assert!(!rep.overall);
    assert!(rep.failed().contains(&"II"));
    assert_eq!(rep.inferred_dimension, Some(2));
}

#[test]
fn minkowski_fails_positivity_only() {
    for c in [1.0, 2.0] {
        let rep = verify_euclidean(&Geometry::minkowski(4, c).unwrap(), 4, &SamplingSpec::default()).unwrap();
        assert_eq!(rep.failed(), vec!["IV"]);
        let neg = rep.positivity.values.iter().filter(|e| **e < 0.0).count();
        assert_eq!(neg, 3, "{:?}", rep.positivity.values);
    }
}

#[test]
fn distortion_breaks_linear_structure() {
    for d in [0.01, 0.1] {
        let rep = verify_euclidean(&Geometry::distorted(4, 1.0, d, 0.001).unwrap(), 4, &SamplingSpec::default()).unwrap();
        assert!(rep.failed().contains(&"III"));
        assert!(rep.linear_structure.max_residual >= 0.1 * d);
        assert_eq!(rep.linear_structure.witness.len(), 2);
    }
}

fn punctured(x: &[f64]) -> bool {
    // carrier with a thin slab around the first label = 1 removed
    (x[0] - 1.0).abs() > 1e-3
}

#[test]
fn restricted_carrier_breaks_existence() {
    let g = Geometry::euclidean(2).unwrap();
    let sk = Skeleton::axes(&Point::origin(2), 1.0);
    let probe = sigma_geom::envelopes::SampleBox::new(vec![-1.0, -1.0], vec![1.0, 1.0]).unwrap();
    let full = check_continuity(&g, &sk, &probe, 3, 1e-9, 1e-6, None, 0).unwrap();
    assert!(full.passed);
    let holed = check_continuity(&g, &sk, &probe, 3, 1e-9, 1e-6, Some(punctured), 0).unwrap();
    assert!(!holed.passed);
    // first witness is the unreachable coordinate tuple
    assert_eq!(holed.witness[0][0], 1.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn inferred_dimension_ignores_axis_labels(perm in Just(vec![0usize, 1, 2]).prop_shuffle(), seed in 0u64..1000, n in 1usize..=3) {
        // an n-flat embedded in three labels
        let g = Geometry::euclidean(3).unwrap();
        let mut pts = random_sample(3, 40, 5.0, seed);
        for p in &mut pts {
            let mut c = p.coords().to_vec();
            for x in c.iter_mut().skip(n) {
                *x = 0.0;
            }
            *p = Point::new(c).unwrap();
        }
        let relabelled: Vec<Point> = pts
            .iter()
            .map(|p| Point::new(perm.iter().map(|&k| p[k]).collect::<Vec<_>>()).unwrap())
            .collect();
        let a = infer_dimension(&g, &pts, 3, 1e-8, seed).unwrap();
        let b = infer_dimension(&g, &relabelled, 3, 1e-8, seed).unwrap();
        prop_assert_eq!(a.dimension, Some(n));
        prop_assert_eq!(b.dimension, Some(n));
    }
}
