use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sigma_geom::predicates::*;
use sigma_geom::*;

fn pt(c: &[f64]) -> Point {
    Point::new(c.to_vec()).unwrap()
}

fn coords(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-5.0..5.0f64, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn collinearity_residual_is_symmetric_in_q_and_r(p0 in coords(3), q in coords(3), r in coords(3)) {
        for g in [Geometry::euclidean(3).unwrap(), Geometry::distorted(3, 1.0, 0.05, 0.01).unwrap()] {
            let v = Vector::new(pt(&p0), pt(&q)).unwrap();
            let w = Vector::new(pt(&p0), pt(&r)).unwrap();
            let a = is_collinear(&g, &v, &w, DEFAULT_TOL).unwrap();
            let b = is_collinear(&g, &w, &v, DEFAULT_TOL).unwrap();
            prop_assert!((a.residual - b.residual).abs() <= 1e-12 * a.residual.abs().max(1.0));
            prop_assert_eq!(a.holds, b.holds);
        }
    }

    #[test]
    fn timelike_vector_is_parallel_to_itself(p in coords(4), dt in 0.1..5.0f64, dx in coords(3)) {
        let n = dx.iter().map(|x| x * x).sum::<f64>().sqrt();
        // keep the spatial step strictly inside the light cone
        let k = if n > 0.0 { 0.9 * dt / n } else { 0.0 };
        let end: Vec<f64> = (0..4).map(|i| if i == 0 { p[0] + dt } else { p[i] + k * dx[i - 1] }).collect();
        let v = Vector::new(pt(&p), pt(&end)).unwrap();
        for g in [Geometry::minkowski(4, 1.0).unwrap(), Geometry::distorted(4, 1.0, 0.01, 0.001).unwrap()] {
            prop_assert!(is_parallel_same_direction(&g, &v, &v, DEFAULT_TOL).unwrap().holds);
        }
    }
}

#[test]
fn euclidean_collinearity_routes_agree() {
    let g = Geometry::euclidean(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let draw = |rng: &mut ChaCha8Rng| -> Vec<f64> { (0..3).map(|_| rng.random_range(-5.0..5.0)).collect() };
    let sk = Skeleton::new(vec![
        pt(&[0.3, -0.2, 0.1]),
        pt(&[1.4, 0.1, 0.0]),
        pt(&[0.2, 1.1, 0.5]),
        pt(&[-0.3, 0.4, 1.7]),
    ])
    .unwrap();
    let p0 = sk.origin().clone();
    let (mut yes, mut no) = (0, 0);
    for i in 0..500 {
        let q: Vec<f64> = draw(&mut rng);
        // half the triples are collinear by construction
        let r: Vec<f64> = if i % 2 == 0 {
            let t = rng.random_range(-3.0..3.0);
            (0..3).map(|k| p0[k] + t * (q[k] - p0[k])).collect()
        } else {
            draw(&mut rng)
        };
        let (q, r) = (pt(&q), pt(&r));
        let a = is_collinear(&g, &Vector::new(p0.clone(), q.clone()).unwrap(), &Vector::new(p0.clone(), r.clone()).unwrap(), DEFAULT_TOL).unwrap();
        let b = coordinate_collinear(&g, &sk, &q, &r, DEFAULT_TOL).unwrap();
        assert_eq!(a.holds, b.holds, "triple {i}: {a:?} {b:?}");
        if a.holds {
            yes += 1;
        } else {
            no += 1;
        }
    }
    assert_eq!((yes, no), (250, 250));
}

fn random_unit(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let r = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if r > 0.1 && r <= 1.0 {
            return v.into_iter().map(|x| x / r).collect();
        }
    }
}

#[test]
fn euclidean_is_degenerate_everywhere_sampled() {
    let g = Geometry::euclidean(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let search = DirectionSearch::default();
    for _ in 0..20 {
        let p0: Vec<f64> = (0..3).map(|_| rng.random_range(-2.0..2.0)).collect();
        let u = random_unit(&mut rng, 3);
        let q: Vec<f64> = (0..3).map(|k| p0[k] + u[k]).collect();
        let dir = Vector::new(pt(&p0), pt(&q)).unwrap();
        for a in [0.5, 1.0, 3.0] {
            let v = degeneracy_classify(&g, &pt(&p0), &dir, a, &search).unwrap();
            assert_eq!(v.solution_count, 1, "p0 {p0:?} u {u:?} a {a}: {v:?}");
            assert_eq!(v.verdict, Degeneracy::Degenerate);
            let w = &v.witnesses[0];
            for k in 0..3 {
                assert!((w[k] - p0[k] - a * u[k]).abs() < 1e-6);
            }
        }
    }
}

#[test]
fn metric_axioms_on_sampled_geometries() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let sample: Vec<Point> = (0..50).map(|_| pt(&[rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0)])).collect();
    let rep = check_metric_axioms(&Geometry::euclidean(2).unwrap(), &sample, DEFAULT_TOL).unwrap();
    assert!(rep.all_ok());
    assert_eq!(rep.violation_count, 0);

    let line: Vec<Point> = (0..30).map(|_| pt(&[rng.random_range(-5.0..5.0)])).collect();
    let rep = check_metric_axioms(&Quartic { dim: 1 }, &line, DEFAULT_TOL).unwrap();
    assert!(!rep.triangle_ok);
    assert!(rep.violation_witnesses.iter().any(|v| v.axiom == Axiom::Triangle && v.residual < 0.0));

    let st: Vec<Point> = (0..20).map(|_| pt(&[rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0)])).collect();
    assert!(matches!(
        check_metric_axioms(&Geometry::minkowski(2, 1.0).unwrap(), &st, DEFAULT_TOL),
        Err(Error::NotMetricCandidate { .. })
    ));
}
