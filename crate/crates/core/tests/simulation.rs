use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sigma_geom::distorted::*;
use sigma_geom::world::{minkowski_sigma, IntervalMap};
use sigma_geom::*;

fn bits(tube: &BrokenTube) -> Vec<u64> {
    tube.chain.iter().flat_map(|p| p.coords().iter().map(|x| x.to_bits()).collect::<Vec<_>>()).collect()
}

#[test]
fn links_keep_length_and_parallelism() {
    for (d, mu) in [(0.005, 1.0), (0.05, 1.0), (0.005, 3.0)] {
        let map = Distortion::new(d, 0.1 * d).unwrap();
        let cfg = SimulationConfig { mu_d: mu, n_links: 500, seed: 3, ..Default::default() };
        let tube = simulate_worldline(&map, &cfg, None).unwrap();
        assert_eq!(tube.n_links(), 500);
        let tol = 1e-9 * mu * mu;
        assert!(tube.initial_residual_length.abs() <= tol);
        for j in &tube.joints {
            assert!(j.residual_length.abs() <= tol, "{j:?}");
            assert!(j.residual_parallel.abs() <= tol, "{j:?}");
        }
    }
}

#[test]
fn lab_chart_links_keep_their_length() {
    // short run, before rapidity growth costs precision in the chart
    let map = Distortion::new(0.005, 0.0005).unwrap();
    let cfg = SimulationConfig { n_links: 30, seed: 9, ..Default::default() };
    let tube = simulate_worldline(&map, &cfg, None).unwrap();
    for w in tube.chain.windows(2) {
        let s = map.apply(minkowski_sigma(1.0, w[0].coords(), w[1].coords()));
        assert!((2.0 * s - 1.0).abs() <= 1e-9, "{s}");
    }
}

#[test]
fn cone_angle_is_the_same_at_every_joint() {
    let (d, s0) = (0.005, 0.0005);
    let map = Distortion::new(d, s0).unwrap();
    let tube = simulate_worldline(&map, &SimulationConfig::default(), None).unwrap();
    let st = wobble_statistics(&tube, d, s0).unwrap();
    assert!(st.max_cosh - st.min_cosh <= 1e-6);
    assert!((st.mean_cosh - st.exact_cosh).abs() <= 1e-9);
    assert!(st.max_residual_parallel <= 1e-9);
}

#[test]
fn angle_shrinks_with_mass() {
    let map = Distortion::new(0.005, 0.0005).unwrap();
    let spec = SolverSpec::default();
    let theta: Vec<f64> = [1.0, 2.0, 4.0]
        .iter()
        .map(|&mu| solve_link(&map, mu, &spec).unwrap().cosh_theta().acosh())
        .collect();
    assert!(theta[0] > theta[1] && theta[1] > theta[2], "{theta:?}");
}

#[test]
fn undistorted_chain_is_straight() {
    let map = Distortion::new(0.0, 0.001).unwrap();
    let cfg = SimulationConfig { n_links: 200, seed: 4, ..Default::default() };
    let tube = simulate_worldline(&map, &cfg, None).unwrap();
    let st = wobble_statistics(&tube, 0.0, 0.001).unwrap();
    assert_eq!(st.theta_rms, 0.0);
    assert_eq!(st.endpoint_offset, 0.0);
    for (k, p) in tube.chain.iter().enumerate() {
        assert_eq!(p.coords(), &[k as f64, 0.0, 0.0, 0.0]);
    }
}

#[test]
fn fixed_seed_reproduces_the_chain() {
    let map = Distortion::new(0.005, 0.0005).unwrap();
    let cfg = SimulationConfig { n_links: 2000, seed: 42, stream: 7, ..Default::default() };
    let a = simulate_worldline(&map, &cfg, None).unwrap();
    let b = simulate_worldline(&map, &cfg, None).unwrap();
    assert_eq!(bits(&a), bits(&b));
    let c = simulate_worldline(&map, &SimulationConfig { stream: 8, ..cfg }, None).unwrap();
    assert_ne!(bits(&a), bits(&c));
}

/// The distortion with its short-interval branch replaced.
struct Rewired {
    inner: Distortion,
    below: f64,
}

impl IntervalMap for Rewired {
    fn apply(&self, s: f64) -> f64 {
        if s > 0.0 && s < self.below {
            // still vanishes at zero, otherwise unrelated
            self.inner.apply(s) + 0.05 * s * (self.below - s)
        } else {
            self.inner.apply(s)
        }
    }

    fn threshold(&self) -> f64 {
        self.inner.threshold()
    }
}

#[test]
fn short_intervals_do_not_steer_the_motion() {
    let (d, s0, mu) = (0.005, 0.0005, 1.0);
    let inner = Distortion::new(d, s0).unwrap();
    let rewired = Rewired { inner, below: 0.5 * mu * mu - (s0 + d) };
    let cfg = SimulationConfig { mu_d: mu, n_links: 1000, seed: 1, ..Default::default() };
    let a = simulate_worldline(&inner, &cfg, None).unwrap();
    let b = simulate_worldline(&rewired, &cfg, None).unwrap();
    assert_eq!(bits(&a), bits(&b));
    assert_eq!(a.velocities, b.velocities);
}

#[test]
fn direction_diffuses_like_independent_kicks() {
    let (d, s0, links, runs) = (0.0005, 0.00005, 40usize, 400u64);
    let map = Distortion::new(d, s0).unwrap();
    let theta = solve_link(&map, 1.0, &SolverSpec::default()).unwrap().cosh_theta().acosh();

    let mut sim = 0.0;
    for run in 0..runs {
        let cfg = SimulationConfig { n_links: links, seed: 2024, stream: run, ..Default::default() };
        let st = wobble_statistics(&simulate_worldline(&map, &cfg, None).unwrap(), d, s0).unwrap();
        sim += st.final_rapidity * st.final_rapidity / runs as f64;
    }

    // oracle: sum of links − 1 independent isotropic kicks of length θ
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut oracle = 0.0;
    let trials = 20_000;
    for _ in 0..trials {
        let mut s = [0.0f64; 3];
        for _ in 1..links {
            let z: f64 = rng.random_range(-1.0..=1.0);
            let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
            let r = (1.0 - z * z).sqrt();
            s[0] += theta * r * phi.cos();
            s[1] += theta * r * phi.sin();
            s[2] += theta * z;
        }
        oracle += (s[0] * s[0] + s[1] * s[1] + s[2] * s[2]) / trials as f64;
    }
    let rel = (sim - oracle).abs() / oracle;
    assert!(rel < 0.15, "simulated {sim}, oracle {oracle}");
}

#[test]
fn closed_and_envelope_radii_agree_in_the_middle() {
    let map = Distortion::new(0.01, 0.001).unwrap();
    let spec = SolverSpec { grid: 128, ..Default::default() };
    let taus: Vec<f64> = (0..=12).map(|k| 0.2 + 0.05 * k as f64).collect();
    let prof = segment_profile(&map, 1.0, &taus, &spec).unwrap();
    for ((t, rc), rn) in taus.iter().zip(&prof.r_closed).zip(&prof.r_numeric) {
        assert!((rc - rn).abs() <= 0.05 * rc, "tau {t}: {rc} vs {rn}");
    }
}

#[test]
fn segment_envelope_sampling_sees_the_same_radius() {
    use sigma_geom::envelopes::{sample_envelope, EnvelopeObject, SampleBox};
    let d = 0.01;
    let g = Geometry::distorted(4, 1.0, d, 0.001).unwrap();
    let map = Distortion::new(d, 0.001).unwrap();
    // end point with 2σ_d = 1
    let sol = solve_link(&map, 1.0, &SolverSpec::default()).unwrap();
    let t_end = sol.mu_m;
    let seg = EnvelopeObject::segment(Point::origin(4), Point::new([t_end, 0.0, 0.0, 0.0]).unwrap()).unwrap();
    let b = SampleBox::new(vec![0.0, -0.3, 0.0, 0.0], vec![t_end, 0.3, 0.0, 0.0]).unwrap();
    let cloud = sample_envelope(&g, &seg, &b, 128, seg.default_tol()).unwrap();
    let cell = t_end / 127.0;
    let r = cloud
        .points
        .iter()
        .filter(|p| (p[0] - 0.5 * t_end).abs() <= cell)
        .map(|p| p[1].abs())
        .fold(0.0, f64::max);
    let expected = (1.5 * d).sqrt();
    assert!((r - expected).abs() <= 0.05 * expected, "{r}");
}
