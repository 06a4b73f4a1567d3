//! Sampled checks of the conditions under which a world function describes
//! n-dimensional proper Euclidean space:
//!
//! * I   symmetry of σ;
//! * II  `F_n ≠ 0` for some skeleton while every `F_{n+1}` vanishes;
//! * III σ is the quadratic form `½ g^ik Δx_i Δx_k` of covariant coordinates;
//! * IV  the skeleton metric is positive definite;
//! * V   every coordinate tuple is taken by exactly one point.
//!
//! A finite sample can only falsify; a pass means no counterexample was
//! found among the sampled points.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::calculus::{covariant_coordinates_raw, gram_matrix, metric_tensor, MetricTensor};
use crate::envelopes::SampleBox;
use crate::error::{Error, Result};
use crate::linalg::{symmetric_eigenvalues, Lu, Matrix};
use crate::point::{Point, Skeleton};
use crate::world::{check_dim, WorldFunction};

#[derive(Debug, Clone, PartialEq)]
pub struct ConditionResult {
    pub passed: bool,
    pub max_residual: f64,
    /// Points exhibiting the worst residual or the failure.
    pub witness: Vec<Point>,
    /// Condition-specific numbers: eigenvalues for IV, normalised
    /// `max |F_k|` per `k` for II.
    pub values: Vec<f64>,
}

impl ConditionResult {
    fn new(passed: bool, max_residual: f64) -> Self {
        ConditionResult {
            passed,
            max_residual,
            witness: Vec::new(),
            values: Vec::new(),
        }
    }
}

/// I: `|σ(P,Q) − σ(Q,P)| ≤ tol · max(1, |σ(P,Q)|)` on every sampled pair.
pub fn check_symmetry<W: WorldFunction + ?Sized>(g: &W, samples: &[Point], tol: f64) -> Result<ConditionResult> {
    if samples.len() < 2 {
        return Err(Error::InsufficientSamples {
            needed: 2,
            found: samples.len(),
        });
    }
    for p in samples {
        check_dim(g.dim(), p)?;
    }
    let mut res = ConditionResult::new(true, 0.0);
    let mut worst = (0, 0);
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            let a = g.sigma_raw(samples[i].coords(), samples[j].coords());
            let b = g.sigma_raw(samples[j].coords(), samples[i].coords());
            let r = (a - b).abs();
            if r > tol * f64::max(1.0, a.abs()) || r.is_nan() {
                res.passed = false;
            }
            if r > res.max_residual || r.is_nan() {
                res.max_residual = r;
                worst = (i, j);
            }
        }
    }
    if res.max_residual > 0.0 {
        res.witness = vec![samples[worst.0].clone(), samples[worst.1].clone()];
    }
    Ok(res)
}

/// Outcome of the Gram-determinant dimension test.
#[derive(Debug, Clone, PartialEq)]
pub struct DimensionEstimate {
    /// Largest `k` with some `|F_k|` above threshold and every `|F_{k+1}|`
    /// below it; `None` when no such `k ≤ k_max` exists.
    pub dimension: Option<usize>,
    /// `max |F_k| / scale^{2k}` over the drawn skeletons, index `k − 1`.
    pub normalised_max: Vec<f64>,
    /// `scale²`: median `|2σ|` over sampled pairs.
    pub scale_squared: f64,
}

/// Number of random skeletons drawn per order.
pub const SKELETONS_PER_ORDER: usize = 20;

/// II: draw skeletons of every order up to `k_max + 1` from the sample and
/// compare their normalised Gram determinants with `tol`.
pub fn infer_dimension<W: WorldFunction + ?Sized>(
    g: &W,
    samples: &[Point],
    k_max: usize,
    tol: f64,
    seed: u64,
) -> Result<DimensionEstimate> {
    let needed = k_max + 2;
    if samples.len() < needed || k_max == 0 {
        return Err(Error::InsufficientSamples {
            needed: needed.max(3),
            found: samples.len(),
        });
    }
    for p in samples {
        check_dim(g.dim(), p)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale2 = median_pair_scale(g, samples, &mut rng);
    let mut normalised_max = Vec::with_capacity(k_max + 1);
    for k in 1..=k_max + 1 {
        let norm = libm::pow(scale2, k as f64);
        let mut worst: f64 = 0.0;
        for _ in 0..SKELETONS_PER_ORDER {
            let idx = distinct_indices(&mut rng, samples.len(), k + 1);
            let sk = Skeleton::new(idx.iter().map(|&i| samples[i].clone()).collect())?;
            let det = Lu::new(&gram_matrix(g, &sk)?).determinant();
            worst = worst.max(det.abs() / norm);
        }
        normalised_max.push(worst);
    }
    let dimension = (1..=k_max)
        .rev()
        .find(|&k| normalised_max[k - 1] > tol && normalised_max[k] <= tol);
    Ok(DimensionEstimate {
        dimension,
        normalised_max,
        scale_squared: scale2,
    })
}

fn median_pair_scale<W: WorldFunction + ?Sized>(g: &W, samples: &[Point], rng: &mut ChaCha8Rng) -> f64 {
    let n = samples.len();
    let mut vals: Vec<f64> = if n * (n - 1) / 2 <= 5000 {
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| (2.0 * g.sigma_raw(samples[i].coords(), samples[j].coords())).abs())
            .collect()
    } else {
        (0..5000)
            .map(|_| {
                let ij = distinct_indices(rng, n, 2);
                (2.0 * g.sigma_raw(samples[ij[0]].coords(), samples[ij[1]].coords())).abs()
            })
            .collect()
    };
    vals.sort_by(f64::total_cmp);
    let m = vals[vals.len() / 2];
    if m > 0.0 {
        m
    } else {
        1.0
    }
}

fn distinct_indices(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(k);
    while out.len() < k {
        let i = rng.random_range(0..n);
        if !out.contains(&i) {
            out.push(i);
        }
    }
    out
}

/// III: `|σ(P,Q) − ½ g^ik Δx_i Δx_k| ≤ tol · max(1, |σ(P,Q)|)` for every
/// sampled pair. `max_residual` is the largest absolute deviation.
pub fn check_linear_structure<W: WorldFunction + ?Sized>(
    g: &W,
    samples: &[Point],
    sk: &Skeleton,
    tol: f64,
) -> Result<ConditionResult> {
    let mt = metric_tensor(g, sk)?;
    for p in samples {
        check_dim(g.dim(), p)?;
    }
    let coords: Vec<Vec<f64>> = samples
        .iter()
        .map(|p| covariant_coordinates_raw(g, sk, p.coords()))
        .collect();
    let mut res = ConditionResult::new(true, 0.0);
    let mut worst = None;
    let mut dx = vec![0.0; sk.order()];
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            for k in 0..dx.len() {
                dx[k] = coords[i][k] - coords[j][k];
            }
            let s = g.sigma_raw(samples[i].coords(), samples[j].coords());
            let r = (s - mt.quadratic_form(&dx)).abs();
            if !(r <= tol * f64::max(1.0, s.abs())) {
                res.passed = false;
            }
            if r > res.max_residual || r.is_nan() {
                res.max_residual = r;
                worst = Some((i, j));
            }
        }
    }
    if let Some((i, j)) = worst {
        res.witness = vec![samples[i].clone(), samples[j].clone()];
    }
    Ok(res)
}

/// IV: smallest eigenvalue of the skeleton metric above `tol · ‖g‖`.
pub fn check_positivity(metric: &Matrix, tol: f64) -> ConditionResult {
    let eig = symmetric_eigenvalues(metric);
    let min = eig.first().copied().unwrap_or(0.0);
    let mut res = ConditionResult::new(min > tol * metric.max_abs(), min);
    res.values = eig;
    res
}

/// Chart points admitted to the carrier set.
pub type Carrier = fn(&[f64]) -> bool;

/// V: for a lattice of coordinate tuples `y` in `probe`, solve
/// `(P0Pi.P0P) = y_i` by damped Newton from several starts. Passes when
/// every `y` is reached by some carrier point and all such points agree to
/// within `distinct` chart units.
#[allow(clippy::too_many_arguments)]
pub fn check_continuity<W: WorldFunction + ?Sized>(
    g: &W,
    sk: &Skeleton,
    probe: &SampleBox,
    grid: usize,
    tol: f64,
    distinct: f64,
    carrier: Option<Carrier>,
    seed: u64,
) -> Result<ConditionResult> {
    metric_tensor(g, sk)?;
    let n = sk.order();
    if n != g.dim() {
        return Err(Error::InvalidParameter("condition V needs a skeleton with one vector per chart label"));
    }
    if probe.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: probe.dim(),
        });
    }
    if grid == 0 {
        return Err(Error::InvalidParameter("probe grid must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = sk.scale().max(1.0);
    let spread = sk.points().iter().map(|p| p.chart_distance(sk.origin())).fold(0.0, f64::max);
    let mut starts: Vec<Vec<f64>> = vec![sk.origin().coords().to_vec()];
    for _ in 0..4 {
        starts.push(
            sk.origin()
                .coords()
                .iter()
                .map(|x| x + spread * rng.random_range(-2.0..2.0))
                .collect(),
        );
    }
    let total = grid.pow(n as u32);
    let mut res = ConditionResult::new(true, 0.0);
    for idx in 0..total {
        let mut rest = idx;
        let y: Vec<f64> = (0..n)
            .map(|j| {
                let k = rest % grid;
                rest /= grid;
                if grid == 1 {
                    0.5 * (probe.lo[j] + probe.hi[j])
                } else {
                    probe.lo[j] + (probe.hi[j] - probe.lo[j]) * k as f64 / (grid - 1) as f64
                }
            })
            .collect();
        let ytol = tol * f64::max(1.0, y.iter().fold(0.0, |m: f64, v| m.max(v.abs())));
        let mut found: Vec<Vec<f64>> = Vec::new();
        for s in &starts {
            let Some((p, r)) = newton(g, sk, &y, s, ytol, scale) else { continue };
            if carrier.is_some_and(|c| !c(&p)) {
                continue;
            }
            res.max_residual = res.max_residual.max(r);
            found.push(p);
        }
        let split = found.iter().any(|p| {
            libm::sqrt(p.iter().zip(&found[0]).map(|(a, b)| (a - b) * (a - b)).sum::<f64>()) > distinct
        });
        if found.is_empty() || split {
            res.passed = false;
            if res.witness.is_empty() {
                res.witness.push(Point::new(y)?);
                for p in found {
                    res.witness.push(Point::new(p)?);
                }
            }
        }
    }
    Ok(res)
}

fn newton<W: WorldFunction + ?Sized>(
    g: &W,
    sk: &Skeleton,
    y: &[f64],
    start: &[f64],
    tol: f64,
    scale: f64,
) -> Option<(Vec<f64>, f64)> {
    let n = y.len();
    let resid = |p: &[f64]| -> Vec<f64> {
        covariant_coordinates_raw(g, sk, p)
            .iter()
            .zip(y)
            .map(|(x, t)| x - t)
            .collect()
    };
    let norm = |r: &[f64]| r.iter().fold(0.0, |m: f64, v| m.max(v.abs()));
    let mut p = start.to_vec();
    let mut r = resid(&p);
    // iterate past the tolerance until no step improves the residual
    'outer: for _ in 0..100 {
        let rn = norm(&r);
        if rn == 0.0 {
            break;
        }
        let h = 1e-6 * scale;
        let mut jac = Matrix::zeros(n);
        for k in 0..n {
            let mut q = p.clone();
            q[k] += h;
            let mut qm = p.clone();
            qm[k] -= h;
            let (rp, rm) = (resid(&q), resid(&qm));
            for i in 0..n {
                jac.set(i, k, (rp[i] - rm[i]) / (2.0 * h));
            }
        }
        let lu = Lu::new(&jac);
        if !(lu.min_pivot() > 1e-14 * jac.max_abs()) {
            break;
        }
        let step = lu.solve(&r);
        let mut t = 1.0;
        loop {
            let q: Vec<f64> = p.iter().zip(&step).map(|(a, s)| a - t * s).collect();
            let rq = resid(&q);
            if norm(&rq) < rn {
                p = q;
                r = rq;
                break;
            }
            t *= 0.5;
            if t < 1e-6 {
                break 'outer;
            }
        }
    }
    let rn = norm(&r);
    (rn <= tol).then_some((p, rn))
}

/// How `verify_euclidean` draws its sample and decides.
#[derive(Debug, Clone, Copy)]
pub struct SamplingSpec {
    pub points: usize,
    /// Sample points are uniform in `[−half_width, half_width]^dim`.
    pub half_width: f64,
    pub seed: u64,
    /// Relative tolerance for I, III and V.
    pub tol: f64,
    /// Normalised Gram-determinant threshold for II.
    pub dimension_tol: f64,
    /// IV passes when the smallest eigenvalue exceeds this times `‖g‖`.
    pub positivity_tol: f64,
    /// Candidate skeletons from which the best-conditioned one is kept.
    pub skeletons: usize,
    /// Lattice nodes per axis for V.
    pub probe_grid: usize,
    pub carrier: Option<Carrier>,
}

impl Default for SamplingSpec {
    fn default() -> Self {
        SamplingSpec {
            points: 200,
            half_width: 10.0,
            seed: 0,
            tol: 1e-9,
            dimension_tol: 1e-8,
            positivity_tol: 1e-10,
            skeletons: 20,
            probe_grid: 3,
            carrier: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub declared_dimension: usize,
    pub symmetry: ConditionResult,
    pub dimension: ConditionResult,
    pub linear_structure: ConditionResult,
    pub positivity: ConditionResult,
    pub continuity: ConditionResult,
    pub inferred_dimension: Option<usize>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn conditions(&self) -> [(&'static str, &ConditionResult); 5] {
        [
            ("condition_I", &self.symmetry),
            ("condition_II", &self.dimension),
            ("condition_III", &self.linear_structure),
            ("condition_IV", &self.positivity),
            ("condition_V", &self.continuity),
        ]
    }

    /// Roman numerals of the failed conditions.
    pub fn failed(&self) -> Vec<&'static str> {
        const NAMES: [&str; 5] = ["I", "II", "III", "IV", "V"];
        self.conditions()
            .iter()
            .zip(NAMES)
            .filter(|((_, c), _)| !c.passed)
            .map(|(_, n)| n)
            .collect()
    }
}

/// Random chart sample in the cube `[−w, w]^dim`.
pub fn random_sample(dim: usize, count: usize, half_width: f64, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let c: Vec<f64> = (0..dim).map(|_| rng.random_range(-half_width..=half_width)).collect();
            Point::new(c).expect("finite labels")
        })
        .collect()
}

/// Check conditions I–V for dimension `n` on a random sample.
pub fn verify_euclidean<W: WorldFunction + ?Sized>(g: &W, n: usize, spec: &SamplingSpec) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("dimension must be positive"));
    }
    if !(spec.half_width.is_finite() && spec.half_width > 0.0) {
        return Err(Error::InvalidParameter("sampling half width must be positive"));
    }
    let k_max = n.max(g.dim());
    if spec.points < k_max + 2 {
        return Err(Error::InsufficientSamples {
            needed: k_max + 2,
            found: spec.points,
        });
    }
    let samples = random_sample(g.dim(), spec.points, spec.half_width, spec.seed);

    let symmetry = check_symmetry(g, &samples, spec.tol)?;

    let est = infer_dimension(g, &samples, k_max, spec.dimension_tol, spec.seed ^ 0x9e37_79b9)?;
    let mut dimension = ConditionResult::new(est.dimension == Some(n), est.normalised_max[n]);
    dimension.values = est.normalised_max.clone();

    let (sk, mt) = best_skeleton(g, &samples, n, spec)?;

    let linear_structure = match &mt {
        Some(_) => check_linear_structure(g, &samples, &sk, spec.tol)?,
        None => ConditionResult::new(false, f64::INFINITY),
    };
    let positivity = match &mt {
        Some(m) => check_positivity(&m.lower, spec.positivity_tol),
        None => ConditionResult::new(false, 0.0),
    };
    let continuity = if mt.is_some() && n == g.dim() {
        let ys: Vec<Vec<f64>> = samples
            .iter()
            .map(|p| covariant_coordinates_raw(g, &sk, p.coords()))
            .collect();
        let reach: Vec<f64> = (0..n)
            .map(|i| 0.5 * ys.iter().fold(0.0, |m: f64, y| m.max(y[i].abs())))
            .collect();
        let probe = SampleBox::new(reach.iter().map(|r| -r).collect(), reach)?;
        let diag = 2.0 * spec.half_width * libm::sqrt(g.dim() as f64);
        check_continuity(g, &sk, &probe, spec.probe_grid, spec.tol, 1e-6 * diag, spec.carrier, spec.seed)?
    } else {
        ConditionResult::new(false, f64::INFINITY)
    };

    let overall = symmetry.passed
        && dimension.passed
        && linear_structure.passed
        && positivity.passed
        && continuity.passed;
    Ok(VerificationReport {
        declared_dimension: n,
        symmetry,
        dimension,
        linear_structure,
        positivity,
        continuity,
        inferred_dimension: est.dimension,
        overall,
    })
}

/// Among random `(n+1)`-point skeletons, the one whose metric is closest to
/// orthogonal (largest `|det g| / Π |g_ii|`).
fn best_skeleton<W: WorldFunction + ?Sized>(
    g: &W,
    samples: &[Point],
    n: usize,
    spec: &SamplingSpec,
) -> Result<(Skeleton, Option<MetricTensor>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ 0x5bd1_e995);
    let mut best: Option<(f64, Skeleton)> = None;
    for _ in 0..spec.skeletons.max(1) {
        let idx = distinct_indices(&mut rng, samples.len(), n + 1);
        let sk = Skeleton::new(idx.iter().map(|&i| samples[i].clone()).collect())?;
        let gm = gram_matrix(g, &sk)?;
        let diag: f64 = (0..n).map(|i| gm.get(i, i).abs()).product();
        let quality = if diag > 0.0 {
            Lu::new(&gm).determinant().abs() / diag
        } else {
            0.0
        };
        if best.as_ref().map_or(true, |(q, _)| quality > *q) {
            best = Some((quality, sk));
        }
    }
    let (_, sk) = best.expect("at least one skeleton");
    let mt = metric_tensor(g, &sk).ok();
    Ok((sk, mt))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::world::Geometry;

    struct Skewed(Geometry);

    impl WorldFunction for Skewed {
        fn dim(&self) -> usize {
            self.0.dim()
        }
        fn sigma_raw(&self, p: &[f64], q: &[f64]) -> f64 {
            let s = self.0.sigma_raw(p, q);
            if p[0] < q[0] {
                s + 1e-3
            } else {
                s
            }
        }
    }

    #[test]
    fn symmetry_detects_skew() {
        let e = Geometry::euclidean(2).unwrap();
        let pts = random_sample(2, 30, 5.0, 1);
        assert!(check_symmetry(&e, &pts, 1e-9).unwrap().passed);
        let bad = check_symmetry(&Skewed(e), &pts, 1e-9).unwrap();
        assert!(!bad.passed);
        assert!((bad.max_residual - 1e-3).abs() < 1e-9);
        assert_eq!(bad.witness.len(), 2);
    }

    #[test]
    fn dimension_of_a_line_in_three_labels() {
        let e = Geometry::euclidean(3).unwrap();
        let pts: Vec<Point> = (0..30)
            .map(|i| {
                let t = (i as f64 * 0.37).sin() * 4.0;
                Point::new([1.0 + t, 2.0 - 2.0 * t, 0.5 * t]).unwrap()
            })
            .collect();
        assert_eq!(infer_dimension(&e, &pts, 3, 1e-8, 0).unwrap().dimension, Some(1));
        let cloud = random_sample(3, 40, 1.0, 3);
        assert_eq!(infer_dimension(&e, &cloud, 4, 1e-8, 0).unwrap().dimension, Some(3));
        assert!(matches!(infer_dimension(&e, &cloud[..4], 3, 1e-8, 0), Err(Error::InsufficientSamples { .. })));
    }

    #[test]
    fn positivity_of_known_metrics() {
        let id = Matrix::identity(3);
        let r = check_positivity(&id, 1e-10);
        assert!(r.passed && r.max_residual == 1.0);
        let mink = Matrix::from_fn(4, |i, j| if i != j { 0.0 } else if i == 0 { 1.0 } else { -1.0 });
        assert!(!check_positivity(&mink, 1e-10).passed);
        let flat = Matrix::from_fn(2, |_, _| 1.0);
        assert!(!check_positivity(&flat, 1e-10).passed);
    }

    #[test]
    fn continuity_with_and_without_a_hole() {
        let e = Geometry::euclidean(2).unwrap();
        let sk = Skeleton::axes(&Point::origin(2), 1.0);
        let probe = SampleBox::new(vec![-2.0, -2.0], vec![2.0, 2.0]).unwrap();
        let ok = check_continuity(&e, &sk, &probe, 5, 1e-10, 1e-6, None, 0).unwrap();
        assert!(ok.passed);
        fn punctured(p: &[f64]) -> bool {
            p[0].abs() > 1e-3
        }
        let holed = check_continuity(&e, &sk, &probe, 5, 1e-10, 1e-6, Some(punctured), 0).unwrap();
        assert!(!holed.passed);
        assert_eq!(holed.witness[0][0], 0.0);
    }

    #[test]
    fn euclidean_passes_minkowski_fails_positivity() {
        let spec = SamplingSpec {
            points: 60,
            ..SamplingSpec::default()
        };
        let e = verify_euclidean(&Geometry::euclidean(3).unwrap(), 3, &spec).unwrap();
        assert!(e.overall, "{:?}", e.failed());
        assert_eq!(e.inferred_dimension, Some(3));
        let m = verify_euclidean(&Geometry::minkowski(4, 1.0).unwrap(), 4, &spec).unwrap();
        assert_eq!(m.failed(), vec!["IV"]);
        let negatives = m.positivity.values.iter().filter(|v| **v < 0.0).count();
        assert_eq!(negatives, 3);
    }
}
