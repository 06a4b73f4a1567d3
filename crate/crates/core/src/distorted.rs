//! The distorted space-time: mass shift, segment radius, and free-particle
//! world lines built from equal, mutually parallel links.
//!
//! Everything here works with world functions of the form `σ = F(σ_M)`
//! on a 1+3 chart. Such a σ is Lorentz invariant, so each link can be
//! constructed in the rest frame of its predecessor. Internally time is
//! carried as `c·t`, making σ_M the plain `½(t² − |x|²)`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::point::Point;
use crate::roots::{brent, expand_bracket};
use crate::world::{minkowski_sigma, Distortion, IntervalMap};

/// Number of chart labels of the simulated space-time.
pub const SPACETIME_DIM: usize = 4;

/// Root-finding settings shared by the solvers in this module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverSpec {
    /// Absolute residual target for bracketed solves (length²).
    pub residual_tol: f64,
    /// Scan nodes for the segment radius search.
    pub grid: usize,
}

impl Default for SolverSpec {
    fn default() -> Self {
        SolverSpec {
            residual_tol: 1e-12,
            grid: 512,
        }
    }
}

/// `μ_d = √(μ_M² + 2d)`, valid above the threshold `μ_M² > 2σ0`.
pub fn mass_shift(mu_m: f64, d: f64, sigma0: f64) -> Result<f64> {
    Distortion::new(d, sigma0)?;
    let m2 = mu_m * mu_m;
    if !(m2 > 2.0 * sigma0) {
        return Err(Error::BelowThreshold {
            mu_m_squared: m2,
            threshold: 2.0 * sigma0,
        });
    }
    Ok(libm::sqrt(m2 + 2.0 * d))
}

/// Inverse of [`mass_shift`]: `μ_M = √(μ_d² − 2d)`.
pub fn mass_unshift(mu_d: f64, d: f64, sigma0: f64) -> Result<f64> {
    Distortion::new(d, sigma0)?;
    let m2 = mu_d * mu_d - 2.0 * d;
    if !(m2 > 2.0 * sigma0) {
        return Err(Error::BelowThreshold {
            mu_m_squared: m2,
            threshold: 2.0 * sigma0,
        });
    }
    Ok(libm::sqrt(m2))
}

/// Closed-form segment radius at one parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedRadius {
    /// `√max(r², 0)`.
    pub r: f64,
    /// The formula's value; negative values flag a corner where the
    /// printed profile has no real radius.
    pub r_squared: f64,
    /// 1, 2 or 3 from the start of the segment.
    pub branch: u8,
}

/// Three-branch radius profile of the segment `[P0 P1]` with `|P0P1| = μ_d`.
///
/// The middle branch exists only for `μ_d² > 8(σ0 + d)`.
pub fn segment_radius_closed(d: f64, sigma0: f64, mu_d: f64, tau: f64) -> Result<ClosedRadius> {
    Distortion::new(d, sigma0)?;
    if !(0.0..=1.0).contains(&tau) {
        return Err(Error::InvalidParameter("tau must lie in [0, 1]"));
    }
    let m2 = mu_d * mu_d;
    let required = 8.0 * (sigma0 + d);
    if !(m2 > required) {
        return Err(Error::BranchDomainError {
            mu_d_squared: m2,
            required,
        });
    }
    let edge = libm::sqrt(2.0 * (sigma0 + d)) / mu_d;
    let shrink = 1.0 - 2.0 * d / m2;
    let outer = |s: f64| {
        let k = 1.0 - s * d / (2.0 * (sigma0 + d));
        s * s * m2 * (k * k / shrink - sigma0 / (sigma0 + d))
    };
    let (r_squared, branch) = if tau <= edge {
        (outer(tau), 1)
    } else if tau < 1.0 - edge {
        let h = tau - 0.5;
        (1.5 * d + 2.0 * d * h * h / shrink, 2)
    } else {
        (outer(1.0 - tau), 3)
    };
    Ok(ClosedRadius {
        r: libm::sqrt(r_squared.max(0.0)),
        r_squared,
        branch,
    })
}

/// Invert `F(σ) = target` starting from `hint`, keeping every probe close
/// to the answer: one Newton step with a finite-difference slope, then a
/// bracket that overshoots the prediction by 1e-3 of the step.
fn invert_near<M: IntervalMap + ?Sized>(map: &M, target: f64, hint: f64, ftol: f64) -> Result<f64> {
    let f = |s: f64| map.apply(s) - target;
    let f0 = f(hint);
    if !f0.is_finite() {
        return Err(Error::SolverFailure("interval map is not finite at the hint"));
    }
    if f0.abs() <= ftol {
        return Ok(hint);
    }
    let h = 1e-6 * hint.abs().max(f64::MIN_POSITIVE);
    let slope = (f0 - f(hint - h)) / h;
    if !(slope.is_finite() && slope > 0.0) {
        return Err(Error::SolverFailure("interval map is not increasing near the target"));
    }
    let step = -f0 / slope;
    let predicted = hint + step;
    let mut over = 1e-3 * step.abs();
    for _ in 0..60 {
        let far = predicted + over * step.signum();
        let ff = f(far);
        if ff == 0.0 {
            return Ok(far);
        }
        if (ff < 0.0) != (f0 < 0.0) {
            return brent(f, hint, far, ftol);
        }
        over *= 2.0;
    }
    Err(Error::SolverFailure("could not bracket the interval-map inverse"))
}

/// Canonical-frame solution for one link: the incoming link runs from
/// `(−μ_M, 0)` to the origin, the outgoing one to `(α, β n)` for any unit
/// spatial `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkSolution {
    /// Minkowski length of every link.
    pub mu_m: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl LinkSolution {
    /// Minkowski hyperbolic angle between adjacent links.
    pub fn cosh_theta(&self) -> f64 {
        self.alpha / self.mu_m
    }
}

/// Solve the two link constraints
/// `2σ(P_i, P_{i+1}) = μ_d²` and `(P_{i−1}P_i.P_iP_{i+1}) = |P_{i−1}P_i||P_iP_{i+1}|`.
///
/// With `σ(P_i, P_i) = 0` the second one reads `σ(P_{i−1}, P_{i+1}) = 2μ_d²`.
pub fn solve_link<M: IntervalMap + ?Sized>(map: &M, mu_d: f64, spec: &SolverSpec) -> Result<LinkSolution> {
    if !(mu_d.is_finite() && mu_d > 0.0) {
        return Err(Error::InvalidParameter("link length must be positive"));
    }
    let m2 = mu_d * mu_d;
    let ftol = spec.residual_tol * m2.max(1.0);
    let sigma_link = invert_near(map, 0.5 * m2, 0.5 * m2, 0.25 * ftol)?;
    if !(sigma_link > map.threshold()) {
        return Err(Error::BelowThreshold {
            mu_m_squared: 2.0 * sigma_link,
            threshold: 2.0 * map.threshold(),
        });
    }
    let mu_m = libm::sqrt(2.0 * sigma_link);
    let alpha = |b: f64| libm::sqrt(mu_m * mu_m + b * b);
    let h = |b: f64| {
        let a = alpha(b) + mu_m;
        map.apply(0.5 * (a * a - b * b)) - 2.0 * m2
    };
    let (lo, hi) = expand_bracket(h, 0.0, 1e-3 * mu_d, 80)
        .ok_or(Error::SolverFailure("no parallel continuation found"))?;
    let beta = if lo == hi { lo } else { brent(h, lo, hi, ftol)? };
    Ok(LinkSolution {
        mu_m,
        alpha: alpha(beta),
        beta,
    })
}

/// `(c t, x)` Lorentz boost taking the rest frame to four-velocity `u`.
fn boost(u: &[f64; 4], v: &[f64; 4]) -> [f64; 4] {
    let g = u[0];
    let ub = u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
    let k = ub / (1.0 + g) + v[0];
    [g * v[0] + ub, v[1] + k * u[1], v[2] + k * u[2], v[3] + k * u[3]]
}

fn unit_velocity(dt: f64, dx: [f64; 3]) -> Result<[f64; 4]> {
    let n2 = dt * dt - (dx[0] * dx[0] + dx[1] * dx[1] + dx[2] * dx[2]);
    if !(n2 > 0.0 && dt > 0.0) {
        return Err(Error::SpacelikeVector { squared_length: n2 });
    }
    let n = libm::sqrt(n2);
    Ok(renormalise([dt / n, dx[0] / n, dx[1] / n, dx[2] / n]))
}

fn renormalise(u: [f64; 4]) -> [f64; 4] {
    let s = u[1] * u[1] + u[2] * u[2] + u[3] * u[3];
    [libm::sqrt(1.0 + s), u[1], u[2], u[3]]
}

fn check_link<M: IntervalMap + ?Sized>(map: &M, c: f64, p: &Point, q: &Point, mu_d: f64) -> Result<[f64; 4]> {
    for x in [p, q] {
        if x.dim() != SPACETIME_DIM {
            return Err(Error::DimensionMismatch {
                expected: SPACETIME_DIM,
                found: x.dim(),
            });
        }
    }
    let len2 = 2.0 * map.apply(minkowski_sigma(c, p.coords(), q.coords()));
    if !((len2 - mu_d * mu_d).abs() <= 1e-9 * mu_d * mu_d) {
        return Err(Error::InvalidParameter("initial link does not have length mu_d"));
    }
    unit_velocity(
        c * (q[0] - p[0]),
        [q[1] - p[1], q[2] - p[2], q[3] - p[3]],
    )
}

fn chart_point(base: &Point, c: f64, step: &[f64; 4]) -> Result<Point> {
    Point::new([
        base[0] + step[0] / c,
        base[1] + step[1],
        base[2] + step[2],
        base[3] + step[3],
    ])
}

/// Unit vectors spread over the sphere (Fibonacci lattice).
fn sphere_directions(count: usize) -> Vec<[f64; 3]> {
    let golden = PI * (3.0 - libm::sqrt(5.0));
    (0..count)
        .map(|k| {
            let z = 1.0 - 2.0 * (k as f64 + 0.5) / count as f64;
            let r = libm::sqrt(1.0 - z * z);
            let phi = golden * k as f64;
            [r * libm::cos(phi), r * libm::sin(phi), z]
        })
        .collect()
}

/// Continuations `P_{i+1}` of the link `P_{i−1}P_i`: equal length and
/// parallel in the distorted sense, one per sampled spatial direction.
pub fn next_link_solutions<M: IntervalMap + ?Sized>(
    map: &M,
    c: f64,
    p_prev: &Point,
    p_cur: &Point,
    mu_d: f64,
    directions: usize,
    spec: &SolverSpec,
) -> Result<Vec<Point>> {
    if !(c.is_finite() && c > 0.0) {
        return Err(Error::InvalidParameter("speed of light must be positive"));
    }
    if directions == 0 {
        return Err(Error::InvalidParameter("need at least one direction"));
    }
    let u = check_link(map, c, p_prev, p_cur, mu_d)?;
    let sol = solve_link(map, mu_d, spec)?;
    sphere_directions(directions)
        .into_iter()
        .map(|n| {
            let local = [sol.alpha, sol.beta * n[0], sol.beta * n[1], sol.beta * n[2]];
            chart_point(p_cur, c, &boost(&u, &local))
        })
        .collect()
}

/// Diagnostics of one joint, evaluated on the rest-frame triple
/// `P_{i−1}, P_i, P_{i+1}` (time labels are `c·t`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Joint {
    pub local: [[f64; 4]; 3],
    /// Minkowski `cosh θ_dM` between the two links.
    pub cosh_theta: f64,
    pub theta: f64,
    /// `(v.w) − |v||w|` with the distorted σ.
    pub residual_parallel: f64,
    /// `2σ(P_i, P_{i+1}) − μ_d²`.
    pub residual_length: f64,
}

fn joint<M: IntervalMap + ?Sized>(map: &M, mu_d: f64, local: [[f64; 4]; 3]) -> Joint {
    let [p, q, r] = &local;
    let sm = |a: &[f64; 4], b: &[f64; 4]| minkowski_sigma(1.0, a, b);
    let sd = |a: &[f64; 4], b: &[f64; 4]| map.apply(sm(a, b));
    // (PQ.QR) with σ(Q,Q) = 0 spelled out
    let vw_m = sm(p, r) + sm(q, q) - sm(p, q) - sm(q, r);
    let vw_d = sd(p, r) + sd(q, q) - sd(p, q) - sd(q, r);
    let (vv_m, ww_m) = (2.0 * sm(p, q), 2.0 * sm(q, r));
    let (vv_d, ww_d) = (2.0 * sd(p, q), 2.0 * sd(q, r));
    let cosh_theta = vw_m / libm::sqrt(vv_m * ww_m);
    Joint {
        local,
        cosh_theta,
        theta: libm::acosh(cosh_theta.max(1.0)),
        residual_parallel: vw_d - libm::sqrt(vv_d * ww_d),
        residual_length: ww_d - mu_d * mu_d,
    }
}

/// A simulated world line.
#[derive(Debug, Clone, PartialEq)]
pub struct BrokenTube {
    /// Chain points in the chart (`t, x, y, z`).
    pub chain: Vec<Point>,
    pub mu_d: f64,
    pub c: f64,
    /// Four-velocity of each link in the chart's frame, `(γ, γv/c)`.
    pub velocities: Vec<[f64; 4]>,
    /// `joints[k]` sits at `chain[k + 1]`.
    pub joints: Vec<Joint>,
    /// `2σ(P_0, P_1) − μ_d²` for the first link.
    pub initial_residual_length: f64,
}

impl BrokenTube {
    pub fn n_links(&self) -> usize {
        self.chain.len().saturating_sub(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulationConfig {
    pub mu_d: f64,
    pub n_links: usize,
    pub seed: u64,
    /// Independent random stream per run of an ensemble.
    pub stream: u64,
    pub c: f64,
    pub solver: SolverSpec,
}

impl Default for SimulationConfig {
    fn default() -> Self {
        SimulationConfig {
            mu_d: 1.0,
            n_links: 1000,
            seed: 0,
            stream: 0,
            c: 1.0,
            solver: SolverSpec::default(),
        }
    }
}

/// A run that stopped early, with everything built before the failure.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationError {
    pub partial: BrokenTube,
    pub error: Error,
}

/// Grow a world line link by link. Each new link lies on the cone of
/// parallel continuations of its predecessor; the direction on the cone is
/// drawn uniformly from the seeded stream.
///
/// `initial` defaults to a link at rest at the origin.
pub fn simulate_worldline<M: IntervalMap + ?Sized>(
    map: &M,
    config: &SimulationConfig,
    initial: Option<(Point, Point)>,
) -> core::result::Result<BrokenTube, SimulationError> {
    let empty = |error| SimulationError {
        partial: BrokenTube {
            chain: Vec::new(),
            mu_d: config.mu_d,
            c: config.c,
            velocities: Vec::new(),
            joints: Vec::new(),
            initial_residual_length: 0.0,
        },
        error,
    };
    if !(config.c.is_finite() && config.c > 0.0) {
        return Err(empty(Error::InvalidParameter("speed of light must be positive")));
    }
    if config.n_links == 0 {
        return Err(empty(Error::InvalidParameter("need at least one link")));
    }
    let sol = solve_link(map, config.mu_d, &config.solver).map_err(empty)?;
    let (p0, p1) = match initial {
        Some(pair) => pair,
        None => {
            let p0 = Point::origin(SPACETIME_DIM);
            let p1 = chart_point(&p0, config.c, &[sol.mu_m, 0.0, 0.0, 0.0]).map_err(empty)?;
            (p0, p1)
        }
    };
    let mut u = check_link(map, config.c, &p0, &p1, config.mu_d).map_err(empty)?;
    let initial_residual_length =
        2.0 * map.apply(minkowski_sigma(config.c, p0.coords(), p1.coords())) - config.mu_d * config.mu_d;

    let mut tube = BrokenTube {
        chain: Vec::with_capacity(config.n_links + 1),
        mu_d: config.mu_d,
        c: config.c,
        velocities: Vec::with_capacity(config.n_links),
        joints: Vec::with_capacity(config.n_links.saturating_sub(1)),
        initial_residual_length,
    };
    tube.chain.push(p0);
    tube.chain.push(p1);
    tube.velocities.push(u);

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(config.stream);
    let prev_local = [-sol.mu_m, 0.0, 0.0, 0.0];
    for link in 1..config.n_links {
        let z: f64 = rng.random_range(-1.0..=1.0);
        let phi: f64 = rng.random_range(0.0..2.0 * PI);
        let s = libm::sqrt((1.0 - z * z).max(0.0));
        let n = [s * libm::cos(phi), s * libm::sin(phi), z];
        let local = [sol.alpha, sol.beta * n[0], sol.beta * n[1], sol.beta * n[2]];
        let step = boost(&u, &local);
        let next = match chart_point(&tube.chain[link], config.c, &step) {
            Ok(p) => p,
            Err(_) => return Err(SimulationError { partial: tube, error: Error::ChartOverflow { link } }),
        };
        tube.joints.push(joint(map, config.mu_d, [prev_local, [0.0; 4], local]));
        u = renormalise([step[0] / sol.mu_m, step[1] / sol.mu_m, step[2] / sol.mu_m, step[3] / sol.mu_m]);
        if u.iter().any(|x| !x.is_finite()) {
            return Err(SimulationError { partial: tube, error: Error::ChartOverflow { link } });
        }
        tube.velocities.push(u);
        tube.chain.push(next);
    }
    Ok(tube)
}

/// Angle statistics of a simulated world line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WobbleStats {
    pub n_links: usize,
    pub mean_cosh: f64,
    pub min_cosh: f64,
    pub max_cosh: f64,
    /// `(μ_d² − d) / (μ_d² − 2d)`, the small-angle prediction.
    pub predicted_cosh: f64,
    /// `(μ_d² + d) / (μ_d² − 2d)`, what the scalar-product definition
    /// gives for adjacent links.
    pub exact_cosh: f64,
    pub theta_rms: f64,
    /// `√(2d) / μ_d`.
    pub predicted_theta: f64,
    pub max_residual_parallel: f64,
    pub max_residual_length: f64,
    /// Rapidity of the last link relative to the first.
    pub final_rapidity: f64,
    /// Spatial distance of the end point from the first link's time axis,
    /// measured in the first link's rest frame.
    pub endpoint_offset: f64,
}

pub fn wobble_statistics(tube: &BrokenTube, d: f64, sigma0: f64) -> Result<WobbleStats> {
    Distortion::new(d, sigma0)?;
    if tube.n_links() < 2 || tube.joints.is_empty() {
        return Err(Error::InsufficientSamples {
            needed: 2,
            found: tube.n_links(),
        });
    }
    let m2 = tube.mu_d * tube.mu_d;
    let n = tube.joints.len() as f64;
    let mut stats = WobbleStats {
        n_links: tube.n_links(),
        mean_cosh: 0.0,
        min_cosh: f64::INFINITY,
        max_cosh: f64::NEG_INFINITY,
        predicted_cosh: (m2 - d) / (m2 - 2.0 * d),
        exact_cosh: (m2 + d) / (m2 - 2.0 * d),
        theta_rms: 0.0,
        predicted_theta: libm::sqrt(2.0 * d) / tube.mu_d,
        max_residual_parallel: 0.0,
        max_residual_length: tube.initial_residual_length.abs(),
        final_rapidity: 0.0,
        endpoint_offset: 0.0,
    };
    // deviations from the first joint keep the mean exact when the angle is constant
    let c0 = tube.joints[0].cosh_theta;
    let mut dev = 0.0;
    for j in &tube.joints {
        dev += j.cosh_theta - c0;
        stats.min_cosh = stats.min_cosh.min(j.cosh_theta);
        stats.max_cosh = stats.max_cosh.max(j.cosh_theta);
        stats.theta_rms += j.theta * j.theta / n;
        stats.max_residual_parallel = stats.max_residual_parallel.max(j.residual_parallel.abs());
        stats.max_residual_length = stats.max_residual_length.max(j.residual_length.abs());
    }
    stats.mean_cosh = c0 + dev / n;
    stats.theta_rms = libm::sqrt(stats.theta_rms);

    let u0 = tube.velocities[0];
    let ul = tube.velocities[tube.velocities.len() - 1];
    let dot = u0[0] * ul[0] - u0[1] * ul[1] - u0[2] * ul[2] - u0[3] * ul[3];
    stats.final_rapidity = libm::acosh(dot.max(1.0));
    let (first, last) = (&tube.chain[0], &tube.chain[tube.chain.len() - 1]);
    let dx = [
        tube.c * (last[0] - first[0]),
        last[1] - first[1],
        last[2] - first[2],
        last[3] - first[3],
    ];
    // spatial part orthogonal to u0: dx + (u0·dx) u0 with signature (+,−,−,−)
    let along = u0[0] * dx[0] - u0[1] * dx[1] - u0[2] * dx[2] - u0[3] * dx[3];
    let perp: [f64; 4] = core::array::from_fn(|i| dx[i] - along * u0[i]);
    let perp2 = perp[1] * perp[1] + perp[2] * perp[2] + perp[3] * perp[3] - perp[0] * perp[0];
    stats.endpoint_offset = libm::sqrt(perp2.max(0.0));
    Ok(stats)
}

/// Radius of the distorted segment `[P0 P1]` at parameter `τ`, found on the
/// envelope itself.
///
/// Frame: `P0` at the origin and `P1 = (T, 0, 0, 0)` with `2σ(P0, P1) = μ_d²`;
/// the section at `t = τT` is scanned radially out to the light cone and the
/// outermost crossing of the segment residual is refined. The map is
/// Lorentz- and rotation-invariant, so one spatial direction suffices.
pub fn segment_radius_numeric<M: IntervalMap + ?Sized>(
    map: &M,
    mu_d: f64,
    tau: f64,
    spec: &SolverSpec,
) -> Result<f64> {
    if !(0.0..=1.0).contains(&tau) {
        return Err(Error::InvalidParameter("tau must lie in [0, 1]"));
    }
    if spec.grid < 8 {
        return Err(Error::InvalidParameter("scan grid must have at least 8 nodes"));
    }
    let m2 = mu_d * mu_d;
    let sigma_end = invert_near(map, 0.5 * m2, 0.5 * m2, 0.25 * spec.residual_tol * m2.max(1.0))?;
    if !(sigma_end > 0.0) {
        return Err(Error::SpacelikeVector { squared_length: 2.0 * sigma_end });
    }
    let t_end = libm::sqrt(2.0 * sigma_end);
    let t = tau * t_end;
    let reach = t.min(t_end - t);
    if reach <= 0.0 {
        return Ok(0.0);
    }
    let len = |a: f64| {
        let s = map.apply(a);
        if s < 0.0 {
            f64::NAN
        } else {
            libm::sqrt(2.0 * s)
        }
    };
    let f = |x: f64| {
        let a = 0.5 * (t * t - x * x);
        let b = 0.5 * ((t_end - t) * (t_end - t) - x * x);
        mu_d - len(a) - len(b)
    };
    let band = 1e3 * f64::EPSILON * mu_d;
    if f(0.0) >= -band {
        return Ok(0.0);
    }
    let nodes = spec.grid;
    let xs = |k: usize| reach * k as f64 / nodes as f64;
    let mut last = None;
    let mut prev = f(0.0);
    for k in 1..=nodes {
        let v = f(xs(k));
        if prev < 0.0 && v >= 0.0 {
            last = Some(k);
        }
        if v.is_finite() {
            prev = v;
        }
    }
    let k = last.ok_or(Error::SolverFailure("segment residual never crosses zero"))?;
    brent(f, xs(k - 1), xs(k), spec.residual_tol * mu_d.max(1.0))
}

/// Closed-form and envelope radii on a common τ grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentProfile {
    pub tau: Vec<f64>,
    pub r_closed: Vec<f64>,
    pub r_numeric: Vec<f64>,
    pub d: f64,
    pub sigma0: f64,
    pub mu_d: f64,
}

pub fn segment_profile(distortion: &Distortion, mu_d: f64, taus: &[f64], spec: &SolverSpec) -> Result<SegmentProfile> {
    let (d, sigma0) = (distortion.d(), distortion.sigma0());
    let mut profile = SegmentProfile {
        tau: taus.to_vec(),
        r_closed: Vec::with_capacity(taus.len()),
        r_numeric: Vec::with_capacity(taus.len()),
        d,
        sigma0,
        mu_d,
    };
    for &tau in taus {
        profile.r_closed.push(segment_radius_closed(d, sigma0, mu_d, tau)?.r);
        profile.r_numeric.push(segment_radius_numeric(distortion, mu_d, tau, spec)?);
    }
    Ok(profile)
}
