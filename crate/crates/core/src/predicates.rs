//! Relations between points and vectors expressed through σ alone.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::calculus::{covariant_coordinates_raw, metric_tensor, scalar_product, scalar_product_raw};
use crate::error::{Error, Result};
use crate::point::{Point, Skeleton, Vector};
use crate::roots::{brent, expand_bracket, nelder_mead};
use crate::world::{check_dim, WorldFunction};

/// Default relative tolerance for predicate residuals.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A yes/no relation together with the residual it was decided on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Relation {
    pub holds: bool,
    pub residual: f64,
}

/// `(P0Q.P0R)² = (P0Q.P0Q)(P0R.P0R)` for two vectors with a common start.
/// The band is `tol · max(|P0Q|², |P0R|²)²`.
pub fn is_collinear<W: WorldFunction + ?Sized>(
    g: &W,
    v: &Vector,
    w: &Vector,
    tol: f64,
) -> Result<Relation> {
    if v.start != w.start {
        return Err(Error::InvalidParameter("collinearity needs a common start point"));
    }
    let vw = scalar_product(g, v, w)?;
    let vv = scalar_product(g, v, v)?;
    let ww = scalar_product(g, w, w)?;
    let residual = vw * vw - vv * ww;
    let scale = f64::max(vv.abs(), ww.abs());
    Ok(Relation {
        holds: residual.abs() <= tol * scale * scale,
        residual,
    })
}

/// Same-direction parallelism `(v.w) = |v| |w|` of two timelike vectors.
pub fn is_parallel_same_direction<W: WorldFunction + ?Sized>(
    g: &W,
    v: &Vector,
    w: &Vector,
    tol: f64,
) -> Result<Relation> {
    let vv = scalar_product(g, v, v)?;
    let ww = scalar_product(g, w, w)?;
    for s in [vv, ww] {
        if !(s > 0.0) {
            return Err(Error::SpacelikeVector { squared_length: s });
        }
    }
    let residual = scalar_product(g, v, w)? - libm::sqrt(vv * ww);
    Ok(Relation {
        holds: residual.abs() <= tol * f64::max(vv, ww),
        residual,
    })
}

/// Outcome of the skeleton-relative collinearity test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoordinateCollinearity {
    pub holds: bool,
    /// Best-fit constant in `(P0Pi.P0Q) = a (P0Pi.P0R)`.
    pub a: f64,
    /// `holds` with `a > 0`.
    pub same_direction: bool,
    /// Largest `|x_i(Q) − a x_i(R)|` over `i`.
    pub residual: f64,
}

/// Collinearity of `P0Q` and `P0R` through covariant coordinates relative to
/// the skeleton: a single `a` must satisfy all `n` equations.
pub fn coordinate_collinear<W: WorldFunction + ?Sized>(
    g: &W,
    sk: &Skeleton,
    q: &Point,
    r: &Point,
    tol: f64,
) -> Result<CoordinateCollinearity> {
    metric_tensor(g, sk)?;
    check_dim(g.dim(), q)?;
    check_dim(g.dim(), r)?;
    let xq = covariant_coordinates_raw(g, sk, q.coords());
    let xr = covariant_coordinates_raw(g, sk, r.coords());
    let q_scale = xq.iter().fold(0.0, |m, x| f64::max(m, x.abs()));
    let r_scale = xr.iter().fold(0.0, |m, x| f64::max(m, x.abs()));
    if q_scale == 0.0 {
        return Err(Error::EliminationFailure);
    }
    let rr: f64 = xr.iter().map(|x| x * x).sum();
    let a = if rr > 0.0 {
        xq.iter().zip(&xr).map(|(a, b)| a * b).sum::<f64>() / rr
    } else {
        0.0
    };
    let residual = xq
        .iter()
        .zip(&xr)
        .fold(0.0, |m, (x, y)| f64::max(m, (x - a * y).abs()));
    let holds = rr > 0.0 && residual <= tol * f64::max(q_scale, a.abs() * r_scale);
    Ok(CoordinateCollinearity {
        holds,
        a,
        same_direction: holds && a > 0.0,
        residual,
    })
}

/// Parameters of the direction scan used by [`degeneracy_classify`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectionSearch {
    /// Nodes per polar angle in `(0, π)`.
    pub polar: usize,
    /// Nodes for the periodic azimuth in `[0, 2π)`.
    pub azimuth: usize,
    /// Rays are followed out to `max_radius · a` chart units.
    pub max_radius: f64,
    /// Solutions closer than `distinct · a` are the same point.
    pub distinct: f64,
    /// Acceptance band for the parallelism residual, relative to `|Q0Q| a`.
    pub tol: f64,
}

impl Default for DirectionSearch {
    fn default() -> Self {
        DirectionSearch {
            polar: 12,
            azimuth: 24,
            max_radius: 1e3,
            distinct: 1e-4,
            tol: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    Degenerate,
    Nondegenerate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegeneracyVerdict {
    pub solution_count: usize,
    pub verdict: Degeneracy,
    pub witnesses: Vec<Point>,
}

/// Count the points `R` with `|P0R| = a` (same causal sign as `Q0Q`) and
/// `Q0Q ↑↑ P0R` in the product-of-lengths sense. One or no solution means
/// the geometry is degenerate at `P0` in that direction.
///
/// For spacelike vectors both lengths are imaginary and their product is
/// taken as `−√((v.v)(w.w))`, so that `w = λv, λ > 0` is parallel.
pub fn degeneracy_classify<W: WorldFunction + ?Sized>(
    g: &W,
    p0: &Point,
    dirvec: &Vector,
    a: f64,
    search: &DirectionSearch,
) -> Result<DegeneracyVerdict> {
    check_dim(g.dim(), p0)?;
    let vv = scalar_product(g, dirvec, dirvec)?;
    if vv == 0.0 {
        return Err(Error::InvalidParameter("direction vector has zero length"));
    }
    if !(a.is_finite() && a > 0.0) {
        return Err(Error::InvalidParameter("radius a must be positive"));
    }
    if search.polar < 2 || search.azimuth < 3 {
        return Err(Error::InvalidParameter("direction grid too coarse"));
    }
    let scan = Scan {
        g,
        p0: p0.coords(),
        q0: dirvec.start.coords(),
        q1: dirvec.end.coords(),
        vv,
        target: vv.signum() * a * a,
        a,
        search,
    };
    let mut found: Vec<Vec<f64>> = Vec::new();
    let push = |r: Vec<f64>, found: &mut Vec<Vec<f64>>| {
        let dup = found.iter().any(|s| {
            let d2: f64 = s.iter().zip(&r).map(|(x, y)| (x - y) * (x - y)).sum();
            libm::sqrt(d2) < search.distinct * a
        });
        if !dup {
            found.push(r);
        }
    };

    let n = g.dim();
    if n == 1 {
        for u in [1.0, -1.0] {
            if let Some((r, p)) = scan.eval_dir(&[u])? {
                if p.abs() <= scan.band() {
                    push(r, &mut found);
                }
            }
        }
    } else {
        let shape: Vec<usize> = (0..n - 1)
            .map(|j| if j + 2 < n { search.polar } else { search.azimuth })
            .collect();
        let total: usize = shape.iter().product();
        let angles_of = |mut idx: usize| -> Vec<f64> {
            let mut ang = vec![0.0; shape.len()];
            for j in (0..shape.len()).rev() {
                let k = idx % shape[j];
                idx /= shape[j];
                ang[j] = scan.node_angle(j, shape.len(), k, shape[j]);
            }
            ang
        };
        let mut values: Vec<Option<f64>> = Vec::with_capacity(total);
        for idx in 0..total {
            let dir = direction(&angles_of(idx));
            values.push(scan.eval_dir(&dir)?.map(|(_, p)| p));
        }
        let neighbours = |idx: usize| -> Vec<(usize, usize, bool)> {
            // (neighbour index, axis, wraps around the azimuth seam)
            let mut out = Vec::new();
            let mut stride = 1;
            let mut strides = vec![0; shape.len()];
            for j in (0..shape.len()).rev() {
                strides[j] = stride;
                stride *= shape[j];
            }
            for j in 0..shape.len() {
                let k = (idx / strides[j]) % shape[j];
                let periodic = j + 1 == shape.len();
                if k + 1 < shape[j] {
                    out.push((idx + strides[j], j, false));
                } else if periodic {
                    out.push((idx - k * strides[j], j, true));
                }
                if k > 0 {
                    out.push((idx - strides[j], j, false));
                } else if periodic {
                    out.push((idx + (shape[j] - 1) * strides[j], j, true));
                }
            }
            out
        };

        for idx in 0..total {
            let Some(p) = values[idx] else { continue };
            let nb = neighbours(idx);
            // sign changes: refine once per edge, from the lower index
            for &(j, axis, wraps) in &nb {
                let Some(pj) = values[j] else { continue };
                if j <= idx || (p < 0.0) == (pj < 0.0) || p == 0.0 {
                    continue;
                }
                let a0 = angles_of(idx);
                let mut a1 = angles_of(j);
                if wraps {
                    a1[axis] += if a1[axis] < a0[axis] { 2.0 * PI } else { -2.0 * PI };
                }
                if let Some(r) = scan.refine_edge(&a0, &a1) {
                    push(r, &mut found);
                }
            }
            if p == 0.0 {
                let (r, _) = scan.eval_dir(&direction(&angles_of(idx)))?.unwrap();
                push(r, &mut found);
                continue;
            }
            // touching zeros: local minima of |p| with no sign change around
            let is_min = nb.iter().all(|&(j, _, _)| match values[j] {
                Some(pj) => (pj < 0.0) == (p < 0.0) && p.abs() <= pj.abs(),
                None => true,
            });
            if is_min {
                let step = PI / search.polar.max(search.azimuth) as f64;
                if let Some(r) = scan.refine_touching(&angles_of(idx), step) {
                    push(r, &mut found);
                }
            }
        }
    }

    let solution_count = found.len();
    let witnesses = found
        .into_iter()
        .map(Point::new)
        .collect::<Result<Vec<_>>>()?;
    Ok(DegeneracyVerdict {
        solution_count,
        verdict: if solution_count <= 1 {
            Degeneracy::Degenerate
        } else {
            Degeneracy::Nondegenerate
        },
        witnesses,
    })
}

/// Unit chart direction from hyperspherical angles.
fn direction(angles: &[f64]) -> Vec<f64> {
    let n = angles.len() + 1;
    let mut u = vec![0.0; n];
    let mut s = 1.0;
    for (j, &phi) in angles.iter().enumerate() {
        u[j] = s * libm::cos(phi);
        s *= libm::sin(phi);
    }
    u[n - 1] = s;
    u
}

struct Scan<'a, W: ?Sized> {
    g: &'a W,
    p0: &'a [f64],
    q0: &'a [f64],
    q1: &'a [f64],
    vv: f64,
    target: f64,
    a: f64,
    search: &'a DirectionSearch,
}

impl<W: WorldFunction + ?Sized> Scan<'_, W> {
    fn band(&self) -> f64 {
        self.search.tol * libm::sqrt(self.vv.abs()) * self.a
    }

    fn node_angle(&self, axis: usize, axes: usize, k: usize, m: usize) -> f64 {
        if axis + 1 == axes {
            2.0 * PI * k as f64 / m as f64
        } else {
            PI * (k as f64 + 0.5) / m as f64
        }
    }

    fn point_at(&self, u: &[f64], s: f64) -> Vec<f64> {
        self.p0.iter().zip(u).map(|(x, ui)| x + s * ui).collect()
    }

    /// Radial solve for `|P0R|² = target` along `u`, then the parallelism
    /// residual at the first crossing. `None` if the ray never reaches it.
    fn eval_dir(&self, u: &[f64]) -> Result<Option<(Vec<f64>, f64)>> {
        let f = |s: f64| 2.0 * self.g.sigma_raw(self.p0, &self.point_at(u, s)) - self.target;
        let step = 0.125 * self.a;
        let max_steps = (libm::log2(self.search.max_radius / 0.125) as usize).max(1) + 1;
        let Some((lo, hi)) = expand_bracket(f, 0.0, step, max_steps) else {
            return Ok(None);
        };
        let s = brent(f, lo, hi, 1e-14 * self.a * self.a)?;
        let r = self.point_at(u, s);
        Ok(Some((r.clone(), self.residual(&r))))
    }

    fn residual(&self, r: &[f64]) -> f64 {
        let vw = scalar_product_raw(self.g, self.q0, self.q1, self.p0, r);
        let ww = scalar_product_raw(self.g, self.p0, r, self.p0, r);
        let mut l = libm::sqrt((self.vv * ww).abs());
        if self.vv < 0.0 && ww < 0.0 {
            l = -l;
        }
        vw - l
    }

    fn at_angles(&self, ang: &[f64]) -> Option<(Vec<f64>, f64)> {
        self.eval_dir(&direction(ang)).ok().flatten()
    }

    fn refine_edge(&self, a0: &[f64], a1: &[f64]) -> Option<Vec<f64>> {
        let lerp = |t: f64| -> Vec<f64> { a0.iter().zip(a1).map(|(x, y)| x + t * (y - x)).collect() };
        let f = |t: f64| self.at_angles(&lerp(t)).map_or(f64::NAN, |(_, p)| p);
        let t = brent(f, 0.0, 1.0, self.band()).ok()?;
        let (r, p) = self.at_angles(&lerp(t))?;
        (p.abs() <= self.band()).then_some(r)
    }

    fn refine_touching(&self, start: &[f64], step: f64) -> Option<Vec<f64>> {
        let f = |ang: &[f64]| self.at_angles(ang).map_or(f64::MAX, |(_, p)| p.abs());
        let evals = 600 * start.len();
        let (ang, _) = nelder_mead(f, start, step, evals, 0.0);
        let (r, p) = self.at_angles(&ang)?;
        (p.abs() <= self.band()).then_some(r)
    }
}

/// Which metric-space axiom a witness violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Nonnegativity,
    Identity,
    Symmetry,
    Triangle,
}

/// A violating triple `(P, R, Q)` with its residual. Pairwise axioms use
/// `R = Q`; the triangle residual is `ρ(P,R) + ρ(R,Q) − ρ(P,Q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub points: [Point; 3],
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricAxiomReport {
    pub nonnegativity_ok: bool,
    pub identity_ok: bool,
    pub symmetry_ok: bool,
    pub triangle_ok: bool,
    /// At most [`MAX_WITNESSES`] entries; `violation_count` has the total.
    pub violation_witnesses: Vec<AxiomViolation>,
    pub violation_count: usize,
}

impl MetricAxiomReport {
    pub fn all_ok(&self) -> bool {
        self.nonnegativity_ok && self.identity_ok && self.symmetry_ok && self.triangle_ok
    }
}

pub const MAX_WITNESSES: usize = 100;

/// Check that `ρ = √(2σ)` is a metric on the sample. Bands are `tol · L`
/// with `L` the largest sampled `ρ`.
pub fn check_metric_axioms<W: WorldFunction + ?Sized>(
    g: &W,
    samples: &[Point],
    tol: f64,
) -> Result<MetricAxiomReport> {
    for p in samples {
        check_dim(g.dim(), p)?;
    }
    let n = samples.len();
    let mut rho = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let s = g.sigma_raw(samples[i].coords(), samples[j].coords());
            if s < 0.0 {
                return Err(Error::NotMetricCandidate { sigma: s });
            }
            rho[i * n + j] = libm::sqrt(2.0 * s);
        }
    }
    let scale = rho.iter().fold(0.0, |m: f64, x| m.max(*x));
    let band = tol * scale.max(f64::MIN_POSITIVE);
    let mut report = MetricAxiomReport {
        nonnegativity_ok: true,
        identity_ok: true,
        symmetry_ok: true,
        triangle_ok: true,
        violation_witnesses: Vec::new(),
        violation_count: 0,
    };
    let record = |report: &mut MetricAxiomReport, axiom, idx: [usize; 3], residual| {
        match axiom {
            Axiom::Nonnegativity => report.nonnegativity_ok = false,
            Axiom::Identity => report.identity_ok = false,
            Axiom::Symmetry => report.symmetry_ok = false,
            Axiom::Triangle => report.triangle_ok = false,
        }
        report.violation_count += 1;
        if report.violation_witnesses.len() < MAX_WITNESSES {
            report.violation_witnesses.push(AxiomViolation {
                axiom,
                points: idx.map(|i| samples[i].clone()),
                residual,
            });
        }
    };
    for i in 0..n {
        for j in 0..n {
            let r = rho[i * n + j];
            // σ < 0 was rejected above, so ρ is real and nonnegative; a NaN
            // world function still lands here
            if !(r >= 0.0) {
                record(&mut report, Axiom::Nonnegativity, [i, j, j], r);
            }
            let same = samples[i] == samples[j];
            if (same && r > band) || (!same && r <= band) {
                record(&mut report, Axiom::Identity, [i, j, j], r);
            }
            if j > i {
                let asym = r - rho[j * n + i];
                if asym.abs() > band {
                    record(&mut report, Axiom::Symmetry, [i, j, j], asym);
                }
            }
        }
    }
    for p in 0..n {
        for r in 0..n {
            for q in 0..n {
                let res = rho[p * n + r] + rho[r * n + q] - rho[p * n + q];
                if res < -band {
                    record(&mut report, Axiom::Triangle, [p, r, q], res);
                }
            }
        }
    }
    Ok(report)
}

/// `f = ρ(P,R) + ρ(R,Q) − ρ(P,Q)`: negative for points strictly inside the
/// ellipsoid with foci `P`, `Q` that has collapsed onto `PQ`.
pub fn degenerate_ellipsoid_interior<W: WorldFunction + ?Sized>(
    g: &W,
    p: &Point,
    q: &Point,
    r: &Point,
) -> Result<f64> {
    let spq = g.sigma(p, q)?;
    if !(spq > 0.0) {
        if spq < 0.0 {
            return Err(Error::NotMetricCandidate { sigma: spq });
        }
        return Err(Error::InvalidParameter("foci must be distinct"));
    }
    let spr = g.sigma(p, r)?;
    let srq = g.sigma(r, q)?;
    for s in [spr, srq] {
        if s < 0.0 {
            return Err(Error::NotMetricCandidate { sigma: s });
        }
    }
    let rho = |s: f64| libm::sqrt(2.0 * s);
    Ok(rho(spr) + rho(srq) - rho(spq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::world::{Geometry, Quartic};

    fn pt(c: &[f64]) -> Point {
        Point::new(c.to_vec()).unwrap()
    }

    fn vecp(a: &[f64], b: &[f64]) -> Vector {
        Vector::new(pt(a), pt(b)).unwrap()
    }

    #[test]
    fn collinear_triples() {
        let e = Geometry::euclidean(2).unwrap();
        let o = [0.0, 0.0];
        let r = is_collinear(&e, &vecp(&o, &[1.0, 0.0]), &vecp(&o, &[2.0, 0.0]), DEFAULT_TOL).unwrap();
        assert!(r.holds);
        let r = is_collinear(&e, &vecp(&o, &[1.0, 0.0]), &vecp(&o, &[0.0, 1.0]), DEFAULT_TOL).unwrap();
        assert!(!r.holds);
        assert_eq!(r.residual, -1.0);
        assert!(is_collinear(&e, &vecp(&o, &[1.0, 0.0]), &vecp(&[1.0, 1.0], &[0.0, 1.0]), 1e-9).is_err());
    }

    #[test]
    fn distortion_breaks_collinearity() {
        let o = [0.0; 4];
        let (q, r) = ([1.0, 0.0, 0.0, 0.0], [2.0, 0.0, 0.0, 0.0]);
        let m = Geometry::minkowski(4, 1.0).unwrap();
        assert!(is_collinear(&m, &vecp(&o, &q), &vecp(&o, &r), DEFAULT_TOL).unwrap().holds);
        let d = Geometry::distorted(4, 1.0, 0.1, 0.01).unwrap();
        let rel = is_collinear(&d, &vecp(&o, &q), &vecp(&o, &r), DEFAULT_TOL).unwrap();
        assert!(!rel.holds);
        // σ_d(P0,Q) = 0.6, σ_d(P0,R) = 2.1, σ_d(Q,R) = 0.6 ⇒ (v.w) = 2.1
        assert!((rel.residual - (2.1 * 2.1 - 1.2 * 4.2)).abs() < 1e-12);
    }

    #[test]
    fn parallel_links() {
        let m = Geometry::minkowski(4, 1.0).unwrap();
        let v = vecp(&[0.0; 4], &[1.0, 0.0, 0.0, 0.0]);
        let w = vecp(&[1.0, 0.0, 0.0, 0.0], &[2.0, 0.0, 0.0, 0.0]);
        assert!(is_parallel_same_direction(&m, &v, &w, DEFAULT_TOL).unwrap().holds);
        let tilted = vecp(&[1.0, 0.0, 0.0, 0.0], &[2.0, 0.5, 0.0, 0.0]);
        assert!(!is_parallel_same_direction(&m, &v, &tilted, DEFAULT_TOL).unwrap().holds);
        let x = vecp(&[0.0; 4], &[0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(
            is_parallel_same_direction(&m, &v, &x, DEFAULT_TOL),
            Err(Error::SpacelikeVector { .. })
        ));
    }

    #[test]
    fn distorted_adjacent_links_are_not_minkowski_parallel() {
        let d = 0.1;
        let g = Geometry::distorted(4, 1.0, d, 0.01).unwrap();
        let v = vecp(&[0.0; 4], &[1.0, 0.0, 0.0, 0.0]);
        let w = vecp(&[1.0, 0.0, 0.0, 0.0], &[2.0, 0.0, 0.0, 0.0]);
        let rel = is_parallel_same_direction(&g, &v, &w, DEFAULT_TOL).unwrap();
        assert!(!rel.holds);
        // (v.w)_d = 1 − d while |v|_d |w|_d = 1 + 2d
        assert!((rel.residual + 3.0 * d).abs() < 1e-12);
    }

    #[test]
    fn skeleton_collinearity() {
        let e = Geometry::euclidean(2).unwrap();
        let sk = Skeleton::axes(&Point::origin(2), 1.0);
        let c = coordinate_collinear(&e, &sk, &pt(&[1.0, 1.0]), &pt(&[2.0, 2.0]), DEFAULT_TOL).unwrap();
        assert!(c.holds && c.same_direction);
        assert!((c.a - 0.5).abs() < 1e-15);
        let c = coordinate_collinear(&e, &sk, &pt(&[1.0, 0.0]), &pt(&[0.0, 1.0]), DEFAULT_TOL).unwrap();
        assert!(!c.holds);
        let c = coordinate_collinear(&e, &sk, &pt(&[1.0, 1.0]), &pt(&[-3.0, -3.0]), DEFAULT_TOL).unwrap();
        assert!(c.holds && !c.same_direction);
        assert_eq!(
            coordinate_collinear(&e, &sk, &Point::origin(2), &pt(&[1.0, 0.0]), DEFAULT_TOL),
            Err(Error::EliminationFailure)
        );
    }

    #[test]
    fn euclidean_is_degenerate() {
        let e = Geometry::euclidean(3).unwrap();
        let p0 = pt(&[0.5, -1.0, 2.0]);
        let dir = vecp(&[1.0, 1.0, 1.0], &[1.3, 0.2, 1.9]);
        let v = degeneracy_classify(&e, &p0, &dir, 1.0, &DirectionSearch::default()).unwrap();
        assert_eq!(v.solution_count, 1);
        assert_eq!(v.verdict, Degeneracy::Degenerate);
        // the witness is P0 + a·(unit direction)
        let u: Vec<f64> = [0.3, -0.8, 0.9].iter().map(|x| x / libm::sqrt(0.09 + 0.64 + 0.81)).collect();
        for i in 0..3 {
            assert!((v.witnesses[0][i] - (p0[i] + u[i])).abs() < 1e-6);
        }
    }

    #[test]
    fn minkowski_degeneracy_depends_on_causal_type() {
        let m = Geometry::minkowski(4, 1.0).unwrap();
        let p0 = Point::origin(4);
        let s = DirectionSearch::default();
        let timelike = vecp(&[0.0; 4], &[1.0, 0.3, -0.2, 0.1]);
        let v = degeneracy_classify(&m, &p0, &timelike, 1.0, &s).unwrap();
        assert_eq!(v.solution_count, 1);
        let spacelike = vecp(&[0.0; 4], &[0.2, 1.0, 0.3, 0.0]);
        let v = degeneracy_classify(&m, &p0, &spacelike, 1.0, &s).unwrap();
        assert!(v.solution_count >= 2, "{}", v.solution_count);
        assert_eq!(v.verdict, Degeneracy::Nondegenerate);
    }

    #[test]
    fn metric_axioms() {
        let e = Geometry::euclidean(2).unwrap();
        let pts: Vec<Point> = (0..12)
            .map(|i| pt(&[libm::sin(i as f64 * 1.7) * 3.0, libm::cos(i as f64 * 0.9) * 2.0]))
            .collect();
        let rep = check_metric_axioms(&e, &pts, DEFAULT_TOL).unwrap();
        assert!(rep.all_ok() && rep.violation_count == 0);

        let q = Quartic { dim: 1 };
        let line = [pt(&[0.0]), pt(&[1.0]), pt(&[2.0])];
        let rep = check_metric_axioms(&q, &line, DEFAULT_TOL).unwrap();
        assert!(!rep.triangle_ok && rep.nonnegativity_ok && rep.symmetry_ok && rep.identity_ok);
        let w = &rep.violation_witnesses[0];
        assert_eq!(w.points, [pt(&[0.0]), pt(&[1.0]), pt(&[2.0])]);
        assert!((w.residual + 2.0).abs() < 1e-14);

        let m = Geometry::minkowski(2, 1.0).unwrap();
        let mixed = [pt(&[0.0, 0.0]), pt(&[0.0, 1.0])];
        assert!(matches!(check_metric_axioms(&m, &mixed, DEFAULT_TOL), Err(Error::NotMetricCandidate { .. })));
    }

    #[test]
    fn collapsed_ellipsoid() {
        let e = Geometry::euclidean(2).unwrap();
        let (p, q) = (pt(&[0.0, 0.0]), pt(&[2.0, 0.0]));
        assert!(degenerate_ellipsoid_interior(&e, &p, &q, &pt(&[0.5, 0.0])).unwrap().abs() < 1e-15);
        assert!(degenerate_ellipsoid_interior(&e, &p, &q, &pt(&[1.0, 1.0])).unwrap() > 0.0);
        let quartic = Quartic { dim: 1 };
        let f = degenerate_ellipsoid_interior(&quartic, &pt(&[0.0]), &pt(&[2.0]), &pt(&[1.0])).unwrap();
        assert!((f + 2.0).abs() < 1e-14);
    }
}
