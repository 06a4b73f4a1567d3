//! Elementary geometric objects as zero sets of envelope functions, and a
//! grid sampler that turns a zero set into a point cloud.

use alloc::vec;
use alloc::vec::Vec;

use crate::calculus::{metric_tensor, scalar_product_raw};
use crate::error::{Error, Result};
use crate::point::{Point, Skeleton};
use crate::roots::{brent, golden_min, nelder_mead};
use crate::world::{check_dim, WorldFunction};

/// The objects built from a skeleton of one to a few points.
#[derive(Debug, Clone, PartialEq)]
pub enum EnvelopeObject {
    /// Sphere centred at `center` passing through `through`.
    Sphere { center: Point, through: Point },
    /// Points whose distances to the foci sum to `2a`.
    Ellipsoid { p: Point, q: Point, a: f64 },
    /// The straight segment between two points.
    Segment { p0: Point, p1: Point },
    /// All `R` with `P0R` collinear to `P0Q`.
    Tube { p0: Point, q: Point },
    /// Collinearity to `P0Q` read off covariant coordinates relative to a
    /// skeleton whose origin is `P0`.
    CoordinateTube { q: Point, skeleton: Skeleton },
    /// Union of the segments joining consecutive points.
    BrokenTube { points: Vec<Point> },
}

impl EnvelopeObject {
    pub fn sphere(center: Point, through: Point) -> Result<Self> {
        same_dim(&[&center, &through])?;
        Ok(EnvelopeObject::Sphere { center, through })
    }

    pub fn ellipsoid(p: Point, q: Point, a: f64) -> Result<Self> {
        same_dim(&[&p, &q])?;
        if !(a.is_finite() && a >= 0.0) {
            return Err(Error::InvalidParameter("ellipsoid semiaxis must be >= 0"));
        }
        Ok(EnvelopeObject::Ellipsoid { p, q, a })
    }

    pub fn segment(p0: Point, p1: Point) -> Result<Self> {
        same_dim(&[&p0, &p1])?;
        Ok(EnvelopeObject::Segment { p0, p1 })
    }

    pub fn tube(p0: Point, q: Point) -> Result<Self> {
        same_dim(&[&p0, &q])?;
        if p0 == q {
            return Err(Error::InvalidParameter("a tube needs two distinct points"));
        }
        Ok(EnvelopeObject::Tube { p0, q })
    }

    pub fn coordinate_tube(q: Point, skeleton: Skeleton) -> Result<Self> {
        same_dim(&[&q, skeleton.origin()])?;
        if &q == skeleton.origin() {
            return Err(Error::InvalidParameter("a tube needs two distinct points"));
        }
        Ok(EnvelopeObject::CoordinateTube { q, skeleton })
    }

    pub fn broken_tube(points: Vec<Point>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidParameter("a broken line needs at least two points"));
        }
        same_dim(&points.iter().collect::<Vec<_>>())?;
        Ok(EnvelopeObject::BrokenTube { points })
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            EnvelopeObject::Sphere { .. } => "sphere",
            EnvelopeObject::Ellipsoid { .. } => "ellipsoid",
            EnvelopeObject::Segment { .. } => "segment",
            EnvelopeObject::Tube { .. } => "tube",
            EnvelopeObject::CoordinateTube { .. } => "coordinate-tube",
            EnvelopeObject::BrokenTube { .. } => "broken-tube",
        }
    }

    pub fn dim(&self) -> usize {
        self.defining_points()[0].dim()
    }

    pub fn defining_points(&self) -> Vec<&Point> {
        match self {
            EnvelopeObject::Sphere { center, through } => vec![center, through],
            EnvelopeObject::Ellipsoid { p, q, .. } => vec![p, q],
            EnvelopeObject::Segment { p0, p1 } => vec![p0, p1],
            EnvelopeObject::Tube { p0, q } => vec![p0, q],
            EnvelopeObject::CoordinateTube { q, skeleton } => {
                let mut v: Vec<&Point> = skeleton.points().iter().collect();
                v.push(q);
                v
            }
            EnvelopeObject::BrokenTube { points } => points.iter().collect(),
        }
    }

    /// Power of length carried by the residual.
    pub fn residual_power(&self) -> i32 {
        match self {
            EnvelopeObject::Tube { .. } | EnvelopeObject::CoordinateTube { .. } => 4,
            _ => 1,
        }
    }

    /// Largest chart distance between defining points.
    pub fn characteristic_length(&self) -> f64 {
        let pts = self.defining_points();
        let mut l: f64 = 0.0;
        for (i, p) in pts.iter().enumerate() {
            for q in &pts[i + 1..] {
                l = l.max(p.chart_distance(q));
            }
        }
        if l > 0.0 {
            l
        } else {
            1.0
        }
    }

    /// Membership band `1e-6 · L^k` with `L` the characteristic length and
    /// `k` the residual's length power.
    pub fn default_tol(&self) -> f64 {
        1e-6 * libm::pow(self.characteristic_length(), self.residual_power() as f64)
    }
}

fn same_dim(points: &[&Point]) -> Result<()> {
    let dim = points[0].dim();
    for p in points {
        check_dim(dim, p)?;
    }
    Ok(())
}

fn length<W: WorldFunction + ?Sized>(g: &W, p: &[f64], q: &[f64]) -> Result<f64> {
    let s = g.sigma_raw(p, q);
    if s < 0.0 {
        return Err(Error::ImaginaryLength { sigma: s });
    }
    Ok(libm::sqrt(2.0 * s))
}

fn segment_value<W: WorldFunction + ?Sized>(g: &W, p0: &[f64], p1: &[f64], r: &[f64]) -> Result<f64> {
    Ok(length(g, p0, p1)? - length(g, p0, r)? - length(g, r, p1)?)
}

fn tube_value<W: WorldFunction + ?Sized>(g: &W, p0: &[f64], q: &[f64], r: &[f64]) -> f64 {
    let vw = scalar_product_raw(g, p0, q, p0, r);
    let vv = scalar_product_raw(g, p0, q, p0, q);
    let ww = scalar_product_raw(g, p0, r, p0, r);
    vw * vw - vv * ww
}

/// Cross-multiplied residuals `(P0Pi.P0Q)(P0P1.P0R) − (P0P1.P0Q)(P0Pi.P0R)`,
/// `i = 2..n`.
fn coordinate_tube_components<W: WorldFunction + ?Sized>(
    g: &W,
    q: &[f64],
    sk: &Skeleton,
    r: &[f64],
) -> Vec<f64> {
    let pts = sk.points();
    let p0 = pts[0].coords();
    let p1 = pts[1].coords();
    let q1 = scalar_product_raw(g, p0, p1, p0, q);
    let r1 = scalar_product_raw(g, p0, p1, p0, r);
    pts[2..]
        .iter()
        .map(|pi| {
            let qi = scalar_product_raw(g, p0, pi.coords(), p0, q);
            let ri = scalar_product_raw(g, p0, pi.coords(), p0, r);
            qi * r1 - q1 * ri
        })
        .collect()
}

fn value_raw<W: WorldFunction + ?Sized>(g: &W, obj: &EnvelopeObject, r: &[f64]) -> Result<f64> {
    match obj {
        EnvelopeObject::Sphere { center, through } => {
            Ok(length(g, center.coords(), through.coords())? - length(g, center.coords(), r)?)
        }
        EnvelopeObject::Ellipsoid { p, q, a } => {
            Ok(length(g, p.coords(), r)? + length(g, r, q.coords())? - 2.0 * a)
        }
        EnvelopeObject::Segment { p0, p1 } => segment_value(g, p0.coords(), p1.coords(), r),
        EnvelopeObject::Tube { p0, q } => Ok(tube_value(g, p0.coords(), q.coords(), r)),
        EnvelopeObject::CoordinateTube { q, skeleton } => {
            // the component of largest magnitude, with its sign
            Ok(coordinate_tube_components(g, q.coords(), skeleton, r)
                .into_iter()
                .fold(0.0, |m, x| if x.abs() > m.abs() { x } else { m }))
        }
        EnvelopeObject::BrokenTube { points } => {
            let mut best: Option<f64> = None;
            let mut err = None;
            for w in points.windows(2) {
                match segment_value(g, w[0].coords(), w[1].coords(), r) {
                    Ok(v) if best.map_or(true, |b| v.abs() < b.abs()) => best = Some(v),
                    Ok(_) => {}
                    Err(e) => err = Some(e),
                }
            }
            best.ok_or_else(|| err.unwrap_or(Error::EmptyEnvelope))
        }
    }
}

/// Smooth-enough objective whose zeros are the object, for local polishing.
fn polish_objective<W: WorldFunction + ?Sized>(g: &W, obj: &EnvelopeObject, r: &[f64]) -> f64 {
    match obj {
        EnvelopeObject::CoordinateTube { q, skeleton } => libm::sqrt(
            coordinate_tube_components(g, q.coords(), skeleton, r)
                .iter()
                .map(|x| x * x)
                .sum::<f64>(),
        ),
        _ => value_raw(g, obj, r).map_or(f64::MAX, f64::abs),
    }
}

fn check_object<W: WorldFunction + ?Sized>(g: &W, obj: &EnvelopeObject) -> Result<()> {
    for p in obj.defining_points() {
        check_dim(g.dim(), p)?;
    }
    if let EnvelopeObject::CoordinateTube { skeleton, .. } = obj {
        metric_tensor(g, skeleton)?;
    }
    Ok(())
}

/// Envelope function of `obj` at `r`. Ellipsoids are negative inside and
/// positive outside; every other object is the zero set of its value.
pub fn envelope_value<W: WorldFunction + ?Sized>(g: &W, obj: &EnvelopeObject, r: &Point) -> Result<f64> {
    check_object(g, obj)?;
    check_dim(g.dim(), r)?;
    value_raw(g, obj, r.coords())
}

pub fn contains<W: WorldFunction + ?Sized>(g: &W, obj: &EnvelopeObject, r: &Point, tol: f64) -> Result<bool> {
    Ok(envelope_value(g, obj, r)?.abs() <= tol)
}

/// Axis-aligned chart box. Axes with `lo == hi` are held fixed, which
/// samples a lower-dimensional section.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleBox {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl SampleBox {
    pub fn new(lo: Vec<f64>, hi: Vec<f64>) -> Result<Self> {
        if lo.len() != hi.len() || lo.is_empty() {
            return Err(Error::InvalidParameter("box bounds must have equal, nonzero length"));
        }
        if lo.iter().zip(&hi).any(|(a, b)| !(a.is_finite() && b.is_finite() && a <= b)) {
            return Err(Error::InvalidParameter("box bounds must be finite with lo <= hi"));
        }
        Ok(SampleBox { lo, hi })
    }

    /// Bounding box of `points` padded by `3√d` plus 10 % of the extent.
    pub fn around(points: &[&Point], d: f64) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidParameter("no points to bound"));
        }
        let n = points[0].dim();
        let mut lo = vec![f64::INFINITY; n];
        let mut hi = vec![f64::NEG_INFINITY; n];
        for p in points {
            check_dim(n, p)?;
            for i in 0..n {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
        let widest = (0..n).map(|i| hi[i] - lo[i]).fold(0.0, f64::max);
        for i in 0..n {
            let extent = hi[i] - lo[i];
            let pad = 3.0 * libm::sqrt(d.max(0.0)) + 0.1 * if extent > 0.0 { extent } else { widest.max(1.0) };
            lo[i] -= pad;
            hi[i] += pad;
        }
        SampleBox::new(lo, hi)
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn active_axes(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.hi[i] > self.lo[i]).collect()
    }

    pub fn diagonal(&self) -> f64 {
        libm::sqrt(self.lo.iter().zip(&self.hi).map(|(a, b)| (b - a) * (b - a)).sum())
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.iter().zip(self.lo.iter().zip(&self.hi)).all(|(v, (a, b))| *a <= *v && *v <= *b)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampledEnvelope {
    pub points: Vec<Point>,
    pub residuals: Vec<f64>,
    pub bounds: SampleBox,
    pub grid: usize,
    pub tol: f64,
}

/// Sample the zero set of `obj` inside `bounds` on a `grid`-per-axis lattice.
///
/// Sign changes along lattice edges are refined by Brent's method. Zero
/// sets that touch zero without crossing it (a Euclidean segment, say) are
/// caught at lattice nodes where `|f|` has a local minimum along some axis,
/// then polished inside the neighbouring cells. Only points with
/// `|f| ≤ tol` are kept.
pub fn sample_envelope<W: WorldFunction + ?Sized>(
    g: &W,
    obj: &EnvelopeObject,
    bounds: &SampleBox,
    grid: usize,
    tol: f64,
) -> Result<SampledEnvelope> {
    check_object(g, obj)?;
    if bounds.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: bounds.dim(),
        });
    }
    if grid < 8 {
        return Err(Error::InvalidParameter("grid must have at least 8 nodes per axis"));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidParameter("tolerance must be positive"));
    }
    let axes = bounds.active_axes();
    if axes.is_empty() {
        return Err(Error::InvalidParameter("sampling box has no extent"));
    }
    let k = axes.len();
    let total = grid
        .checked_pow(k as u32)
        .filter(|t| *t <= 50_000_000)
        .ok_or(Error::InvalidParameter("grid too large for the number of active axes"))?;
    let h: Vec<f64> = axes
        .iter()
        .map(|&a| (bounds.hi[a] - bounds.lo[a]) / (grid - 1) as f64)
        .collect();
    let node = |idx: usize| -> Vec<f64> {
        let mut x = bounds.lo.clone();
        let mut rest = idx;
        for (j, &a) in axes.iter().enumerate() {
            let m = rest % grid;
            rest /= grid;
            x[a] = if m + 1 == grid { bounds.hi[a] } else { bounds.lo[a] + m as f64 * h[j] };
        }
        x
    };
    let stride = |j: usize| grid.pow(j as u32);
    let coord = |idx: usize, j: usize| (idx / stride(j)) % grid;
    let f = |x: &[f64]| value_raw(g, obj, x).ok().filter(|v| v.is_finite());

    let values: Vec<Option<f64>> = (0..total).map(|i| f(&node(i))).collect();
    let mut points: Vec<Vec<f64>> = Vec::new();
    let mut residuals: Vec<f64> = Vec::new();
    let dedupe = 1e-9 * bounds.diagonal();
    let mut keep = |x: Vec<f64>, v: f64, points: &mut Vec<Vec<f64>>| {
        if v.abs() > tol || !bounds.contains(&x) {
            return;
        }
        let close = points.iter().rev().take(8).any(|p| {
            p.iter().zip(&x).map(|(a, b)| (a - b) * (a - b)).sum::<f64>() <= dedupe * dedupe
        });
        if !close {
            points.push(x);
            residuals.push(v);
        }
    };

    for idx in 0..total {
        let Some(v0) = values[idx] else { continue };
        if v0 == 0.0 {
            keep(node(idx), 0.0, &mut points);
            continue;
        }
        // crossings along the +1 edge of every active axis
        for j in 0..k {
            if coord(idx, j) + 1 == grid {
                continue;
            }
            let Some(v1) = values[idx + stride(j)] else { continue };
            if v1 == 0.0 || (v0 < 0.0) == (v1 < 0.0) {
                continue;
            }
            let a = axes[j];
            let base = node(idx);
            let at = |t: f64| {
                let mut x = base.clone();
                x[a] = t;
                x
            };
            let t0 = base[a];
            let t1 = node(idx + stride(j))[a];
            let root = brent(|t| f(&at(t)).unwrap_or(f64::NAN), t0, t1, 1e-3 * tol);
            if let Ok(t) = root {
                let x = at(t);
                if let Some(v) = f(&x) {
                    keep(x, v, &mut points);
                }
            }
        }
        // touching zeros: |f| minimal along some axis, same sign around
        let mut touching = false;
        for j in 0..k {
            let c = coord(idx, j);
            if c == 0 || c + 1 == grid {
                continue;
            }
            let (Some(vm), Some(vp)) = (values[idx - stride(j)], values[idx + stride(j)]) else {
                continue;
            };
            if (vm < 0.0) == (v0 < 0.0) && (vp < 0.0) == (v0 < 0.0) && v0.abs() <= vm.abs() && v0.abs() <= vp.abs() {
                touching = true;
                break;
            }
        }
        if touching {
            let x = polish(g, obj, &node(idx), &axes, &h);
            if let Some(v) = f(&x) {
                keep(x, v, &mut points);
            }
        }
    }

    if points.is_empty() {
        return Err(Error::EmptyEnvelope);
    }
    Ok(SampledEnvelope {
        points: points.into_iter().map(Point::new).collect::<Result<_>>()?,
        residuals,
        bounds: bounds.clone(),
        grid,
        tol,
    })
}

/// Cyclic golden-section descent within one cell of `start`, then a
/// Nelder-Mead polish in the active subspace.
fn polish<W: WorldFunction + ?Sized>(
    g: &W,
    obj: &EnvelopeObject,
    start: &[f64],
    axes: &[usize],
    h: &[f64],
) -> Vec<f64> {
    let obj_at = |x: &[f64]| polish_objective(g, obj, x);
    let mut x = start.to_vec();
    for _cycle in 0..4 {
        for (j, &a) in axes.iter().enumerate() {
            let c = start[a];
            let mut y = x.clone();
            let (t, _) = golden_min(
                |t| {
                    y[a] = t;
                    obj_at(&y)
                },
                c - h[j],
                c + h[j],
                80,
            );
            x[a] = t;
        }
    }
    let sub: Vec<f64> = axes.iter().map(|&a| x[a]).collect();
    let step = 0.1 * h.iter().fold(f64::INFINITY, |m, v| m.min(*v));
    let embed = |s: &[f64]| {
        let mut y = x.clone();
        for (j, &a) in axes.iter().enumerate() {
            y[a] = s[j];
        }
        y
    };
    let (best, fbest) = nelder_mead(|s| obj_at(&embed(s)), &sub, step, 300 * axes.len(), 0.0);
    if fbest < obj_at(&x) {
        embed(&best)
    } else {
        x
    }
}

/// Result of comparing the tube `T_{P0Q}` with its skeleton-relative
/// counterpart.
#[derive(Debug, Clone, PartialEq)]
pub struct TubeCoincidence {
    pub tube: SampledEnvelope,
    pub coordinate_tube: SampledEnvelope,
    /// Largest `|tube residual|` over the coordinate-tube samples.
    pub tube_residual_on_coordinate: f64,
    /// Largest `|coordinate-tube residual|` over the tube samples.
    pub coordinate_residual_on_tube: f64,
    pub coincide: bool,
}

pub fn tube_coincidence_check<W: WorldFunction + ?Sized>(
    g: &W,
    q: &Point,
    sk: &Skeleton,
    bounds: &SampleBox,
    grid: usize,
    tol: f64,
) -> Result<TubeCoincidence> {
    let tube = EnvelopeObject::tube(sk.origin().clone(), q.clone())?;
    let coord = EnvelopeObject::coordinate_tube(q.clone(), sk.clone())?;
    let tube_cloud = sample_envelope(g, &tube, bounds, grid, tol)?;
    let coord_cloud = sample_envelope(g, &coord, bounds, grid, tol)?;
    let max_on = |obj: &EnvelopeObject, cloud: &SampledEnvelope| -> f64 {
        cloud
            .points
            .iter()
            .map(|p| value_raw(g, obj, p.coords()).map_or(f64::INFINITY, f64::abs))
            .fold(0.0, f64::max)
    };
    let a = max_on(&tube, &coord_cloud);
    let b = max_on(&coord, &tube_cloud);
    Ok(TubeCoincidence {
        coincide: a <= tol && b <= tol,
        tube: tube_cloud,
        coordinate_tube: coord_cloud,
        tube_residual_on_coordinate: a,
        coordinate_residual_on_tube: b,
    })
}
