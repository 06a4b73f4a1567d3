//! World functions: the single source of geometric truth.

use crate::error::{Error, Result};
use crate::point::{Point, Vector};

/// Relative band inside which a squared length counts as null.
pub const NULL_TOLERANCE: f64 = 1e-12;

/// A world function `σ: Ω × Ω → R` on points labelled by `dim()` reals.
///
/// Implementations must satisfy `σ(P,P) = 0`. Symmetry is expected of every
/// geometry shipped here but is deliberately not enforced, so that the
/// verifier can be pointed at asymmetric candidates.
pub trait WorldFunction {
    fn dim(&self) -> usize;

    /// σ on raw label slices. Callers guarantee both slices have length `dim()`.
    fn sigma_raw(&self, p: &[f64], q: &[f64]) -> f64;

    fn sigma(&self, p: &Point, q: &Point) -> Result<f64> {
        check_dim(self.dim(), p)?;
        check_dim(self.dim(), q)?;
        Ok(self.sigma_raw(p.coords(), q.coords()))
    }
}

impl<W: WorldFunction + ?Sized> WorldFunction for &W {
    fn dim(&self) -> usize {
        (**self).dim()
    }

    fn sigma_raw(&self, p: &[f64], q: &[f64]) -> f64 {
        (**self).sigma_raw(p, q)
    }
}

pub(crate) fn check_dim(expected: usize, p: &Point) -> Result<()> {
    if p.dim() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: p.dim(),
        });
    }
    Ok(())
}

/// A map applied to the Minkowski world function, `σ = F(σ_M)`.
///
/// Every such geometry is invariant under the Lorentz group of the
/// underlying chart, which the world-line simulator relies on.
pub trait IntervalMap {
    fn apply(&self, sigma_m: f64) -> f64;

    /// Links whose Minkowski σ is at or below this value are outside the
    /// regime the world-line model is built for.
    fn threshold(&self) -> f64 {
        0.0
    }
}

impl<M: IntervalMap + ?Sized> IntervalMap for &M {
    fn apply(&self, sigma_m: f64) -> f64 {
        (**self).apply(sigma_m)
    }

    fn threshold(&self) -> f64 {
        (**self).threshold()
    }
}

/// Identity map: plain Minkowski geometry.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Undistorted;

impl IntervalMap for Undistorted {
    fn apply(&self, sigma_m: f64) -> f64 {
        sigma_m
    }
}

/// The three-branch distortion with shift `d ≥ 0` above threshold `σ0 > 0`:
///
/// ```text
/// D(σ) = σ + d             σ0 < σ
///        (1 + d/σ0) σ      0 ≤ σ ≤ σ0
///        σ                 σ < 0
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Distortion {
    d: f64,
    sigma0: f64,
}

impl Distortion {
    pub fn new(d: f64, sigma0: f64) -> Result<Self> {
        if !(d.is_finite() && d >= 0.0) {
            return Err(Error::InvalidParameter("distortion d must be finite and >= 0"));
        }
        if !(sigma0.is_finite() && sigma0 > 0.0) {
            return Err(Error::InvalidParameter("threshold sigma0 must be finite and > 0"));
        }
        Ok(Distortion { d, sigma0 })
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn sigma0(&self) -> f64 {
        self.sigma0
    }
}

impl IntervalMap for Distortion {
    fn apply(&self, s: f64) -> f64 {
        if s > self.sigma0 {
            s + self.d
        } else if s >= 0.0 {
            (1.0 + self.d / self.sigma0) * s
        } else {
            s
        }
    }

    fn threshold(&self) -> f64 {
        self.sigma0
    }
}

/// `σ_M = ½ (c² Δt² − |Δx|²)`, time is label 0.
#[inline]
pub fn minkowski_sigma(c: f64, p: &[f64], q: &[f64]) -> f64 {
    let dt = p[0] - q[0];
    let mut space = 0.0;
    for i in 1..p.len() {
        let dx = p[i] - q[i];
        space += dx * dx;
    }
    0.5 * (c * c * dt * dt - space)
}

#[inline]
fn euclidean_sigma(p: &[f64], q: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..p.len() {
        let dx = p[i] - q[i];
        s += dx * dx;
    }
    0.5 * s
}

/// The geometry families provided by the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geometry {
    /// Proper Euclidean space, `σ_E = ½|x − y|²`.
    Euclidean { dim: usize },
    /// Minkowski space-time with one time label and `dim − 1` spatial labels.
    Minkowski { dim: usize, c: f64 },
    /// Minkowski space-time with the distortion applied to `σ_M`.
    Distorted {
        dim: usize,
        c: f64,
        distortion: Distortion,
    },
}

impl Geometry {
    pub fn euclidean(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("dimension must be positive"));
        }
        Ok(Geometry::Euclidean { dim })
    }

    pub fn minkowski(dim: usize, c: f64) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidParameter("space-time needs at least 2 labels"));
        }
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::InvalidParameter("speed of light must be positive"));
        }
        Ok(Geometry::Minkowski { dim, c })
    }

    pub fn distorted(dim: usize, c: f64, d: f64, sigma0: f64) -> Result<Self> {
        let Geometry::Minkowski { dim, c } = Geometry::minkowski(dim, c)? else {
            unreachable!()
        };
        Ok(Geometry::Distorted {
            dim,
            c,
            distortion: Distortion::new(d, sigma0)?,
        })
    }

    /// Speed of light for space-time geometries.
    pub fn light_speed(&self) -> Option<f64> {
        match *self {
            Geometry::Euclidean { .. } => None,
            Geometry::Minkowski { c, .. } | Geometry::Distorted { c, .. } => Some(c),
        }
    }

    /// Distortion parameter `d`, zero for undistorted geometries.
    pub fn distortion(&self) -> f64 {
        match self {
            Geometry::Distorted { distortion, .. } => distortion.d(),
            _ => 0.0,
        }
    }
}

impl WorldFunction for Geometry {
    fn dim(&self) -> usize {
        match *self {
            Geometry::Euclidean { dim } => dim,
            Geometry::Minkowski { dim, .. } | Geometry::Distorted { dim, .. } => dim,
        }
    }

    fn sigma_raw(&self, p: &[f64], q: &[f64]) -> f64 {
        match self {
            Geometry::Euclidean { .. } => euclidean_sigma(p, q),
            Geometry::Minkowski { c, .. } => minkowski_sigma(*c, p, q),
            Geometry::Distorted { c, distortion, .. } => {
                distortion.apply(minkowski_sigma(*c, p, q))
            }
        }
    }
}

/// `σ = ½ |x − y|⁴`. Symmetric and vanishing on the diagonal, but its
/// distance `ρ = |x − y|²` violates the triangle inequality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quartic {
    pub dim: usize,
}

impl WorldFunction for Quartic {
    fn dim(&self) -> usize {
        self.dim
    }

    fn sigma_raw(&self, p: &[f64], q: &[f64]) -> f64 {
        let s = 2.0 * euclidean_sigma(p, q);
        0.5 * s * s
    }
}

/// Causal character of a vector, from the sign of σ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalClass {
    Timelike,
    Null,
    Spacelike,
}

pub fn evaluate_sigma<W: WorldFunction + ?Sized>(g: &W, p: &Point, q: &Point) -> Result<f64> {
    g.sigma(p, q)
}

/// `|v|² = 2σ(start, end)`.
pub fn squared_length<W: WorldFunction + ?Sized>(g: &W, v: &Vector) -> Result<f64> {
    Ok(2.0 * g.sigma(&v.start, &v.end)?)
}

pub fn classify<W: WorldFunction + ?Sized>(g: &W, v: &Vector) -> Result<IntervalClass> {
    let s = g.sigma(&v.start, &v.end)?;
    let scale = v.scale();
    Ok(if s.abs() <= NULL_TOLERANCE * scale * scale {
        IntervalClass::Null
    } else if s > 0.0 {
        IntervalClass::Timelike
    } else {
        IntervalClass::Spacelike
    })
}

/// Distortion implied by the quantum constant: `d = ħ / (2 b c)`.
pub fn distortion_from_quantum(hbar: f64, b: f64, c: f64) -> Result<f64> {
    for x in [hbar, b, c] {
        if !(x.is_finite() && x > 0.0) {
            return Err(Error::InvalidParameter("hbar, b and c must be positive"));
        }
    }
    Ok(0.5 * hbar / (b * c))
}
