//! Carrier-set elements and the ordered point sets built from them.
//!
//! Coordinates are labels only. Nothing in this module draws a geometric
//! conclusion from them; all geometry goes through a [`WorldFunction`].
//!
//! [`WorldFunction`]: crate::WorldFunction

use alloc::vec::Vec;
use core::ops::Index;

use crate::error::{Error, Result};

/// A point of the carrier set, labelled by a tuple of finite reals.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: impl Into<Vec<f64>>) -> Result<Self> {
        let coords = coords.into();
        if coords.is_empty() || coords.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidPoint);
        }
        Ok(Point(coords))
    }

    /// The origin of a `dim`-dimensional chart.
    pub fn origin(dim: usize) -> Self {
        assert!(dim > 0, "points need at least one label");
        Point(alloc::vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }

    /// Largest absolute label, used to scale tolerances.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, x| f64::max(m, x.abs()))
    }

    /// Euclidean distance between chart labels. Only used for bookkeeping
    /// (deduplication, bounding boxes), never as a geometric quantity.
    pub fn chart_distance(&self, other: &Point) -> f64 {
        let s: f64 = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        libm::sqrt(s)
    }
}

impl Index<usize> for Point {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl AsRef<[f64]> for Point {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// Ordered pair of points `{start, end}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    pub start: Point,
    pub end: Point,
}

impl Vector {
    pub fn new(start: Point, end: Point) -> Result<Self> {
        if start.dim() != end.dim() {
            return Err(Error::DimensionMismatch {
                expected: start.dim(),
                found: end.dim(),
            });
        }
        Ok(Vector { start, end })
    }

    pub fn dim(&self) -> usize {
        self.start.dim()
    }

    pub fn scale(&self) -> f64 {
        f64::max(self.start.max_abs(), self.end.max_abs())
    }
}

/// Ordered list `P0, P1, ..., Pn` defining `n` basis vectors `P0Pi`.
#[derive(Debug, Clone, PartialEq)]
pub struct Skeleton {
    points: Vec<Point>,
}

impl Skeleton {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidParameter("a skeleton needs at least two points"));
        }
        let dim = points[0].dim();
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        Ok(Skeleton { points })
    }

    /// `origin` plus one point per chart axis at distance `step`.
    pub fn axes(origin: &Point, step: f64) -> Self {
        let mut points = Vec::with_capacity(origin.dim() + 1);
        points.push(origin.clone());
        for i in 0..origin.dim() {
            let mut c = origin.coords().to_vec();
            c[i] += step;
            points.push(Point(c));
        }
        Skeleton { points }
    }

    pub fn origin(&self) -> &Point {
        &self.points[0]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Number of basis vectors `n`.
    pub fn order(&self) -> usize {
        self.points.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn scale(&self) -> f64 {
        self.points.iter().fold(0.0, |m, p| f64::max(m, p.max_abs()))
    }
}
