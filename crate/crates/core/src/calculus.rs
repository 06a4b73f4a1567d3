//! Scalar products, metric tensors and covariant coordinates built from σ.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{Lu, Matrix};
use crate::point::{Point, Skeleton, Vector};
use crate::world::{check_dim, WorldFunction};

/// Relative pivot threshold below which a skeleton metric counts as singular.
pub const SINGULAR_PIVOT: f64 = 1e-12;

/// `(P0P1.Q0Q1) = σ(P0,Q1) + σ(P1,Q0) − σ(P0,Q0) − σ(P1,Q1)`.
pub fn scalar_product<W: WorldFunction + ?Sized>(g: &W, v: &Vector, w: &Vector) -> Result<f64> {
    for p in [&v.start, &v.end, &w.start, &w.end] {
        check_dim(g.dim(), p)?;
    }
    Ok(scalar_product_raw(
        g,
        v.start.coords(),
        v.end.coords(),
        w.start.coords(),
        w.end.coords(),
    ))
}

/// Unchecked scalar product on raw labels.
#[inline]
pub fn scalar_product_raw<W: WorldFunction + ?Sized>(
    g: &W,
    p0: &[f64],
    p1: &[f64],
    q0: &[f64],
    q1: &[f64],
) -> f64 {
    g.sigma_raw(p0, q1) + g.sigma_raw(p1, q0) - g.sigma_raw(p0, q0) - g.sigma_raw(p1, q1)
}

/// Metric tensor `g_ik = (P0Pi.P0Pk)` of a skeleton together with its inverse.
#[derive(Debug, Clone)]
pub struct MetricTensor {
    pub lower: Matrix,
    pub upper: Matrix,
}

impl MetricTensor {
    /// `½ g^ik Δx_i Δx_k` for a difference of covariant coordinates.
    pub fn quadratic_form(&self, dx: &[f64]) -> f64 {
        let gx = self.upper.mul_vec(dx);
        0.5 * dx.iter().zip(&gx).map(|(a, b)| a * b).sum::<f64>()
    }
}

/// Gram matrix of the basis vectors `P0Pi`, without inverting it.
pub fn gram_matrix<W: WorldFunction + ?Sized>(g: &W, sk: &Skeleton) -> Result<Matrix> {
    check_dim(g.dim(), sk.origin())?;
    let pts = sk.points();
    let p0 = pts[0].coords();
    let n = sk.order();
    let mut m = Matrix::zeros(n);
    for i in 0..n {
        for k in i..n {
            let v = scalar_product_raw(g, p0, pts[i + 1].coords(), p0, pts[k + 1].coords());
            m.set(i, k, v);
            m.set(k, i, v);
        }
    }
    Ok(m)
}

pub fn metric_tensor<W: WorldFunction + ?Sized>(g: &W, sk: &Skeleton) -> Result<MetricTensor> {
    let lower = gram_matrix(g, sk)?;
    let lu = Lu::new(&lower);
    let norm = lower.max_abs();
    if !(lu.min_pivot() > SINGULAR_PIVOT * norm) {
        return Err(Error::SingularSkeleton {
            det: lu.determinant(),
        });
    }
    let upper = lu.inverse();
    Ok(MetricTensor { lower, upper })
}

/// The Gram determinant `F_n` of a skeleton.
pub fn gram_determinant<W: WorldFunction + ?Sized>(g: &W, sk: &Skeleton) -> Result<f64> {
    Ok(Lu::new(&gram_matrix(g, sk)?).determinant())
}

/// `x_i(P) = (P0Pi.P0P)`, `i = 1..n`.
pub fn covariant_coordinates<W: WorldFunction + ?Sized>(
    g: &W,
    sk: &Skeleton,
    p: &Point,
) -> Result<Vec<f64>> {
    metric_tensor(g, sk)?;
    check_dim(g.dim(), p)?;
    Ok(covariant_coordinates_raw(g, sk, p.coords()))
}

/// Covariant coordinates without the nonsingularity check.
pub fn covariant_coordinates_raw<W: WorldFunction + ?Sized>(
    g: &W,
    sk: &Skeleton,
    p: &[f64],
) -> Vec<f64> {
    let pts = sk.points();
    let p0 = pts[0].coords();
    pts[1..]
        .iter()
        .map(|pi| scalar_product_raw(g, p0, pi.coords(), p0, p))
        .collect()
}
