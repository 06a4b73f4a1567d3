//! World-function geometry.
//!
//! Every geometric notion here — lengths, scalar products, collinearity,
//! dimension, straight lines — is computed from a single function σ(P, Q),
//! half the squared distance between two points. Coordinates only label
//! points.
//!
//! The crate is `no_std` (with `alloc`); file formats and the command line
//! live in the companion `sigma_geom_cli` crate.

#![no_std]

extern crate alloc;

mod error;

pub mod calculus;
pub mod distorted;
pub mod envelopes;
pub mod linalg;
pub mod point;
pub mod predicates;
pub mod roots;
pub mod verify;
pub mod world;

pub use calculus::{covariant_coordinates, gram_determinant, metric_tensor, scalar_product, MetricTensor};
pub use error::{Error, Result};
pub use point::{Point, Skeleton, Vector};
pub use world::{
    classify, distortion_from_quantum, evaluate_sigma, squared_length, Distortion, Geometry,
    IntervalClass, IntervalMap, Quartic, Undistorted, WorldFunction,
};
