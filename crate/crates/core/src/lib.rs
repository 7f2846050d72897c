//! Sign-constrained feedforward networks.
//!
//! `mononet` implements small dense/convolutional networks whose weights can
//! be constrained to a sign pattern (most importantly: all non-negative).
//! Networks with non-negative weights and non-decreasing activations are
//! order-preserving monotone maps, and the crate ships the instruments to
//! work with that fact:
//!
//! - structural monotonicity certificates and empirical falsification
//!   ([`order`]),
//! - projected-gradient training that keeps weights inside their sign
//!   constraint set ([`train`]),
//! - classification-task geometry: XOR variants, witness-point
//!   constructions, decision-boundary rasterization and slope
//!   classification ([`geometry`]),
//! - architecture rewrites that reduce convolutions and skip connections
//!   to plain dense layers while preserving the sign pattern ([`rewrite`]).
//!
//! The numeric core is generic over the scalar type (`f32`/`f64`); the
//! concrete aliases below fix `f64`, which is what the CLI, the JSON model
//! format, and the bundled fixtures use.

pub mod activation;
pub mod constraint;
pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod linalg;
pub mod model_io;
pub mod network;
pub mod order;
pub mod rewrite;
pub mod rng;
pub mod scalar;
pub mod train;

pub use activation::Activation;
pub use constraint::{SignConstraint, SignMask, SignMode};
pub use error::{Error, Result};
pub use linalg::{Matrix, Vector};
pub use network::{Arch, ConvLayer, DenseLayer, Layer, Network, PoolLayer, SkipLink};
pub use rng::Rng;
pub use scalar::Scalar;

/// `f64` vector, the default scalar used by the CLI and file formats.
pub type Vec64 = Vector<f64>;
/// `f64` row-major matrix.
pub type Mat64 = Matrix<f64>;
/// `f64` network.
pub type Net64 = Network<f64>;

/// `f32` vector.
pub type Vec32 = Vector<f32>;
/// `f32` row-major matrix.
pub type Mat32 = Matrix<f32>;
/// `f32` network.
pub type Net32 = Network<f32>;
