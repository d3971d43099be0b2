//! Scalars, vectors and matrices shared by every other module.

mod matrix;
mod sample;
mod scalar;
mod vector;

pub use matrix::{h_matrix, j_matrix, rotation, rotation_from_point, Matrix};
pub use sample::{inverse_stereographic, SampleUnit};
pub use scalar::{residual_passes, weighted_key, Mode, Scalar, DEFAULT_TOLERANCE};
pub use vector::Vector;

/// Complex number over a [`Scalar`] field.
pub type ComplexScalar<S> = num_complex::Complex<S>;
