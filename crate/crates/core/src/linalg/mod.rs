//! Right quaternionic vectors, matrices acting as right-linear operators,
//! elimination over ℍ, and Hermitian spectra through the complex adjoint
//! embedding.

mod complex;
mod elimination;
mod matrix;
mod vector;

pub use complex::{hermitian_eigen, ComplexMatrix, HermitianEigen};
pub use matrix::QMatrix;
pub use vector::QVector;

/// Relative tolerance used when collapsing the doubled spectrum of an
/// embedded self-adjoint matrix.
pub const PAIRING_TOLERANCE: f64 = 1e-7;

/// A pivot is unusable when its modulus is below this fraction of the
/// largest entry modulus of the input.
pub const PIVOT_THRESHOLD: f64 = 1e-12;
