//! Frame theory over finite-dimensional right quaternionic Hilbert spaces.
//!
//! The crate is `no_std` (it needs `alloc`). It provides:
//!
//! * [`Quaternion`], the scalar division ring,
//! * [`QVector`] and [`QMatrix`], vectors of the right module ℍⁿ and the
//!   right-linear operators acting on them, together with Gaussian
//!   elimination and Hermitian eigenvalues through the complex adjoint
//!   embedding,
//! * [`Frame`], with synthesis/analysis/frame operators, optimal frame bounds,
//!   canonical duals and alternate-dual verification,
//! * the [`projection`] module: pseudo-inverse of the synthesis operator,
//!   frames restricted to subspaces and the orthogonal projection of the
//!   coefficient space onto the range of the analysis operator.
//!
//! Matrices act on column vectors with the operator entry on the left of
//! each product, `(A·v)ᵣ = Σ A[r,c]·v[c]`, while scalars multiply vectors
//! from the right. With that convention `A·(v·q) = (A·v)·q` holds exactly.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod error;
pub mod families;
pub mod frames;
pub mod linalg;
pub mod projection;
pub mod quaternion;

pub use error::{Error, Result};
pub use frames::{CoefficientSeq, DualVerdict, Frame, FrameBounds};
pub use linalg::{ComplexMatrix, QMatrix, QVector};
pub use quaternion::Quaternion;

/// Library-wide default tolerance for approximate comparisons and verdicts.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
