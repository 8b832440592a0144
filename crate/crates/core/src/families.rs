//! Deterministic frame families: the duplicated orthonormal basis, the
//! coordinate basis, and seeded random frames.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::frames::Frame;
use crate::linalg::QVector;
use crate::quaternion::Quaternion;

/// The generator behind every seeded routine in the crate.
pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random frames are resampled until `λ_min(S) > RANDOM_FRAME_CONDITION · λ_max(S)`.
pub const RANDOM_FRAME_CONDITION: f64 = 0.05;

const MAX_RESAMPLES: usize = 10_000;

/// Coordinate basis `{z₁, …, zₙ}` of ℍⁿ.
pub fn orthonormal_basis(n: usize) -> Result<Vec<QVector>> {
    if n == 0 {
        return Err(Error::InvalidParameter("dimension must be at least 1"));
    }
    Ok((0..n).map(|k| QVector::basis(n, k)).collect())
}

/// Each basis vector twice, in order: `u₂ⱼ₋₁ = u₂ⱼ = zⱼ` (2n vectors).
pub fn duplicated_basis(n: usize) -> Result<Vec<QVector>> {
    Ok(orthonormal_basis(n)?.into_iter().flat_map(|z| [z.clone(), z]).collect())
}

/// The two alternate duals of [`duplicated_basis`] that keep one copy of
/// each basis vector and zero out the other: `(v, w)` with
/// `v₂ⱼ₋₁ = zⱼ, v₂ⱼ = 0` and `w₂ⱼ₋₁ = 0, w₂ⱼ = zⱼ`.
pub fn zero_padded_duals(n: usize) -> Result<(Vec<QVector>, Vec<QVector>)> {
    let basis = orthonormal_basis(n)?;
    let zero = QVector::zeros(n);
    let v = basis.iter().flat_map(|z| [z.clone(), zero.clone()]).collect();
    let w = basis.iter().flat_map(|z| [zero.clone(), z.clone()]).collect();
    Ok((v, w))
}

/// Components uniform in `[−1, 1]`.
pub fn random_quaternion<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    Quaternion::raw(
        rng.gen_range(-1.0..=1.0),
        rng.gen_range(-1.0..=1.0),
        rng.gen_range(-1.0..=1.0),
        rng.gen_range(-1.0..=1.0),
    )
}

pub fn random_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> QVector {
    QVector::new((0..n).map(|_| random_quaternion(rng)).collect()).expect("n > 0")
}

pub fn random_unit_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> QVector {
    loop {
        let v = random_vector(n, rng);
        let norm = v.norm();
        if norm > 1e-3 {
            return v.scale(1.0 / norm);
        }
    }
}

/// `m` random vectors in ℍⁿ, redrawn as a whole until the family is a frame
/// with `λ_min(S) > RANDOM_FRAME_CONDITION · λ_max(S)`.
pub fn random_frame<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Result<Frame> {
    if n == 0 {
        return Err(Error::InvalidParameter("dimension must be at least 1"));
    }
    if m < n {
        return Err(Error::InvalidParameter("a frame for ℍⁿ needs at least n vectors"));
    }
    for _ in 0..MAX_RESAMPLES {
        let vectors = (0..m).map(|_| random_vector(n, rng)).collect();
        let frame = Frame::new(vectors)?;
        let b = frame.bounds();
        if b.lower > RANDOM_FRAME_CONDITION * b.upper {
            return Ok(frame);
        }
    }
    Err(Error::InvalidParameter("could not draw a well-conditioned random frame"))
}

/// Vector count used by the `random-frame` generator: `n + ⌈n/2⌉`.
pub fn random_frame_size(n: usize) -> usize {
    n + n.div_ceil(2)
}
