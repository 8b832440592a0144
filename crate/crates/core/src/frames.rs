//! Finite frames in ℍⁿ: synthesis, analysis and frame operators, optimal
//! bounds, canonical duals and alternate-dual verification.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::families::{random_unit_vector, seeded_rng};
use crate::linalg::{QMatrix, QVector};
use crate::quaternion::Quaternion;
use crate::DEFAULT_TOLERANCE;

/// Relative threshold separating frames from rank-deficient families:
/// a family is a frame when `λ_min(S) > FRAME_THRESHOLD · max(λ_max(S), 1)`.
pub const FRAME_THRESHOLD: f64 = 1e-9;

/// Number of seeded random unit probes added to the coordinate basis.
pub const RANDOM_PROBES: usize = 20;

/// Tolerance and probe seed shared by every verification routine.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CheckOptions {
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self { tolerance: DEFAULT_TOLERANCE, seed: 0 }
    }
}

/// The coordinate basis of ℍⁿ followed by [`RANDOM_PROBES`] seeded random
/// unit vectors.
pub fn probe_vectors(n: usize, seed: u64) -> Vec<QVector> {
    let mut rng = seeded_rng(seed);
    (0..n)
        .map(|k| QVector::basis(n, k))
        .chain((0..RANDOM_PROBES).map(|_| random_unit_vector(n, &mut rng)))
        .collect()
}

/// A coefficient sequence `{qᵢ}` of length `m`, the finite stand-in for an
/// element of ℓ₂(ℍ).
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct CoefficientSeq(Vec<Quaternion>);

impl CoefficientSeq {
    pub fn new(entries: Vec<Quaternion>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self(entries))
    }

    pub fn zeros(m: usize) -> Self {
        Self::from(QVector::zeros(m))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Quaternion] {
        &self.0
    }

    /// `Σ |qᵢ|²`.
    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|q| q.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    /// ℓ₂ inner product `Σ conj(pᵢ)·qᵢ`.
    pub fn inner(&self, other: &Self) -> Result<Quaternion> {
        self.as_vector().inner(&other.as_vector())
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        Ok(self.as_vector().try_sub(&other.as_vector())?.into())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(self.as_vector().try_add(&other.as_vector())?.into())
    }

    pub fn as_vector(&self) -> QVector {
        QVector::new(self.0.clone()).expect("non-empty")
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a.approx_eq(*b, tol))
    }
}

impl From<QVector> for CoefficientSeq {
    fn from(v: QVector) -> Self {
        Self(v.into_entries())
    }
}

impl core::ops::Index<usize> for CoefficientSeq {
    type Output = Quaternion;
    fn index(&self, i: usize) -> &Quaternion {
        &self.0[i]
    }
}

/// Optimal frame constants and the classification derived from them.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FrameBounds {
    /// `λ_min(S)`.
    pub lower: f64,
    /// `λ_max(S)`.
    pub upper: f64,
    pub is_frame: bool,
    /// Always true: a finite family satisfies the upper inequality with `B = λ_max(S)`.
    pub is_bessel: bool,
    /// Frame with `|A − B| ≤ ε·B`.
    pub is_tight: bool,
    /// Tight with `|A − 1| ≤ ε`.
    pub is_parseval: bool,
    pub threshold: f64,
}

impl FrameBounds {
    fn classify(lower: f64, upper: f64, eps: f64) -> Self {
        let is_frame = lower > eps * upper.max(1.0);
        let is_tight = is_frame && (lower - upper).abs() <= eps * upper;
        let is_parseval = is_tight && (lower - 1.0).abs() <= eps;
        Self { lower, upper, is_frame, is_bessel: true, is_tight, is_parseval, threshold: eps }
    }
}

/// A finite family `{uᵢ}ᵢ₌₁..ₘ` in ℍⁿ with its operators precomputed.
///
/// Construction computes the synthesis matrix `T` (column `i` is `uᵢ`), the
/// frame operator `S = T·T*`, its extremal eigenvalues and, for frames, `S⁻¹`
/// together with the canonical dual vectors `S⁻¹uᵢ`. Frames are immutable,
/// so shared references can be read from any number of threads.
#[derive(Clone, Debug)]
pub struct Frame {
    vectors: Vec<QVector>,
    synthesis: QMatrix,
    operator: QMatrix,
    bounds: FrameBounds,
    inverse_operator: Option<QMatrix>,
    dual_vectors: Option<Vec<QVector>>,
}

impl Frame {
    pub fn new(vectors: Vec<QVector>) -> Result<Self> {
        Self::with_threshold(vectors, FRAME_THRESHOLD)
    }

    pub fn with_threshold(vectors: Vec<QVector>, threshold: f64) -> Result<Self> {
        let synthesis = QMatrix::from_columns(&vectors)?;
        let operator = outer_sum(&vectors);
        let eig = operator.hermitian_eigenvalues()?;
        let lower = eig[0].max(0.0);
        let upper = eig[eig.len() - 1].max(0.0);
        let bounds = FrameBounds::classify(lower, upper, threshold);
        let (inverse_operator, dual_vectors) = if bounds.is_frame {
            let inv = operator.inverse()?;
            let duals = vectors.iter().map(|u| &inv * u).collect();
            (Some(inv), Some(duals))
        } else {
            (None, None)
        };
        Ok(Self { vectors, synthesis, operator, bounds, inverse_operator, dual_vectors })
    }

    /// Dimension `n` of the ambient space.
    pub fn dim(&self) -> usize {
        self.synthesis.rows()
    }

    /// Number `m` of vectors.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[QVector] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<QVector> {
        self.vectors
    }

    /// `T`, the `n × m` synthesis matrix.
    pub fn synthesis_matrix(&self) -> &QMatrix {
        &self.synthesis
    }

    /// `T*`, the `m × n` analysis matrix.
    pub fn analysis_matrix(&self) -> QMatrix {
        self.synthesis.adjoint()
    }

    /// `S = T·T*`.
    pub fn frame_operator(&self) -> &QMatrix {
        &self.operator
    }

    pub fn bounds(&self) -> FrameBounds {
        self.bounds
    }

    pub fn is_frame(&self) -> bool {
        self.bounds.is_frame
    }

    fn not_a_frame(&self) -> Error {
        Error::NotAFrame { lower: self.bounds.lower, upper: self.bounds.upper }
    }

    /// `S⁻¹`.
    pub fn inverse_frame_operator(&self) -> Result<&QMatrix> {
        self.inverse_operator.as_ref().ok_or_else(|| self.not_a_frame())
    }

    /// `{S⁻¹uᵢ}`.
    pub fn canonical_dual_vectors(&self) -> Result<&[QVector]> {
        self.dual_vectors.as_deref().ok_or_else(|| self.not_a_frame())
    }

    pub fn canonical_dual(&self) -> Result<Frame> {
        Frame::new(self.canonical_dual_vectors()?.to_vec())
    }

    /// `T̃ = S⁻¹·T`, the synthesis matrix of the canonical dual.
    pub fn dual_synthesis_matrix(&self) -> Result<QMatrix> {
        Ok(self.inverse_frame_operator()? * &self.synthesis)
    }

    /// `T({qᵢ}) = Σ uᵢ·qᵢ`.
    pub fn synthesis(&self, c: &CoefficientSeq) -> Result<QVector> {
        synthesize(&self.vectors, c)
    }

    /// `T*(u) = {⟨uᵢ|u⟩}`.
    pub fn analysis(&self, u: &QVector) -> Result<CoefficientSeq> {
        analyze(&self.vectors, u)
    }

    /// `Σ |⟨uᵢ|u⟩|²`, the middle term of the frame inequality.
    pub fn analysis_energy(&self, u: &QVector) -> Result<f64> {
        Ok(self.analysis(u)?.norm_sqr())
    }

    /// `c̃ᵢ = ⟨S⁻¹uᵢ|u⟩`, the coefficients of least ℓ₂ norm among all
    /// sequences synthesizing `u`.
    pub fn minimal_norm_coefficients(&self, u: &QVector) -> Result<CoefficientSeq> {
        analyze(self.canonical_dual_vectors()?, u)
    }

    /// `Σ S⁻¹uᵢ·⟨uᵢ|u⟩`.
    pub fn reconstruct(&self, u: &QVector) -> Result<QVector> {
        synthesize(self.canonical_dual_vectors()?, &self.analysis(u)?)
    }

    /// `Σ uᵢ·⟨S⁻¹uᵢ|u⟩`.
    pub fn reconstruct_dual_order(&self, u: &QVector) -> Result<QVector> {
        self.synthesis(&self.minimal_norm_coefficients(u)?)
    }

    /// Compares `c` with the minimal-norm coefficients of `u`:
    /// `‖c‖² = ‖c̃‖² + ‖c̃ − c‖²` with `c − c̃ ⟂ c̃`.
    pub fn norm_identity_check(&self, u: &QVector, c: &CoefficientSeq, tol: f64) -> Result<NormIdentity> {
        let residual = self.synthesis(c)?.distance(u)?;
        if residual > tol * u.norm().max(1.0) {
            return Err(Error::NotARepresentation { residual });
        }
        let minimal = self.minimal_norm_coefficients(u)?;
        let diff = minimal.try_sub(c)?;
        let coefficient_norm_sqr = c.norm_sqr();
        let minimal_norm_sqr = minimal.norm_sqr();
        let difference_norm_sqr = diff.norm_sqr();
        Ok(NormIdentity {
            coefficient_norm_sqr,
            minimal_norm_sqr,
            difference_norm_sqr,
            identity_residual: (coefficient_norm_sqr - minimal_norm_sqr - difference_norm_sqr).abs(),
            orthogonality_residual: diff.inner(&minimal)?.modulus(),
            representation_residual: residual,
        })
    }
}

/// `Σ uᵢ·adjoint(uᵢ)`, filled on the upper triangle and mirrored so the
/// result is exactly self-adjoint.
fn outer_sum(vectors: &[QVector]) -> QMatrix {
    let n = vectors[0].len();
    let mut s = QMatrix::zeros(n, n);
    for r in 0..n {
        for c in r..n {
            let x: Quaternion = vectors.iter().map(|u| u[r] * u[c].conj()).sum();
            if r == c {
                s[(r, c)] = Quaternion::raw(x.real(), 0.0, 0.0, 0.0);
            } else {
                s[(r, c)] = x;
                s[(c, r)] = x.conj();
            }
        }
    }
    s
}

fn synthesize(vectors: &[QVector], c: &CoefficientSeq) -> Result<QVector> {
    if c.len() != vectors.len() {
        return Err(Error::DimensionMismatch { expected: vectors.len(), found: c.len() });
    }
    let mut out = QVector::zeros(vectors[0].len());
    for (u, &q) in vectors.iter().zip(c.entries()) {
        out.axpy_right(u, q);
    }
    Ok(out)
}

fn analyze(vectors: &[QVector], u: &QVector) -> Result<CoefficientSeq> {
    vectors
        .iter()
        .map(|v| v.inner(u))
        .collect::<Result<Vec<_>>>()
        .and_then(CoefficientSeq::new)
}

/// The three squared norms of the minimal-norm decomposition and the
/// residuals of the identities they satisfy.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NormIdentity {
    /// `‖c‖²`
    pub coefficient_norm_sqr: f64,
    /// `‖c̃‖²`
    pub minimal_norm_sqr: f64,
    /// `‖c̃ − c‖²`
    pub difference_norm_sqr: f64,
    /// `|‖c‖² − ‖c̃‖² − ‖c̃ − c‖²|`
    pub identity_residual: f64,
    /// `|⟨c − c̃|c̃⟩|`
    pub orthogonality_residual: f64,
    /// `‖T(c) − u‖`
    pub representation_residual: f64,
}

/// Outcome of checking the four equivalent alternate-dual conditions for a
/// frame `{uᵢ}` (synthesis `T`) and a candidate `{vᵢ}` (synthesis `U`).
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DualVerdict {
    /// (a) `max ‖u − Σ vᵢ⟨uᵢ|u⟩‖ / ‖u‖` over the probe set.
    pub reconstruction_residual: f64,
    /// (b) `‖T·U* − 𝕀‖`
    pub synthesis_residual: f64,
    /// (c) `‖U·T* − 𝕀‖`
    pub reverse_residual: f64,
    /// (d) `‖(T*·U)² − T*·U‖`
    pub idempotence_residual: f64,
    pub reconstruction_ok: bool,
    pub synthesis_ok: bool,
    pub reverse_ok: bool,
    pub idempotence_ok: bool,
    /// All four conditions hold.
    pub is_dual: bool,
    /// The four conditions agree. The equivalence assumes both families are
    /// frames; for a rank-deficient candidate (d) can hold alone.
    pub consistent: bool,
    pub candidate_is_frame: bool,
    pub tolerance: f64,
}

impl DualVerdict {
    pub fn conditions(&self) -> [bool; 4] {
        [self.reconstruction_ok, self.synthesis_ok, self.reverse_ok, self.idempotence_ok]
    }
}

fn check_same_shape(a: &Frame, b: &Frame) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), found: b.len() });
    }
    Ok(())
}

/// Evaluates each of the four alternate-dual conditions independently.
pub fn verify_alternate_dual(frame: &Frame, candidate: &Frame, opts: &CheckOptions) -> Result<DualVerdict> {
    check_same_shape(frame, candidate)?;
    let n = frame.dim();
    let t = frame.synthesis_matrix();
    let u = candidate.synthesis_matrix();
    let t_star = frame.analysis_matrix();
    let u_star = candidate.analysis_matrix();
    let id = QMatrix::identity(n);

    let mut reconstruction_residual = 0f64;
    for p in probe_vectors(n, opts.seed) {
        let coeffs = frame.analysis(&p)?;
        let back = candidate.synthesis(&coeffs)?;
        reconstruction_residual = reconstruction_residual.max(back.distance(&p)? / p.norm());
    }
    let synthesis_residual = (&(t * &u_star) - &id).residual_norm();
    let reverse_residual = (&(u * &t_star) - &id).residual_norm();
    let gram = &t_star * u;
    let idempotence_residual = (&(&gram * &gram) - &gram).residual_norm();

    let tol = opts.tolerance;
    let conditions = [
        reconstruction_residual <= tol,
        synthesis_residual <= tol,
        reverse_residual <= tol,
        idempotence_residual <= tol,
    ];
    Ok(DualVerdict {
        reconstruction_residual,
        synthesis_residual,
        reverse_residual,
        idempotence_residual,
        reconstruction_ok: conditions[0],
        synthesis_ok: conditions[1],
        reverse_ok: conditions[2],
        idempotence_ok: conditions[3],
        is_dual: conditions.iter().all(|&c| c),
        consistent: conditions.iter().all(|&c| c == conditions[0]),
        candidate_is_frame: candidate.is_frame(),
        tolerance: tol,
    })
}

/// Whether an alternate dual is itself a frame having the original family
/// as an alternate dual.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DualFrameVerdict {
    /// `candidate` is an alternate dual of `frame`.
    pub forward: DualVerdict,
    /// False when `forward` failed, in which case nothing else is claimed.
    pub precondition_met: bool,
    pub candidate_lower_bound: f64,
    pub candidate_is_frame: bool,
    /// `frame` is an alternate dual of `candidate`; only evaluated when the
    /// precondition holds.
    pub reverse: Option<DualVerdict>,
    /// Precondition met, candidate is a frame, and the reverse check passes.
    pub holds: bool,
}

pub fn dual_is_frame_check(frame: &Frame, candidate: &Frame, opts: &CheckOptions) -> Result<DualFrameVerdict> {
    let forward = verify_alternate_dual(frame, candidate, opts)?;
    let precondition_met = forward.is_dual;
    let reverse = if precondition_met { Some(verify_alternate_dual(candidate, frame, opts)?) } else { None };
    let candidate_is_frame = candidate.is_frame();
    Ok(DualFrameVerdict {
        forward,
        precondition_met,
        candidate_lower_bound: candidate.bounds().lower,
        candidate_is_frame,
        reverse,
        holds: precondition_met && candidate_is_frame && reverse.is_some_and(|r| r.is_dual),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::families::{duplicated_basis, orthonormal_basis, zero_padded_duals};
    use crate::Quaternion as Q;

    fn frame(v: Vec<QVector>) -> Frame {
        Frame::new(v).unwrap()
    }

    fn real(x: f64) -> Q {
        Q::from_real(x).unwrap()
    }

    #[test]
    fn synthesis_examples() {
        let onb = frame(orthonormal_basis(2).unwrap());
        let c = CoefficientSeq::new(vec![Q::I, Q::new(1., 0., 2., 0.).unwrap()]).unwrap();
        let expected = QVector::new(vec![Q::I, Q::new(1., 0., 2., 0.).unwrap()]).unwrap();
        assert_eq!(onb.synthesis(&c).unwrap(), expected);
        assert_eq!(onb.synthesis(&CoefficientSeq::zeros(2)).unwrap(), QVector::zeros(2));

        let dup = frame(duplicated_basis(2).unwrap());
        let c = CoefficientSeq::new(vec![Q::ONE, Q::ONE, Q::ZERO, Q::ZERO]).unwrap();
        assert_eq!(dup.synthesis(&c).unwrap(), QVector::basis(2, 0).scale(2.0));
        assert!(dup.synthesis(&CoefficientSeq::zeros(3)).is_err());
    }

    #[test]
    fn analysis_examples() {
        let onb = frame(orthonormal_basis(2).unwrap());
        assert_eq!(onb.analysis(&QVector::basis(2, 0)).unwrap().entries(), &[Q::ONE, Q::ZERO]);
        let dup = frame(duplicated_basis(2).unwrap());
        assert_eq!(dup.analysis(&QVector::basis(2, 0)).unwrap().entries(), &[Q::ONE, Q::ONE, Q::ZERO, Q::ZERO]);
        assert_eq!(dup.analysis(&QVector::zeros(2)).unwrap(), CoefficientSeq::zeros(4));
        assert!(dup.analysis(&QVector::zeros(3)).is_err());
    }

    #[test]
    fn frame_operator_examples() {
        assert_eq!(frame(orthonormal_basis(3).unwrap()).frame_operator(), &QMatrix::identity(3));
        assert_eq!(frame(duplicated_basis(4).unwrap()).frame_operator(), &QMatrix::identity(4).scale(2.0));
        let single = frame(vec![QVector::basis(2, 0)]);
        assert_eq!(single.frame_operator(), &QMatrix::from_real_diagonal(&[1.0, 0.0]).unwrap());
    }

    #[test]
    fn bounds_examples() {
        let b = frame(orthonormal_basis(3).unwrap()).bounds();
        assert_eq!((b.lower, b.upper, b.is_frame, b.is_parseval, b.is_tight), (1.0, 1.0, true, true, true));
        let b = frame(duplicated_basis(4).unwrap()).bounds();
        assert_eq!((b.lower, b.upper, b.is_frame, b.is_parseval, b.is_tight), (2.0, 2.0, true, false, true));
        let b = frame(vec![QVector::basis(2, 0)]).bounds();
        assert_eq!((b.lower, b.upper, b.is_frame, b.is_parseval, b.is_tight), (0.0, 1.0, false, false, false));
        assert!(b.is_bessel);
    }

    #[test]
    fn all_zero_family_is_not_tight() {
        let b = frame(vec![QVector::zeros(2), QVector::zeros(2)]).bounds();
        assert!(!b.is_frame && !b.is_tight && !b.is_parseval);
    }

    #[test]
    fn canonical_dual_examples() {
        let dup = frame(duplicated_basis(3).unwrap());
        let dual = dup.canonical_dual().unwrap();
        for (d, u) in dual.vectors().iter().zip(dup.vectors()) {
            assert_eq!(d, &u.scale(0.5));
        }
        let onb = frame(orthonormal_basis(2).unwrap());
        assert_eq!(onb.canonical_dual().unwrap().vectors(), onb.vectors());

        let two = frame(vec![QVector::new(vec![real(2.0)]).unwrap()]);
        assert_eq!(two.canonical_dual().unwrap().vectors()[0][0], real(0.5));

        let single = frame(vec![QVector::basis(2, 0)]);
        assert!(matches!(single.canonical_dual(), Err(Error::NotAFrame { .. })));
        assert!(matches!(single.minimal_norm_coefficients(&QVector::zeros(2)), Err(Error::NotAFrame { .. })));
    }

    #[test]
    fn alternate_dual_examples() {
        let opts = CheckOptions::default();
        let dup = frame(duplicated_basis(2).unwrap());
        let v = verify_alternate_dual(&dup, &dup.canonical_dual().unwrap(), &opts).unwrap();
        assert!(v.is_dual && v.consistent);
        let (pad_v, pad_w) = zero_padded_duals(2).unwrap();
        for pad in [pad_v, pad_w] {
            let v = verify_alternate_dual(&dup, &frame(pad), &opts).unwrap();
            assert!(v.is_dual && v.consistent, "{v:?}");
        }

        let onb = frame(orthonormal_basis(2).unwrap());
        let bad = frame(vec![QVector::basis(2, 0).scale(2.0), QVector::basis(2, 1)]);
        let v = verify_alternate_dual(&onb, &bad, &opts).unwrap();
        assert!(!v.is_dual && v.consistent);
        assert!((v.synthesis_residual - 1.0).abs() < 1e-14);
    }

    #[test]
    fn alternate_dual_shape_mismatch() {
        let a = frame(orthonormal_basis(2).unwrap());
        let b = frame(duplicated_basis(2).unwrap());
        assert!(matches!(
            verify_alternate_dual(&a, &b, &CheckOptions::default()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn dual_is_frame_examples() {
        let opts = CheckOptions::default();
        let dup = frame(duplicated_basis(2).unwrap());
        let (pad, _) = zero_padded_duals(2).unwrap();
        let r = dual_is_frame_check(&dup, &frame(pad), &opts).unwrap();
        assert!(r.precondition_met && r.candidate_is_frame && r.holds);

        let onb = frame(orthonormal_basis(2).unwrap());
        assert!(dual_is_frame_check(&onb, &onb, &opts).unwrap().holds);

        let perturbed = frame(vec![
            QVector::new(vec![real(1.0), real(0.1)]).unwrap(),
            QVector::basis(2, 1),
        ]);
        let r = dual_is_frame_check(&onb, &perturbed, &opts).unwrap();
        assert!(!r.precondition_met && r.reverse.is_none() && !r.holds);
    }

    #[test]
    fn minimal_norm_examples() {
        let pair = frame(vec![QVector::basis(1, 0), QVector::basis(1, 0)]);
        let c = pair.minimal_norm_coefficients(&QVector::basis(1, 0)).unwrap();
        assert_eq!(c.entries(), &[real(0.5), real(0.5)]);

        let dup = frame(duplicated_basis(2).unwrap());
        let c = dup.minimal_norm_coefficients(&QVector::basis(2, 0)).unwrap();
        assert_eq!(c.entries(), &[real(0.5), real(0.5), Q::ZERO, Q::ZERO]);

        let onb = frame(orthonormal_basis(2).unwrap());
        let u = QVector::new(vec![Q::new(1., 2., 3., 4.).unwrap(), Q::K]).unwrap();
        assert_eq!(onb.minimal_norm_coefficients(&u).unwrap(), onb.analysis(&u).unwrap());
    }

    #[test]
    fn norm_identity_by_hand() {
        let pair = frame(vec![QVector::basis(1, 0), QVector::basis(1, 0)]);
        let u = QVector::basis(1, 0);
        let c = CoefficientSeq::new(vec![Q::ONE, Q::ZERO]).unwrap();
        let r = pair.norm_identity_check(&u, &c, 1e-9).unwrap();
        assert_eq!((r.coefficient_norm_sqr, r.minimal_norm_sqr, r.difference_norm_sqr), (1.0, 0.5, 0.5));
        assert_eq!(r.identity_residual, 0.0);

        let minimal = pair.minimal_norm_coefficients(&u).unwrap();
        let r = pair.norm_identity_check(&u, &minimal, 1e-9).unwrap();
        assert_eq!(r.difference_norm_sqr, 0.0);
        assert_eq!(r.coefficient_norm_sqr, r.minimal_norm_sqr);

        let wrong = CoefficientSeq::new(vec![Q::ONE, Q::ONE]).unwrap();
        assert!(matches!(pair.norm_identity_check(&u, &wrong, 1e-9), Err(Error::NotARepresentation { .. })));
    }

    #[test]
    fn frame_construction_errors() {
        assert_eq!(Frame::new(Vec::new()).unwrap_err(), Error::EmptyInput);
        let ragged = vec![QVector::zeros(2), QVector::zeros(3)];
        assert!(matches!(Frame::new(ragged), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn probes_cover_basis_and_random_units() {
        let p = probe_vectors(3, 5);
        assert_eq!(p.len(), 3 + RANDOM_PROBES);
        assert_eq!(p[1], QVector::basis(3, 1));
        assert!(p[3..].iter().all(|v| (v.norm() - 1.0).abs() < 1e-14));
        assert_eq!(p, probe_vectors(3, 5));
    }
}
