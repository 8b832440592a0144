//! Pseudo-inverse of the synthesis operator, frames restricted to
//! subspaces, and the orthogonal projection `Q = T*S⁻¹T` of coefficient
//! space onto the range of the analysis operator.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::frames::{probe_vectors, verify_alternate_dual, CheckOptions, CoefficientSeq, DualVerdict, Frame, FrameBounds};
use crate::linalg::{QMatrix, QVector};
use crate::quaternion::Quaternion;

/// Spanning vectors shorter than this fraction of their original length
/// after orthogonalization are dropped as linearly dependent.
pub const DEPENDENCE_THRESHOLD: f64 = 1e-10;

/// Relative pivot threshold used when extracting `ker T`.
pub const KERNEL_THRESHOLD: f64 = 1e-10;

/// A subspace ℳ ⊆ ℍⁿ held through an orthonormal basis `{b₁, …, b_k}` and
/// its orthogonal projector `P = Σ bⱼ·bⱼ*`.
#[derive(Clone, Debug)]
pub struct Subspace {
    basis: Vec<QVector>,
    coordinates: QMatrix,
    projector: QMatrix,
}

impl Subspace {
    /// Orthonormalizes a spanning family with two Gram–Schmidt sweeps,
    /// normalizing on the right, and drops dependent vectors.
    pub fn from_spanning(vectors: &[QVector]) -> Result<Self> {
        let n = vectors.first().ok_or(Error::InvalidSubspace("no spanning vectors"))?.len();
        if vectors.iter().any(|v| v.len() != n) {
            return Err(Error::InvalidSubspace("spanning vectors differ in dimension"));
        }
        let mut basis: Vec<QVector> = Vec::new();
        for v in vectors {
            let original = v.norm();
            if original == 0.0 {
                continue;
            }
            let mut w = v.clone();
            for _ in 0..2 {
                for b in &basis {
                    let c = b.inner_unchecked(&w);
                    w = &w - &b.mul_right(c);
                }
            }
            let len = w.norm();
            if len > DEPENDENCE_THRESHOLD * original {
                basis.push(w.scale(1.0 / len));
            }
        }
        if basis.is_empty() {
            return Err(Error::InvalidSubspace("spanning vectors are all zero"));
        }
        Ok(Self::from_basis_unchecked(basis))
    }

    /// Accepts an already orthonormal basis, checked to within `tol`.
    pub fn from_orthonormal(basis: Vec<QVector>, tol: f64) -> Result<Self> {
        let n = basis.first().ok_or(Error::InvalidSubspace("empty basis"))?.len();
        if basis.iter().any(|v| v.len() != n) {
            return Err(Error::InvalidSubspace("basis vectors differ in dimension"));
        }
        if basis.len() > n {
            return Err(Error::InvalidSubspace("more basis vectors than the ambient dimension"));
        }
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let target = if i == j { Quaternion::ONE } else { Quaternion::ZERO };
                if (a.inner_unchecked(b) - target).modulus() > tol {
                    return Err(Error::InvalidSubspace("basis is not orthonormal"));
                }
            }
        }
        Ok(Self::from_basis_unchecked(basis))
    }

    /// ℍⁿ itself.
    pub fn full(n: usize) -> Result<Self> {
        Self::coordinate(n, &(0..n).collect::<Vec<_>>())
    }

    /// Span of the selected coordinate vectors.
    pub fn coordinate(n: usize, indices: &[usize]) -> Result<Self> {
        if n == 0 || indices.iter().any(|&k| k >= n) {
            return Err(Error::InvalidSubspace("coordinate index out of range"));
        }
        Self::from_orthonormal(indices.iter().map(|&k| QVector::basis(n, k)).collect(), 0.0)
    }

    fn from_basis_unchecked(basis: Vec<QVector>) -> Self {
        let coordinates = QMatrix::from_columns(&basis).expect("non-empty basis of equal lengths");
        let projector = &coordinates * &coordinates.adjoint();
        Self { basis, coordinates, projector }
    }

    pub fn ambient_dim(&self) -> usize {
        self.coordinates.rows()
    }

    /// `k = dim ℳ`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QVector] {
        &self.basis
    }

    /// `P`, the `n × n` orthogonal projector onto ℳ.
    pub fn projector(&self) -> &QMatrix {
        &self.projector
    }

    /// `B`, the `n × k` matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> &QMatrix {
        &self.coordinates
    }

    /// Coordinates `(⟨bⱼ|u⟩)ⱼ` of `P·u` in the basis.
    pub fn coordinates_of(&self, u: &QVector) -> Result<QVector> {
        self.coordinates.adjoint().apply(u)
    }

    /// `‖P² − P‖` and `‖P* − P‖`.
    pub fn projector_residuals(&self) -> (f64, f64) {
        let p = &self.projector;
        ((&(p * p) - p).residual_norm(), (&p.adjoint() - p).residual_norm())
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.ambient_dim() != n {
            return Err(Error::InvalidSubspace("subspace lives in a different ambient space"));
        }
        Ok(())
    }
}

/// `T†u = {⟨S⁻¹uᵢ|u⟩}`, the analysis coefficients of the canonical dual.
pub fn pseudo_inverse_apply(frame: &Frame, u: &QVector) -> Result<CoefficientSeq> {
    frame.minimal_norm_coefficients(u)
}

/// `T† = T̃* = T*·S⁻¹` as an `m × n` matrix.
pub fn pseudo_inverse_matrix(frame: &Frame) -> Result<QMatrix> {
    Ok(frame.dual_synthesis_matrix()?.adjoint())
}

/// Moore–Penrose identities for `T† = T̃*`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PseudoInverseVerdict {
    /// `‖T·T†·T − T‖`
    pub left_identity_residual: f64,
    /// `‖T†·T·T† − T†‖`
    pub right_identity_residual: f64,
    /// `‖T·T† − 𝕀‖`
    pub right_inverse_residual: f64,
    /// `‖(T†T)* − T†T‖`
    pub symmetry_residual: f64,
    /// Largest entrywise gap between `T†u` (matrix route) and the
    /// canonical-dual coefficients, over the probe set.
    pub coefficient_residual: f64,
    pub holds: bool,
    pub tolerance: f64,
}

pub fn pseudo_inverse_check(frame: &Frame, opts: &CheckOptions) -> Result<PseudoInverseVerdict> {
    let t = frame.synthesis_matrix();
    let t_dag = pseudo_inverse_matrix(frame)?;
    let t_dag_t = &t_dag * t;
    let left_identity_residual = (&(&(t * &t_dag) * t) - t).residual_norm();
    let right_identity_residual = (&(&t_dag_t * &t_dag) - &t_dag).residual_norm();
    let right_inverse_residual = (&(t * &t_dag) - &QMatrix::identity(frame.dim())).residual_norm();
    let symmetry_residual = (&t_dag_t.adjoint() - &t_dag_t).residual_norm();
    let mut coefficient_residual = 0f64;
    for p in probe_vectors(frame.dim(), opts.seed) {
        let by_matrix = t_dag.apply(&p)?;
        let by_dual = pseudo_inverse_apply(frame, &p)?;
        for (a, b) in by_matrix.iter().zip(by_dual.entries()) {
            coefficient_residual = coefficient_residual.max((*a - *b).modulus());
        }
    }
    let tol = opts.tolerance;
    Ok(PseudoInverseVerdict {
        left_identity_residual,
        right_identity_residual,
        right_inverse_residual,
        symmetry_residual,
        coefficient_residual,
        holds: [left_identity_residual, right_identity_residual, right_inverse_residual, symmetry_residual, coefficient_residual]
            .iter()
            .all(|&r| r <= tol),
        tolerance: tol,
    })
}

/// `range T* = range T̃*`, checked through `T̃*u = T*S⁻¹u` and mutual
/// projection of the two ranges.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RangeVerdict {
    /// `max ‖T̃*u − T*S⁻¹u‖` over probes.
    pub analysis_identity_residual: f64,
    /// `max ‖(𝕀 − Q)·T̃*u‖`: dual analysis images lie in `range T*`.
    pub dual_in_range_residual: f64,
    /// `max ‖(𝕀 − Q̃)·T*u‖`: analysis images lie in `range T̃*`.
    pub frame_in_dual_range_residual: f64,
    pub holds: bool,
    pub tolerance: f64,
}

pub fn range_equality_check(frame: &Frame, opts: &CheckOptions) -> Result<RangeVerdict> {
    let dual = frame.canonical_dual()?;
    let s_inv = frame.inverse_frame_operator()?;
    let q = gram_projector(frame)?;
    let q_dual = gram_projector(&dual)?;
    let m = frame.len();
    let id = QMatrix::identity(m);
    let off_q = &id - &q;
    let off_q_dual = &id - &q_dual;

    let (mut ident, mut dual_in, mut frame_in) = (0f64, 0f64, 0f64);
    for p in probe_vectors(frame.dim(), opts.seed) {
        let dual_coeffs = dual.analysis(&p)?.as_vector();
        let via_inverse = frame.analysis(&s_inv.apply(&p)?)?.as_vector();
        ident = ident.max(dual_coeffs.distance(&via_inverse)?);
        dual_in = dual_in.max(off_q.apply(&dual_coeffs)?.norm());
        frame_in = frame_in.max(off_q_dual.apply(&frame.analysis(&p)?.as_vector())?.norm());
    }
    let tol = opts.tolerance;
    Ok(RangeVerdict {
        analysis_identity_residual: ident,
        dual_in_range_residual: dual_in,
        frame_in_dual_range_residual: frame_in,
        holds: ident <= tol && dual_in <= tol && frame_in <= tol,
        tolerance: tol,
    })
}

/// `Q = T*·S⁻¹·T`.
pub fn gram_projector(frame: &Frame) -> Result<QMatrix> {
    let s_inv = frame.inverse_frame_operator()?;
    Ok(&(&frame.analysis_matrix() * s_inv) * frame.synthesis_matrix())
}

/// `Q[j,i] = ⟨uⱼ|S⁻¹uᵢ⟩`, the entries of `T*·T̃` read off the two families.
pub fn gram_projector_from_duals(frame: &Frame) -> Result<QMatrix> {
    let duals = frame.canonical_dual_vectors()?;
    let vectors = frame.vectors();
    Ok(QMatrix::from_fn(vectors.len(), duals.len(), |j, i| {
        vectors[j].inner_unchecked(&duals[i])
    }))
}

/// The projection `Q` of coefficient space onto `range T*` with residuals
/// for every property that characterizes it.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ProjectionReport {
    pub q: QMatrix,
    /// `‖Q² − Q‖`
    pub idempotency_residual: f64,
    /// `‖Q* − Q‖`
    pub self_adjointness_residual: f64,
    /// `max ‖Q·T*u − T*u‖` over probes.
    pub range_residual: f64,
    /// `max ‖Q·c‖ / ‖c‖` over a basis of `ker T`.
    pub kernel_residual: f64,
    /// `‖T*·T̃ − T*·S⁻¹·T‖`
    pub formula_residual: f64,
    /// Real part of `trace Q`; equals `n` for a frame.
    pub trace: f64,
    pub kernel_dim: usize,
    pub holds: bool,
    pub tolerance: f64,
}

/// Tolerance for `trace Q = n`.
pub const TRACE_TOLERANCE: f64 = 1e-7;

pub fn gram_projection(frame: &Frame, opts: &CheckOptions) -> Result<ProjectionReport> {
    let q = gram_projector(frame)?;
    let q_entries = gram_projector_from_duals(frame)?;
    let idempotency_residual = (&(&q * &q) - &q).residual_norm();
    let self_adjointness_residual = (&q.adjoint() - &q).residual_norm();
    let formula_residual = (&q_entries - &q).residual_norm();

    let mut range_residual = 0f64;
    for p in probe_vectors(frame.dim(), opts.seed) {
        let coeffs = frame.analysis(&p)?.as_vector();
        range_residual = range_residual.max(q.apply(&coeffs)?.distance(&coeffs)?);
    }

    let kernel = frame.synthesis_matrix().kernel_basis(KERNEL_THRESHOLD);
    let mut kernel_residual = 0f64;
    for c in &kernel {
        kernel_residual = kernel_residual.max(q.apply(c)?.norm() / c.norm());
    }

    let trace = q.trace().real();
    let tol = opts.tolerance;
    let holds = idempotency_residual <= tol
        && self_adjointness_residual <= tol
        && range_residual <= tol
        && kernel_residual <= tol
        && formula_residual <= tol
        && (trace - frame.dim() as f64).abs() <= TRACE_TOLERANCE;
    Ok(ProjectionReport {
        q,
        idempotency_residual,
        self_adjointness_residual,
        range_residual,
        kernel_residual,
        formula_residual,
        trace,
        kernel_dim: kernel.len(),
        holds,
        tolerance: tol,
    })
}

/// A frame pushed through the projector of a subspace.
#[derive(Clone, Debug)]
pub struct ProjectedFrame {
    /// `{P·uᵢ}` in ambient coordinates.
    pub ambient: Frame,
    /// The same family in the subspace's orthonormal coordinates (ℍᵏ).
    pub restricted: Frame,
    pub verdict: ProjectedFrameVerdict,
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ProjectedFrameVerdict {
    pub original: FrameBounds,
    pub projected: FrameBounds,
    /// `A − tol ≤ A_ℳ` and `B_ℳ ≤ B + tol`.
    pub bounds_within: bool,
    /// `{P·S⁻¹uᵢ}` as an alternate dual of `{P·uᵢ}` on ℳ.
    pub alternate_dual: DualVerdict,
    pub holds: bool,
}

pub fn project_frame(frame: &Frame, subspace: &Subspace, opts: &CheckOptions) -> Result<ProjectedFrame> {
    subspace.check_ambient(frame.dim())?;
    let duals = frame.canonical_dual_vectors()?;
    let p = subspace.projector();
    let ambient = Frame::new(frame.vectors().iter().map(|u| p * u).collect())?;
    let restricted = Frame::new(
        frame.vectors().iter().map(|u| subspace.coordinates_of(u)).collect::<Result<Vec<_>>>()?,
    )?;
    let restricted_duals = Frame::new(duals.iter().map(|v| subspace.coordinates_of(v)).collect::<Result<Vec<_>>>()?)?;

    let original = frame.bounds();
    let projected = restricted.bounds();
    let tol = opts.tolerance;
    let bounds_within = projected.lower >= original.lower - tol && projected.upper <= original.upper + tol;
    let alternate_dual = verify_alternate_dual(&restricted, &restricted_duals, opts)?;
    let holds = bounds_within && projected.is_frame && alternate_dual.is_dual;
    Ok(ProjectedFrame {
        ambient,
        restricted,
        verdict: ProjectedFrameVerdict { original, projected, bounds_within, alternate_dual, holds },
    })
}

/// The two sides of "`{P·S⁻¹uᵢ}` is the canonical dual of `{P·uᵢ}` iff
/// `P·S = S·P`", computed independently.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CommutationVerdict {
    /// `‖P·S − S·P‖`
    pub commutator_residual: f64,
    pub commutes: bool,
    /// `max ‖V⁻¹·P·uᵢ − P·S⁻¹·uᵢ‖` in subspace coordinates, where `V` is the
    /// frame operator of `{P·uᵢ}` on ℳ.
    pub dual_mismatch_residual: f64,
    pub dual_coincides: bool,
    /// Both sides agree.
    pub consistent: bool,
    pub tolerance: f64,
}

pub fn canonical_dual_commutation_check(
    frame: &Frame,
    subspace: &Subspace,
    opts: &CheckOptions,
) -> Result<CommutationVerdict> {
    subspace.check_ambient(frame.dim())?;
    let duals = frame.canonical_dual_vectors()?;
    let s = frame.frame_operator();
    let p = subspace.projector();
    let commutator_residual = (&(p * s) - &(s * p)).residual_norm();

    let restricted = Frame::new(
        frame.vectors().iter().map(|u| subspace.coordinates_of(u)).collect::<Result<Vec<_>>>()?,
    )?;
    let v_inv = restricted.inverse_frame_operator().map_err(|_| Error::SingularProjectedFrame)?;
    let mut dual_mismatch_residual = 0f64;
    for (u, d) in restricted.vectors().iter().zip(duals) {
        let canonical = v_inv.apply(u)?;
        let projected = subspace.coordinates_of(d)?;
        dual_mismatch_residual = dual_mismatch_residual.max(canonical.distance(&projected)?);
    }
    let tol = opts.tolerance;
    let commutes = commutator_residual <= tol;
    let dual_coincides = dual_mismatch_residual <= tol;
    Ok(CommutationVerdict {
        commutator_residual,
        commutes,
        dual_mismatch_residual,
        dual_coincides,
        consistent: commutes == dual_coincides,
        tolerance: tol,
    })
}
