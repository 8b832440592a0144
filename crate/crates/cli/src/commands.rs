use std::path::Path;

use qframe::families::{duplicated_basis, orthonormal_basis, random_frame, random_frame_size, random_quaternion, random_vector, seeded_rng};
use qframe::frames::{verify_alternate_dual, CheckOptions, DualVerdict};
use qframe::projection::{
    canonical_dual_commutation_check, gram_projection, project_frame, Subspace, KERNEL_THRESHOLD, TRACE_TOLERANCE,
};
use qframe::{CoefficientSeq, Frame};

use crate::error::CliError;
use crate::format::{read_frame_file, FrameFile};
use crate::report::ReportDocument;

/// Representations checked against the minimal-norm identity in `report`.
pub const SPOT_CHECKS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Options {
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Self { tolerance: qframe::DEFAULT_TOLERANCE, seed: 0 }
    }
}

impl Options {
    fn check_options(&self) -> CheckOptions {
        CheckOptions { tolerance: self.tolerance, seed: self.seed }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExampleKind {
    DuplicatedBasis,
    RandomFrame,
    Orthonormal,
}

fn load(path: &Path, opts: &Options) -> Result<(Frame, Vec<u8>), CliError> {
    let (file, bytes) = read_frame_file(path)?;
    let frame = Frame::with_threshold(file.to_vectors(), opts.tolerance)?;
    Ok((frame, bytes))
}

fn start(command: &str, frame: &Frame, bytes: &[u8]) -> ReportDocument {
    let b = frame.bounds();
    let mut doc = ReportDocument::new(command, frame.dim(), frame.len(), &b);
    doc.input("frame", bytes);
    doc.check_above("frame.lower_bound", b.lower, b.threshold * b.upper.max(1.0));
    doc
}

fn dual_checks(doc: &mut ReportDocument, prefix: &str, v: &DualVerdict) {
    doc.check(&format!("{prefix}.reconstruction"), v.reconstruction_residual, v.tolerance);
    doc.check(&format!("{prefix}.synthesis"), v.synthesis_residual, v.tolerance);
    doc.check(&format!("{prefix}.reverse"), v.reverse_residual, v.tolerance);
    doc.check(&format!("{prefix}.idempotence"), v.idempotence_residual, v.tolerance);
    doc.check_flag(&format!("{prefix}.consistent"), v.consistent);
}

pub fn bounds(path: &Path, opts: &Options) -> Result<ReportDocument, CliError> {
    let (frame, bytes) = load(path, opts)?;
    Ok(start("bounds", &frame, &bytes))
}

/// Bounds, canonical dual, dual verification, minimal-norm spot checks and
/// the coefficient-space projection. A non-frame stops after the bounds.
pub fn report(path: &Path, opts: &Options) -> Result<ReportDocument, CliError> {
    let (frame, bytes) = load(path, opts)?;
    let mut doc = start("report", &frame, &bytes);
    if !frame.is_frame() {
        return Ok(doc);
    }
    let tol = opts.tolerance;
    let dual = frame.canonical_dual()?;
    doc.canonical_dual = Some(FrameFile::from_frame(&dual, None).vectors);
    dual_checks(&mut doc, "canonical_dual", &verify_alternate_dual(&frame, &dual, &opts.check_options())?);

    let mut rng = seeded_rng(opts.seed);
    let kernel = frame.synthesis_matrix().kernel_basis(KERNEL_THRESHOLD);
    let (mut identity, mut orthogonality, mut representation, mut excess) = (0f64, 0f64, 0f64, 0f64);
    for _ in 0..SPOT_CHECKS {
        let u = random_vector(frame.dim(), &mut rng);
        let mut c = frame.minimal_norm_coefficients(&u)?.as_vector();
        for k in &kernel {
            c = &c + &k.mul_right(random_quaternion(&mut rng));
        }
        let c = CoefficientSeq::from(c);
        let id = frame.norm_identity_check(&u, &c, tol)?;
        let scale = id.coefficient_norm_sqr.max(1.0);
        identity = identity.max(id.identity_residual / scale);
        orthogonality = orthogonality.max(id.orthogonality_residual / scale);
        representation = representation.max(id.representation_residual / u.norm().max(1.0));
        excess = excess.max(id.minimal_norm_sqr.sqrt() - id.coefficient_norm_sqr.sqrt());
    }
    doc.check("norm_identity.pythagorean", identity, tol);
    doc.check("norm_identity.orthogonality", orthogonality, tol);
    doc.check("norm_identity.representation", representation, tol);
    doc.check("norm_identity.minimality", excess.max(0.0), tol);

    let q = gram_projection(&frame, &opts.check_options())?;
    doc.value("projection.kernel_dim", q.kernel_dim as f64);
    doc.value("projection.trace", q.trace);
    doc.check("projection.idempotency", q.idempotency_residual, tol);
    doc.check("projection.self_adjointness", q.self_adjointness_residual, tol);
    doc.check("projection.range", q.range_residual, tol);
    doc.check("projection.kernel", q.kernel_residual, tol);
    doc.check("projection.formula", q.formula_residual, tol);
    doc.check("projection.trace", (q.trace - frame.dim() as f64).abs(), TRACE_TOLERANCE);
    Ok(doc)
}

/// Writes the canonical dual to `out`. Fails with a verdict, and writes
/// nothing, when the input is not a frame.
pub fn dual(path: &Path, out: &Path, opts: &Options) -> Result<ReportDocument, CliError> {
    let (frame, bytes) = load(path, opts)?;
    let mut doc = start("dual", &frame, &bytes);
    if !frame.is_frame() {
        return Ok(doc);
    }
    let dual = frame.canonical_dual()?;
    dual_checks(&mut doc, "canonical_dual", &verify_alternate_dual(&frame, &dual, &opts.check_options())?);
    let label = Some(String::from("canonical dual"));
    write_file(out, &FrameFile::from_frame(&dual, label).emit())?;
    Ok(doc)
}

pub fn verify_dual(frame_path: &Path, candidate_path: &Path, opts: &Options) -> Result<ReportDocument, CliError> {
    let (frame, bytes) = load(frame_path, opts)?;
    let (candidate, candidate_bytes) = load(candidate_path, opts)?;
    if (candidate.dim(), candidate.len()) != (frame.dim(), frame.len()) {
        return Err(CliError::Usage(format!(
            "candidate has {} vectors in dimension {}, frame has {} in dimension {}",
            candidate.len(),
            candidate.dim(),
            frame.len(),
            frame.dim()
        )));
    }
    let mut doc = start("verify-dual", &frame, &bytes);
    doc.input("candidate", &candidate_bytes);
    doc.value("candidate.lower_bound", candidate.bounds().lower);
    doc.value("candidate.upper_bound", candidate.bounds().upper);
    dual_checks(&mut doc, "dual", &verify_alternate_dual(&frame, &candidate, &opts.check_options())?);
    Ok(doc)
}

/// Projects the frame onto the span of the subspace file's vectors and
/// checks the projected bounds, the projected dual, and that commutation of
/// `P` with `S` matches coincidence of the projected canonical duals.
pub fn project(frame_path: &Path, subspace_path: &Path, opts: &Options) -> Result<ReportDocument, CliError> {
    let (frame, bytes) = load(frame_path, opts)?;
    let (span, span_bytes) = read_frame_file(subspace_path)?;
    if span.dimension != frame.dim() {
        return Err(CliError::Usage(format!(
            "subspace lives in dimension {}, frame in dimension {}",
            span.dimension,
            frame.dim()
        )));
    }
    let subspace = Subspace::from_spanning(&span.to_vectors())?;
    let mut doc = start("project", &frame, &bytes);
    doc.input("subspace", &span_bytes);
    doc.value("subspace.dim", subspace.dim() as f64);
    if !frame.is_frame() {
        return Ok(doc);
    }
    let tol = opts.tolerance;
    let pf = project_frame(&frame, &subspace, &opts.check_options())?;
    let (a, p) = (pf.verdict.original, pf.verdict.projected);
    doc.value("projected.lower_bound", p.lower);
    doc.value("projected.upper_bound", p.upper);
    let escape = (a.lower - p.lower).max(p.upper - a.upper).max(0.0);
    doc.check("projected.bounds_within", escape, tol);
    dual_checks(&mut doc, "projected.dual", &pf.verdict.alternate_dual);

    let c = canonical_dual_commutation_check(&frame, &subspace, &opts.check_options())?;
    doc.value("commutation.commutator", c.commutator_residual);
    doc.value("commutation.dual_mismatch", c.dual_mismatch_residual);
    doc.value("commutation.commutes", if c.commutes { 1.0 } else { 0.0 });
    doc.check_flag("commutation.consistent", c.consistent);
    Ok(doc)
}

pub fn gen_example(kind: ExampleKind, n: usize, seed: u64) -> Result<FrameFile, CliError> {
    let (vectors, label) = match kind {
        ExampleKind::DuplicatedBasis => (duplicated_basis(n)?, format!("duplicated-basis n={n}")),
        ExampleKind::Orthonormal => (orthonormal_basis(n)?, format!("orthonormal n={n}")),
        ExampleKind::RandomFrame => {
            if n == 0 {
                return Err(qframe::Error::InvalidParameter("dimension must be at least 1").into());
            }
            let frame = random_frame(n, random_frame_size(n), &mut seeded_rng(seed))?;
            (frame.into_vectors(), format!("random-frame n={n} seed={seed}"))
        }
    };
    Ok(FrameFile::from_vectors(n, &vectors, Some(label)))
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source })
}
