use proptest::prelude::*;
use qframe::families::{random_frame, random_quaternion, random_unit_vector, random_vector, seeded_rng};
use qframe::frames::{dual_is_frame_check, verify_alternate_dual, CheckOptions};
use qframe::{CoefficientSeq, Frame, QMatrix, QVector};

fn frame_strategy() -> impl Strategy<Value = Frame> {
    (1usize..=5, 0usize..=4, any::<u64>()).prop_map(|(n, extra, seed)| random_frame(n, n + extra, &mut seeded_rng(seed)).unwrap())
}

/// A representation of `u` that differs from the minimal one by a random
/// element of `ker T`.
fn perturbed_representation(frame: &Frame, u: &QVector, seed: u64) -> CoefficientSeq {
    let mut rng = seeded_rng(seed);
    let kernel = frame.synthesis_matrix().kernel_basis(1e-10);
    let mut c = frame.minimal_norm_coefficients(u).unwrap().as_vector();
    for k in &kernel {
        c = &c + &k.mul_right(random_quaternion(&mut rng));
    }
    c.into()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn frame_inequality_holds_with_computed_bounds(frame in frame_strategy(), seed in any::<u64>()) {
        let b = frame.bounds();
        let mut rng = seeded_rng(seed);
        for _ in 0..100 {
            let u = random_unit_vector(frame.dim(), &mut rng);
            let energy = frame.analysis_energy(&u).unwrap();
            prop_assert!(b.lower - 1e-9 <= energy && energy <= b.upper + 1e-9);
        }
    }

    #[test]
    fn reconstruction_in_both_orders(frame in frame_strategy(), seed in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        for _ in 0..10 {
            let u = random_vector(frame.dim(), &mut rng);
            let scale = u.norm();
            prop_assert!(frame.reconstruct(&u).unwrap().distance(&u).unwrap() <= 1e-9 * scale);
            prop_assert!(frame.reconstruct_dual_order(&u).unwrap().distance(&u).unwrap() <= 1e-9 * scale);
        }
    }

    #[test]
    fn canonical_dual_has_inverse_operator_and_bounds(frame in frame_strategy()) {
        let dual = frame.canonical_dual().unwrap();
        let s_inv = frame.inverse_frame_operator().unwrap();
        let gap = (dual.frame_operator() - s_inv).residual_norm();
        prop_assert!(gap <= 1e-9 * s_inv.frobenius_norm().max(1.0));
        let (b, d) = (frame.bounds(), dual.bounds());
        prop_assert!((d.lower * b.upper - 1.0).abs() <= 1e-9);
        prop_assert!((d.upper * b.lower - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn frame_operator_is_self_adjoint_and_positive(frame in frame_strategy()) {
        let s = frame.frame_operator();
        prop_assert_eq!(&s.adjoint(), s);
        prop_assert!(s.hermitian_eigenvalues().unwrap()[0] >= -1e-12);
        let direct = frame.synthesis_matrix() * &frame.analysis_matrix();
        prop_assert!(direct.approx_eq(s, 1e-12));
    }

    #[test]
    fn minimal_norm_coefficients_are_minimal(frame in frame_strategy(), seed in any::<u64>()) {
        let u = random_vector(frame.dim(), &mut seeded_rng(seed));
        let minimal = frame.minimal_norm_coefficients(&u).unwrap();
        prop_assert!(frame.synthesis(&minimal).unwrap().distance(&u).unwrap() <= 1e-9 * u.norm().max(1.0));
        let c = perturbed_representation(&frame, &u, seed ^ 0x5eed);
        let id = frame.norm_identity_check(&u, &c, 1e-9).unwrap();
        prop_assert!(id.identity_residual <= 1e-8 * id.coefficient_norm_sqr.max(1.0));
        prop_assert!(id.orthogonality_residual <= 1e-8 * id.coefficient_norm_sqr.max(1.0));
        prop_assert!(minimal.norm() <= c.norm() * (1.0 + 1e-12));
    }

    #[test]
    fn synthesis_is_bounded_by_sqrt_upper_bound(frame in frame_strategy(), seed in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        let c: CoefficientSeq = random_vector(frame.len(), &mut rng).into();
        let image = frame.synthesis(&c).unwrap();
        prop_assert!(image.norm() <= frame.bounds().upper.sqrt() * c.norm() * (1.0 + 1e-9));
    }

    #[test]
    fn analysis_is_adjoint_of_synthesis(frame in frame_strategy(), seed in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        let u = random_vector(frame.dim(), &mut rng);
        let c: CoefficientSeq = random_vector(frame.len(), &mut rng).into();
        let lhs = frame.analysis(&u).unwrap().inner(&c).unwrap();
        let rhs = u.inner(&frame.synthesis(&c).unwrap()).unwrap();
        prop_assert!((lhs - rhs).modulus() <= 1e-12 * lhs.modulus().max(1.0) * 10.0);
    }

    #[test]
    fn dual_conditions_agree(frame in frame_strategy(), seed in any::<u64>(), corrupt in any::<bool>()) {
        let opts = CheckOptions::default();
        let mut duals = frame.canonical_dual_vectors().unwrap().to_vec();
        if corrupt {
            let mut rng = seeded_rng(seed);
            let i = (seed as usize) % duals.len();
            duals[i] = &duals[i] + &random_vector(frame.dim(), &mut rng).scale(0.1);
        }
        let candidate = Frame::new(duals).unwrap();
        prop_assume!(candidate.is_frame());
        let v = verify_alternate_dual(&frame, &candidate, &opts).unwrap();
        prop_assert!(v.consistent, "{:?}", v);
        prop_assert_eq!(v.is_dual, !corrupt);
        if !corrupt {
            let both = dual_is_frame_check(&frame, &candidate, &opts).unwrap();
            prop_assert!(both.holds);
        }
    }
}

#[test]
fn norm_identity_on_random_frame_in_h3() {
    let frame = random_frame(3, 5, &mut seeded_rng(2024)).unwrap();
    let u = random_vector(3, &mut seeded_rng(1));
    let kernel = frame.synthesis_matrix().kernel_basis(1e-10);
    assert_eq!(kernel.len(), 2);
    for k in &kernel {
        assert!(frame.synthesis_matrix().apply(k).unwrap().norm() <= 1e-12);
    }
    let c = perturbed_representation(&frame, &u, 99);
    let id = frame.norm_identity_check(&u, &c, 1e-9).unwrap();
    assert!(id.identity_residual <= 1e-9, "{id:?}");
    assert!(id.difference_norm_sqr > 1e-3);
}

#[test]
fn alternate_duals_beyond_the_canonical_one() {
    // U = S⁻¹T + K is a dual whenever T·K* = 0, i.e. the columns of K* lie in ker T.
    let frame = random_frame(2, 4, &mut seeded_rng(11)).unwrap();
    let kernel = frame.synthesis_matrix().kernel_basis(1e-10);
    let h = QMatrix::from_fn(2, 2, |r, c| qframe::Quaternion::new(r as f64, 1.0, c as f64, -0.5).unwrap());
    // K = H·[k₁ k₂]*, so K* = [k₁ k₂]·H*.
    let kmat = QMatrix::from_columns(&kernel).unwrap().adjoint();
    let k = &h * &kmat;
    let u = &frame.dual_synthesis_matrix().unwrap() + &k;
    let candidate = Frame::new(u.columns()).unwrap();
    let v = verify_alternate_dual(&frame, &candidate, &CheckOptions::default()).unwrap();
    assert!(v.is_dual && v.consistent, "{v:?}");
}
