mod common;

use common::*;
use oportho::linalg::spectral_norm;
use oportho::ortho::iso_check;
use oportho::positive::{
    accretive_check, accretive_iso_corollary, attainment_pairing_check, intersection_zero_check,
    intersection_zero_check_complex, intersection_zero_complex_decision, invertible_pair_impossibility,
    iso_attainment, kittaneh_bounds, max_min, positive_iso_check, positive_iso_witness, projection_propositions,
    psd_certify, square_sum_chain,
};
use oportho::random::rng_from_seed;
use oportho::verify::{iso_positive_pair, positive_definite, projection, psd};
use oportho::{Decision, Error, Field, Matrix, NormedElement, Tolerances, C64};
use proptest::prelude::*;

fn tol() -> Tolerances {
    Tolerances::default()
}

fn e(n: usize, i: usize) -> Vec<C64> {
    let mut v = vec![c(0.0, 0.0); n];
    v[i] = c(1.0, 0.0);
    v
}

fn unit_entry(n: usize, i: usize, j: usize, v: f64) -> Matrix {
    let mut m = Matrix::zeros(n, n, Field::Real);
    m.set(i, j, c(v, 0.0));
    m
}

fn rotation() -> Matrix {
    real(&[&[0.0, -1.0], &[1.0, 0.0]])
}

#[test]
fn psd_examples() {
    let cert = psd_certify(&Matrix::diag_real(&[4.0, 3.0]), &tol()).unwrap();
    assert!(cert.sqrt.approx_eq(&Matrix::diag_real(&[2.0, 3f64.sqrt()]), 1e-14));
    assert!(matches!(psd_certify(&Matrix::diag_real(&[1.0, -2.0]), &tol()), Err(Error::NotPsd { .. })));
    let g = oportho::random::gaussian_matrix(&mut rng_from_seed(1), 5, 5, Field::Complex);
    let gram = (&g.adjoint() * &g).hermitian_part();
    let cert = psd_certify(&gram, &tol()).unwrap();
    assert!((&cert.sqrt * &cert.sqrt).approx_eq(&gram, 1e-8));
}

#[test]
fn kittaneh_examples() {
    let k = kittaneh_bounds(&Matrix::diag_real(&[1.0, 0.0]), &Matrix::diag_real(&[0.0, 1.0]), &tol()).unwrap();
    for v in k.as_array() {
        assert!((v - 1.0).abs() < 1e-14);
    }
    let id = Matrix::identity(2, Field::Real);
    let k = kittaneh_bounds(&id, &id, &tol()).unwrap();
    let want = [0.0, 0.0, 1.0, 2.0, 2.0];
    for (v, w) in k.as_array().iter().zip(want) {
        assert!((v - w).abs() < 1e-14, "{:?}", k.as_array());
    }
}

#[test]
fn positive_iso_examples() {
    let (a, b) = (Matrix::diag_real(&[4.0, 3.0]), Matrix::diag_real(&[0.0, 1.0]));
    let r = positive_iso_check(&a, &b, &tol()).unwrap();
    assert!(r.holds());
    assert_eq!(r.evidence.quantity("max_norm"), Some(4.0));
    let id = Matrix::identity(2, Field::Real);
    assert!(positive_iso_check(&id, &id, &tol()).unwrap().fails());
}

#[test]
fn witness_examples() {
    let w = positive_iso_witness(&Matrix::diag_real(&[1.0, 0.0]), &Matrix::diag_real(&[0.0, 1.0]), &tol()).unwrap().unwrap();
    assert!((w[0].norm() - 1.0).abs() < 1e-12);
    let mm = max_min(&Matrix::diag_real(&[1.0, 0.0]), &Matrix::diag_real(&[0.0, 1.0]), &tol());
    assert!(mm.tie && mm.big_is_first);

    let w = positive_iso_witness(&Matrix::diag_real(&[4.0, 3.0]), &Matrix::diag_real(&[0.0, 1.0]), &tol()).unwrap().unwrap();
    assert!((w[0].norm() - 1.0).abs() < 1e-12);

    let id = Matrix::identity(2, Field::Real);
    assert_eq!(positive_iso_witness(&id, &id, &tol()), Ok(None));
}

#[test]
fn accretive_examples() {
    assert_eq!(accretive_check(&Matrix::identity(2, Field::Real), &tol()), Ok(true));
    assert_eq!(accretive_check(&rotation(), &tol()), Ok(true));
    assert_eq!(accretive_check(&Matrix::diag_real(&[1.0, -1.0]), &tol()), Ok(false));
}

#[test]
fn accretive_corollary_examples() {
    let r = accretive_iso_corollary(&Matrix::diag_real(&[1.0, 0.0]), &Matrix::diag_real(&[0.0, 1.0]), &tol()).unwrap();
    assert_eq!(r.decision, Decision::Holds);
    assert!(r.bj_ab.unwrap().holds());

    let r = accretive_iso_corollary(&Matrix::diag_real(&[4.0, 3.0]), &Matrix::diag_real(&[0.0, 1.0]), &tol()).unwrap();
    assert_eq!(r.decision, Decision::Holds);
    assert!(r.bj_ab.as_ref().is_some_and(|x| x.holds()) || r.bj_ba.as_ref().is_some_and(|x| x.holds()));
    assert!(r.witness_form.unwrap() < 1e-12);

    let id = Matrix::identity(2, Field::Real);
    assert_eq!(accretive_iso_corollary(&id, &id, &tol()).unwrap().decision, Decision::Inconclusive);

    assert!(matches!(accretive_iso_corollary(&Matrix::diag_real(&[1.0, -1.0]), &id, &tol()), Err(Error::PreconditionUnmet(_))));
}

#[test]
fn invertible_examples() {
    let id = Matrix::identity(2, Field::Real);
    let r = invertible_pair_impossibility(&id, &id.scale_real(2.0), &tol()).unwrap();
    assert!(r.iso.fails() && r.bj.fails());
    let (a, b) = (Matrix::diag_real(&[2.0, 1.0]), Matrix::diag_real(&[1.0, 2.0]));
    let r = invertible_pair_impossibility(&a, &b, &tol()).unwrap();
    assert!(r.iso.fails() && r.bj.fails());
    let (ea, eb) = (NormedElement::operator(a), NormedElement::operator(b));
    let grid = (0..=8000).map(|i| ea.norm_along(&eb, c(-4.0 + 1e-3 * i as f64, 0.0))).fold(f64::INFINITY, f64::min);
    assert!(grid < 2.0 - 0.1);
    assert!(matches!(
        invertible_pair_impossibility(&Matrix::diag_real(&[1.0, 0.0]), &id, &tol()),
        Err(Error::PreconditionUnmet(_))
    ));
}

#[test]
fn projection_examples() {
    let r = projection_propositions(&Matrix::diag_real(&[1.0, 0.0]), &Matrix::diag_real(&[0.0, 1.0]), &tol()).unwrap();
    assert!(r.iso.holds() && r.product_norm == Some(0.0));
    assert!(r.bj_pq.unwrap().holds() && r.bj_qp.unwrap().holds());

    let (p, q) = (Matrix::diag_real(&[1.0, 1.0, 0.0]), Matrix::diag_real(&[0.0, 1.0, 1.0]));
    let r = projection_propositions(&p, &q, &tol()).unwrap();
    assert!(r.iso.fails());
    assert!(r.product_norm.unwrap() > 0.5);
    assert_eq!(spectral_norm(&(&p + &q)), 2.0);
    assert_eq!(spectral_norm(&(&p - &q)), 1.0);
    assert!(r.bj_pq.unwrap().holds() && r.bj_qp.unwrap().holds());

    let r = projection_propositions(&Matrix::diag_real(&[1.0, 0.0, 0.0]), &Matrix::identity(3, Field::Real), &tol()).unwrap();
    assert!(r.identity_branch && r.iso.fails());

    assert!(matches!(
        projection_propositions(&Matrix::diag_real(&[2.0, 0.0]), &Matrix::diag_real(&[0.0, 1.0]), &tol()),
        Err(Error::NotProjection { .. })
    ));
}

#[test]
fn square_sum_claim_needs_more_than_unit_norms() {
    let a = &unit_entry(4, 0, 0, 0.8) + &unit_entry(4, 2, 2, 1.0);
    let b = &unit_entry(4, 1, 0, 0.9) + &unit_entry(4, 3, 3, 1.0);
    let r = square_sum_chain(&a, &b, &e(4, 0), &tol()).unwrap();
    assert!((r.lower - 2.0).abs() < 1e-12);
    assert!((r.middle - 2.9).abs() < 1e-12);
    assert!((r.upper - 4.0).abs() < 1e-12);
    assert_eq!(r.unit_norm_claim, Some(false));

    let r = square_sum_chain(&Matrix::identity(2, Field::Real), &rotation(), &e(2, 0), &tol()).unwrap();
    assert_eq!(r.unit_norm_claim, Some(true));
    assert!((r.middle - 4.0).abs() < 1e-12);

    assert!(matches!(
        square_sum_chain(&Matrix::identity(2, Field::Real), &Matrix::diag_real(&[1.0, -1.0]), &e(2, 0), &tol()),
        Err(Error::PreconditionUnmet(_))
    ));
}

#[test]
fn attainment_pairing_examples() {
    let r = attainment_pairing_check(&Matrix::diag_real(&[4.0, 3.0]), &Matrix::diag_real(&[0.0, 1.0]), &tol()).unwrap();
    assert!(r.sufficient_condition && r.iso.holds());
    assert!(r.plus_range.0.abs() < 1e-12 && (r.plus_range.1 - 3.0).abs() < 1e-12);

    let id = Matrix::identity(2, Field::Real);
    let r = attainment_pairing_check(&id, &id.scale_real(0.5), &tol()).unwrap();
    assert!(!r.sufficient_condition && r.iso.fails());
}

#[test]
fn intersection_zero_examples() {
    let id = Matrix::identity(2, Field::Real);
    let r = intersection_zero_check(&id, &rotation(), &tol()).unwrap();
    assert!(r.attainment.dims_exceed);
    assert_eq!(r.zero_exists, Some(true));
    assert!(r.iso.holds());
    assert_eq!(r.chain.unwrap().unit_norm_claim, Some(true));

    let r = intersection_zero_check(&id, &id.scale_real(0.5), &tol()).unwrap();
    assert_eq!(r.zero_exists, Some(false));
    assert!(r.iso.fails());

    let r = intersection_zero_check(&id, &Matrix::diag_real(&[1.0, -1.0]), &tol()).unwrap();
    assert_eq!(r.zero_exists, None);

    let att = iso_attainment(&id, &rotation(), &tol()).unwrap();
    assert_eq!(att.common.dim(), 2);
}

#[test]
fn complex_intersection_runs_both_halves() {
    let id = Matrix::identity(2, Field::Complex);
    let rot = rotation().to_complex();
    let pair = intersection_zero_check_complex(&id, &rot, &tol()).unwrap();
    assert_eq!(pair.0.zero_exists, Some(true));
    assert_eq!(pair.1.zero_exists, None);
    assert_eq!(intersection_zero_complex_decision(&pair), None);

    let half = id.scale_real(0.5);
    let pair = intersection_zero_check_complex(&id, &half, &tol()).unwrap();
    assert_eq!(intersection_zero_complex_decision(&pair), Some(false));
    assert!(iso_check(&NormedElement::operator(id), &NormedElement::operator(half), &tol()).unwrap().fails());
}

fn psd_pair() -> impl Strategy<Value = (Matrix, Matrix)> {
    (any::<u64>(), 2usize..9, field_strategy(), any::<bool>()).prop_map(|(seed, n, f, planted)| {
        let rng = &mut rng_from_seed(seed);
        if planted {
            iso_positive_pair(rng, n, f)
        } else {
            (psd(rng, n, f), psd(rng, n, f))
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn kittaneh_chain_against_power_norms((a, b) in psd_pair()) {
        let k = kittaneh_bounds(&a, &b, &tol()).unwrap();
        prop_assert!(close(k.diff, power_norm(&(&a - &b)), 1e-7));
        prop_assert!(close(k.sum, power_norm(&(&a + &b)), 1e-7));
        prop_assert!(close(k.mid, power_norm(&a).max(power_norm(&b)), 1e-7));
        let v = k.as_array();
        for i in 0..4 {
            prop_assert!(v[i] <= v[i + 1] + 1e-9 * k.mid);
        }
    }

    #[test]
    fn positive_iso_matches_generic_and_witness((a, b) in psd_pair()) {
        let r = positive_iso_check(&a, &b, &tol()).unwrap();
        let g = iso_check(&NormedElement::operator(a.clone()), &NormedElement::operator(b.clone()), &tol()).unwrap();
        prop_assert!(!r.decision.contradicts(g.decision));
        let w = positive_iso_witness(&a, &b, &tol()).unwrap();
        if r.holds() {
            prop_assert!(w.is_some());
        }
        if r.fails() {
            prop_assert!(w.is_none());
        }
    }

    #[test]
    fn projections_iso_iff_product_zero(seed in any::<u64>(), n in 3usize..9, f in field_strategy(), orth in any::<bool>()) {
        let rng = &mut rng_from_seed(seed);
        let r1 = oportho::random::int_in(rng, 1, n - 1);
        let (p, q) = if orth {
            let r2 = oportho::random::int_in(rng, 1, n - r1);
            let vs = oportho::random::orthonormal_vectors(rng, n, r1 + r2, f);
            let span = |vs: &[Vec<C64>]| oportho::SubspaceBasis::span(n, vs, f).projector(f);
            (span(&vs[..r1]), span(&vs[r1..]))
        } else {
            let r2 = oportho::random::int_in(rng, 1, n - 1);
            (projection(rng, n, r1, f), projection(rng, n, r2, f))
        };
        let r = projection_propositions(&p, &q, &tol()).unwrap();
        let zero = spectral_norm(&(&p * &q)) <= 1e-9;
        prop_assert_eq!(zero, orth);
        if r.iso.decision != Decision::Inconclusive {
            prop_assert_eq!(r.iso.holds(), zero);
        }
        if zero {
            prop_assert!(r.bj_pq.unwrap().holds() && r.bj_qp.unwrap().holds());
        }
    }

    #[test]
    fn positive_definite_pairs_are_never_orthogonal(seed in any::<u64>(), n in 2usize..7, f in field_strategy()) {
        let rng = &mut rng_from_seed(seed);
        let (a, b) = (positive_definite(rng, n, f), positive_definite(rng, n, f));
        let r = invertible_pair_impossibility(&a, &b, &tol()).unwrap();
        prop_assert!(r.iso.fails() && r.bj.fails());
        prop_assert!(r.bj_probe < spectral_norm(&a));
    }
}
