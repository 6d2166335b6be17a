mod common;

use common::*;
use oportho::hilbert::disjoint_support;
use oportho::linalg::{hermitian_eigen, spectral_norm};
use oportho::positive::projection_residual;
use oportho::verify::{
    generate, instance_for, replay, reproduce_examples, run_suite, thm34_gap, thm34_gaps, FieldChoice, Generated,
    Instance, Kind, Suite, SuiteConfig, TrialOutcome, THM34_SIZES,
};
use oportho::{Error, Field, Matrix, NormedElement, Tolerances};
use proptest::prelude::*;

#[test]
fn kind_names_round_trip() {
    for k in [
        Kind::Dense,
        Kind::Psd,
        Kind::PositiveDefinite,
        Kind::Projection,
        Kind::NestedProjections,
        Kind::DisjointSupportPair,
        Kind::BjOrthogonalPair,
        Kind::Thm34Truncation(7),
    ] {
        assert_eq!(k.name().parse::<Kind>(), Ok(k));
    }
    assert_eq!("thm34-truncation:12".parse::<Kind>(), Ok(Kind::Thm34Truncation(12)));
    for bad in ["", "dense ", "thm34-truncation", "thm34-truncation(x)", "thm34-truncation(1)", "hankel"] {
        assert_eq!(bad.parse::<Kind>(), Err(Error::BadKind(bad.to_string())));
    }
}

#[test]
fn suite_names_round_trip() {
    for s in Suite::ALL {
        assert_eq!(s.name().parse::<Suite>(), Ok(s));
    }
    assert_eq!("nosuch".parse::<Suite>(), Err(Error::BadSuite("nosuch".into())));
    assert!("neither".parse::<FieldChoice>().is_err());
}

#[test]
fn generators_are_deterministic_and_seed_sensitive() {
    for k in [Kind::Dense, Kind::Psd, Kind::Projection, Kind::BjOrthogonalPair] {
        assert_eq!(generate(k, 4, Field::Complex, 11).unwrap(), generate(k, 4, Field::Complex, 11).unwrap());
        assert_ne!(generate(k, 4, Field::Complex, 11).unwrap(), generate(k, 4, Field::Complex, 12).unwrap());
    }
    assert!(matches!(generate(Kind::Dense, 0, Field::Real, 0), Err(Error::InvalidDimensions { .. })));
}

#[test]
fn truncation_generator() {
    let Generated::Pair(t, a) = generate(Kind::Thm34Truncation(4), 99, Field::Real, 0).unwrap() else {
        panic!("pair expected");
    };
    assert!(t.approx_eq(&Matrix::diag_real(&[0.5, 0.5, 2.0 / 3.0, 0.75]), 0.0));
    assert!(a.approx_eq(&Matrix::diag_real(&[1.0, 0.5, 1.0 / 3.0, 0.25]), 0.0));
}

#[test]
fn gap_closed_form_matches_minimization() {
    let gaps = thm34_gaps(&Tolerances::default()).unwrap();
    assert_eq!(gaps.iter().map(|g| g.0).collect::<Vec<_>>(), THM34_SIZES.to_vec());
    for (n, d) in gaps {
        assert!((d - thm34_gap(n)).abs() < 1e-9, "n = {n}: {d} vs {}", thm34_gap(n));
    }
    assert_eq!(thm34_gap(4), 0.25);
}

#[test]
fn reproduced_rows_are_within_tolerance() {
    let rows = reproduce_examples().unwrap();
    for id in ["example-4.3", "example-5.5", "example-5.6", "planes", "remark-3.7", "thm-3.4"] {
        assert!(rows.iter().any(|r| r.id == id), "{id}");
    }
    for r in &rows {
        assert!(r.ok(), "{} {}: expected {} computed {}", r.id, r.quantity, r.expected, r.computed);
    }
}

#[test]
fn schedule_alternates_fields_then_dims() {
    let cfg = SuiteConfig::new(Suite::Prop41, 8, vec![2, 3], FieldChoice::Both, 0);
    let got: Vec<_> = (0..5).map(|i| cfg.schedule(i)).collect();
    assert_eq!(
        got,
        vec![(2, Field::Real), (2, Field::Complex), (3, Field::Real), (3, Field::Complex), (2, Field::Real)]
    );
    let si = SuiteConfig::new(Suite::SiBj, 8, vec![2, 3], FieldChoice::Complex, 0);
    assert_eq!(si.schedule(1), (3, Field::Real));
}

#[test]
fn config_validation() {
    assert!(SuiteConfig::new(Suite::Prop41, 0, vec![2], FieldChoice::Real, 0).validate().is_err());
    assert!(SuiteConfig::new(Suite::Prop41, 1, vec![], FieldChoice::Real, 0).validate().is_err());
    assert!(SuiteConfig::new(Suite::Prop41, 1, vec![1], FieldChoice::Real, 0).validate().is_err());
    assert!(SuiteConfig::new(Suite::Prop41, 1, vec![65], FieldChoice::Real, 0).validate().is_err());
    assert!(run_suite(&SuiteConfig::new(Suite::Prop41, 1, vec![2, 64], FieldChoice::Real, 0)).is_ok());
}

#[test]
fn every_suite_runs_clean_on_a_small_schedule() {
    for s in Suite::ALL {
        let dims = if s == Suite::Projections { vec![3, 4, 5] } else { vec![2, 3, 4] };
        let r = run_suite(&SuiteConfig::new(s, 24, dims, FieldChoice::Both, 5)).unwrap();
        assert_eq!(r.failed, 0, "{s}: {:?}", r.failures.first());
        assert_eq!(r.passed + r.inconclusive, 24);
    }
}

#[test]
fn repeated_runs_are_identical() {
    for s in Suite::ALL {
        let cfg = SuiteConfig::new(s, 6, vec![3, 4], FieldChoice::Both, 77);
        assert_eq!(run_suite(&cfg).unwrap(), run_suite(&cfg).unwrap(), "{s}");
    }
}

#[test]
fn replay_reproduces_recorded_trials() {
    let tol = Tolerances::default();
    for s in Suite::ALL {
        let inst = instance_for(s, 5, 3, Field::Complex, 40);
        assert_eq!(inst, instance_for(s, 5, 3, Field::Complex, 40));
        assert!(!matches!(replay(s, &inst, &tol), TrialOutcome::Failed(_)), "{s}");
    }
}

#[test]
fn replay_flags_a_fabricated_failure() {
    let tol = Tolerances::default();
    let id = NormedElement::operator(Matrix::identity(3, Field::Real));
    let inst = Instance::new("fabricated", 0, vec![id.clone(), id.clone()]);
    assert!(matches!(replay(Suite::Prop41, &inst, &tol), TrialOutcome::Failed(_)));
    let lonely = Instance::new("fabricated", 0, vec![id]);
    assert!(matches!(replay(Suite::Kittaneh, &lonely, &tol), TrialOutcome::Failed(_)));
    let not_psd = Instance::new(
        "fabricated",
        0,
        vec![NormedElement::operator(Matrix::diag_real(&[1.0, -1.0])), NormedElement::operator(Matrix::identity(2, Field::Real))],
    );
    assert!(matches!(replay(Suite::Kittaneh, &not_psd, &tol), TrialOutcome::Failed(_)));
}

#[test]
fn si_bj_opens_with_the_two_examples() {
    let a = instance_for(Suite::SiBj, 0, 5, Field::Real, 0);
    let b = instance_for(Suite::SiBj, 1, 5, Field::Real, 0);
    assert_eq!(a.construction, "example-5.5");
    assert_eq!(b.construction, "example-5.6");
    assert_eq!(instance_for(Suite::SiBj, 2, 5, Field::Real, 0).construction, "disjoint-support-pair");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_objects_have_their_structure(seed in any::<u64>(), n in 2usize..8, f in field_strategy()) {
        let tol = Tolerances::default();
        let Generated::Single(p) = generate(Kind::Psd, n, f, seed).unwrap() else { unreachable!() };
        prop_assert!(hermitian_eigen(&p).unwrap().min() >= -1e-9 * spectral_norm(&p));
        let Generated::Single(d) = generate(Kind::PositiveDefinite, n, f, seed).unwrap() else { unreachable!() };
        prop_assert!(hermitian_eigen(&d).unwrap().min() > 0.05 * spectral_norm(&d));
        let Generated::Single(q) = generate(Kind::Projection, n, f, seed).unwrap() else { unreachable!() };
        prop_assert!(projection_residual(&q) <= 1e-9);
        let Generated::Pair(big, small) = generate(Kind::NestedProjections, n, f, seed).unwrap() else { unreachable!() };
        prop_assert!((&big * &small).approx_eq(&small, 1e-12));
        let Generated::Pair(a, b) = generate(Kind::DisjointSupportPair, n, f, seed).unwrap() else { unreachable!() };
        prop_assert!(disjoint_support(&a, &b, &tol).unwrap());
        for m in [&p, &d, &q, &a, &b] {
            prop_assert_eq!(m.field(), f);
            prop_assert_eq!(m.shape(), (n, n));
        }
    }

    #[test]
    fn planted_pairs_are_orthogonal(seed in any::<u64>(), n in 2usize..8, f in field_strategy()) {
        let Generated::Pair(t, a) = generate(Kind::BjOrthogonalPair, n, f, seed).unwrap() else { unreachable!() };
        let (r, w) = oportho::hilbert::bj_spectral(&t, &a, &Tolerances::default()).unwrap();
        prop_assert!(r.holds() && w.is_some());
    }
}
