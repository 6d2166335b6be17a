mod common;

use common::*;
use oportho::ortho::{
    bj_check, bj_from_si, iso_check, iso_from_double_bj, roberts_check, roberts_check_with_probes, si_check,
    xplus_xminus, Confidence,
};
use oportho::random::rng_from_seed;
use oportho::verify::{disjoint_pair, planted_bj};
use oportho::{Decision, Error, Field, Matrix, NormDescriptor, NormedElement, Tolerances, C64};
use proptest::prelude::*;

fn op(m: Matrix) -> NormedElement {
    NormedElement::operator(m)
}

fn vec_p(xs: &[f64], p: f64) -> NormedElement {
    NormedElement::new(Matrix::column_real(xs), NormDescriptor::VectorP(p)).unwrap()
}

fn s1(m: Matrix) -> NormedElement {
    NormedElement::new(m, NormDescriptor::SchattenP(1.0)).unwrap()
}

fn trisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    for _ in 0..80 {
        let a = lo + (hi - lo) / 3.0;
        let b = hi - (hi - lo) / 3.0;
        if f(a) <= f(b) {
            hi = b;
        } else {
            lo = a;
        }
    }
    let t = 0.5 * (lo + hi);
    (t, f(t))
}

/// min over λ of ‖x + λy‖ by a dense grid followed by trisection around the best node.
fn grid_min(x: &NormedElement, y: &NormedElement, complex: bool) -> f64 {
    let f0 = x.norm();
    let ny = y.norm();
    if ny == 0.0 {
        return f0;
    }
    let r = 2.0 * f0 / ny;
    let f = |a: f64, b: f64| x.norm_along(y, C64::new(a, b));
    if !complex {
        let n = 30_000;
        let h = 2.0 * r / n as f64;
        let best = (0..=n).map(|i| -r + h * i as f64).min_by(|a, b| f(*a, 0.0).total_cmp(&f(*b, 0.0))).unwrap();
        return trisect(|t| f(t, 0.0), best - h, best + h).1.min(f0);
    }
    let n = 120;
    let h = 2.0 * r / n as f64;
    let mut best = (0.0, 0.0, f0);
    for i in 0..=n {
        for j in 0..=n {
            let (a, b) = (-r + h * i as f64, -r + h * j as f64);
            let v = f(a, b);
            if v < best.2 {
                best = (a, b, v);
            }
        }
    }
    let inner = |a: f64| trisect(|b| f(a, b), best.1 - 3.0 * h, best.1 + 3.0 * h).1;
    trisect(inner, best.0 - 3.0 * h, best.0 + 3.0 * h).1.min(f0)
}

fn oracle_decision(x: &NormedElement, y: &NormedElement, tol: &Tolerances) -> Decision {
    let complex = x.field().join(y.field()) == Field::Complex;
    let f0 = x.norm();
    oportho::ortho::classify(grid_min(x, y, complex) - f0, tol.eq_tol * f0)
}

#[test]
fn bj_disjoint_diagonals_hold() {
    let r = bj_check(&op(Matrix::diag_real(&[1.0, 0.0])), &op(Matrix::diag_real(&[0.0, 1.0])), &Tolerances::default()).unwrap();
    assert_eq!(r.decision, Decision::Holds);
}

#[test]
fn bj_identity_against_itself_fails_at_minus_one() {
    let id = op(Matrix::identity(3, Field::Real));
    let r = bj_check(&id, &id, &Tolerances::default()).unwrap();
    assert_eq!(r.decision, Decision::Fails);
    assert!((r.evidence.lambda.unwrap().re + 1.0).abs() < 1e-6);
    assert!(r.evidence.value.unwrap() < 1e-6);
}

#[test]
fn bj_truncation_fails_below_three_quarters() {
    let t = op(Matrix::diag_real(&[0.5, 0.5, 2.0 / 3.0, 0.75]));
    let a = op(Matrix::diag_real(&[1.0, 0.5, 1.0 / 3.0, 0.25]));
    let r = bj_check(&t, &a, &Tolerances::default()).unwrap();
    let oracle = grid_min(&t, &a, false);
    assert_eq!(r.decision, Decision::Fails);
    assert!(r.evidence.value.unwrap() < 0.75);
    assert!((r.evidence.value.unwrap() - oracle).abs() < 1e-9, "{:?} vs {oracle}", r.evidence.value);
    assert!((oracle - 0.5).abs() < 1e-9);
}

#[test]
fn bj_zero_direction_is_trivial() {
    let x = op(Matrix::identity(2, Field::Real));
    let r = bj_check(&x, &op(Matrix::zeros(2, 2, Field::Real)), &Tolerances::default()).unwrap();
    assert!(r.holds() && r.trivial && r.margin == 0.0);
}

#[test]
fn mismatched_operands_are_rejected() {
    let tol = Tolerances::default();
    let x = op(Matrix::identity(2, Field::Real));
    assert!(matches!(bj_check(&x, &op(Matrix::identity(3, Field::Real)), &tol), Err(Error::ShapeMismatch { .. })));
    assert_eq!(bj_check(&x, &s1(Matrix::identity(2, Field::Real)), &tol).unwrap_err(), Error::NormMismatch);
}

#[test]
fn xplus_xminus_examples() {
    let tol = Tolerances::default();
    let r = xplus_xminus(&vec_p(&[1.0, 0.0], 2.0), &vec_p(&[0.0, 1.0], 2.0), &tol).unwrap();
    assert!(r.plus.holds() && r.minus.holds() && r.r_orthogonal());

    let r = xplus_xminus(&vec_p(&[1.0, 0.0], 2.0), &vec_p(&[1.0, 0.0], 2.0), &tol).unwrap();
    assert!(r.plus.holds());
    assert!(r.minus.fails());
    assert!((r.minus.evidence.lambda.unwrap().re + 1.0).abs() < 1e-6);

    let x = vec_p(&[1.0, 1.0], 1.0);
    let y = vec_p(&[1.0, -1.0], 1.0);
    let r = xplus_xminus(&x, &y, &tol).unwrap();
    assert!(r.r_orthogonal());
    let grid = (0..=8000).map(|i| x.norm_along(&y, c(-4.0 + 1e-3 * i as f64, 0.0))).fold(f64::INFINITY, f64::min);
    assert!(grid >= 2.0 - 1e-12);

    let z = NormedElement::operator(Matrix::identity(2, Field::Complex));
    assert_eq!(xplus_xminus(&z, &z, &tol).unwrap_err(), Error::ComplexFieldUnsupported);
}

#[test]
fn iso_examples() {
    let tol = Tolerances::default();
    let r = iso_check(&op(Matrix::diag_real(&[4.0, 3.0])), &op(Matrix::diag_real(&[0.0, 1.0])), &tol).unwrap();
    assert!(r.holds());
    assert_eq!(r.evidence.quantity("norm_plus"), Some(4.0));
    assert_eq!(r.evidence.quantity("norm_minus"), Some(4.0));

    let r = iso_check(&s1(Matrix::diag_real(&[1.0, -2.0])), &s1(Matrix::identity(2, Field::Real)), &tol).unwrap();
    assert!(r.holds());
    assert_eq!(r.evidence.quantity("norm_plus"), Some(3.0));

    let r = iso_check(&op(Matrix::identity(2, Field::Real)), &op(Matrix::zeros(2, 2, Field::Real)), &tol).unwrap();
    assert!(r.holds() && r.trivial);
}

#[test]
fn complex_iso_needs_the_imaginary_pair() {
    let x = NormedElement::new(Matrix::column(&[c(1.0, 0.0), c(0.6, 0.0)], Field::Complex), NormDescriptor::VectorP(2.0)).unwrap();
    let y = NormedElement::new(Matrix::column(&[c(0.0, 0.0), c(0.0, 0.6)], Field::Complex), NormDescriptor::VectorP(2.0)).unwrap();
    let r = iso_check(&x, &y, &Tolerances::default()).unwrap();
    assert!(r.fails());
    let p = r.evidence.quantity("norm_plus").unwrap();
    let m = r.evidence.quantity("norm_minus").unwrap();
    assert!((p - m).abs() < 1e-15);
}

#[test]
fn roberts_examples() {
    let tol = Tolerances::default();
    let a = op(Matrix::diag_real(&[4.0, 3.0]));
    let b = op(Matrix::diag_real(&[0.0, 1.0]));
    let r = roberts_check_with_probes(&a, &b, &tol, &[c(5.0, 0.0)]).unwrap();
    assert!(r.fails());
    assert_eq!(r.evidence.lambda, Some(c(5.0, 0.0)));
    assert_eq!(a.norm_along(&b, c(5.0, 0.0)), 8.0);
    assert_eq!(a.norm_along(&b, c(-5.0, 0.0)), 4.0);
    assert!(roberts_check(&a, &b, &tol).unwrap().fails());

    let mut bm = Matrix::zeros(3, 3, Field::Real);
    bm.set(2, 1, c(1.0, 0.0));
    let r = roberts_check(&op(Matrix::diag_real(&[1.0, 0.0, 0.0])), &op(bm), &tol).unwrap();
    assert!(r.holds());
    assert!(matches!(r.confidence, Confidence::Grid { .. }));

    assert!(roberts_check(&vec_p(&[1.0, 0.0], 2.0), &vec_p(&[0.0, 1.0], 2.0), &tol).unwrap().holds());
}

#[test]
fn strong_isosceles_examples() {
    let tol = Tolerances::default();
    let a = op(Matrix::diag_real(&[4.0, 3.0]));
    let b = op(Matrix::diag_real(&[0.0, 1.0]));
    let r = si_check(&a, &b, &tol).unwrap();
    assert!(r.holds());
    assert_eq!(r.confidence, Confidence::Depth { depth: 40 });
    assert_eq!(r.evidence.roots.len(), 41);
    assert!(r.evidence.roots.windows(2).all(|w| w[1] < w[0]));

    let r = si_check(&s1(Matrix::diag_real(&[1.0, -2.0])), &s1(Matrix::identity(2, Field::Real)), &tol).unwrap();
    assert!(r.holds());

    let x = vec_p(&[1.0, 0.0], 2.0);
    let r = si_check(&x, &x, &tol).unwrap();
    assert!(r.fails());
    assert!(r.notes.iter().any(|n| n.contains("isosceles")));

    let z = NormedElement::operator(Matrix::identity(2, Field::Complex));
    assert_eq!(si_check(&z, &z, &tol).unwrap_err(), Error::ComplexFieldUnsupported);
}

#[test]
fn strong_isosceles_forces_r_orthogonality_on_examples() {
    let tol = Tolerances::default();
    let a = op(Matrix::diag_real(&[4.0, 3.0]));
    let b = op(Matrix::diag_real(&[0.0, 1.0]));
    assert!(bj_from_si(&a, &b, &tol).unwrap().holds());

    let x = s1(Matrix::diag_real(&[1.0, -2.0]));
    let id = s1(Matrix::identity(2, Field::Real));
    assert!(bj_from_si(&x, &id, &tol).unwrap().holds());
    let grid = (0..=8000).map(|i| x.norm_along(&id, c(-4.0 + 1e-3 * i as f64, 0.0))).fold(f64::INFINITY, f64::min);
    assert!(grid >= x.norm() - 1e-12);

    let zero = op(Matrix::zeros(2, 2, Field::Real));
    assert!(bj_from_si(&a, &zero, &tol).unwrap().holds());

    let e = vec_p(&[1.0, 0.0], 2.0);
    assert!(matches!(bj_from_si(&e, &e, &tol), Err(Error::PreconditionUnmet(_))));
}

#[test]
fn double_bj_examples() {
    let tol = Tolerances::default();
    let r = iso_from_double_bj(&vec_p(&[0.0, 2.0], 2.0), &vec_p(&[1.0, 0.0], 2.0), &tol).unwrap();
    assert_eq!(r.decision, Decision::Inconclusive);

    let x = vec_p(&[2.0, 0.0], 64.0);
    let y = vec_p(&[0.0, 1.0], 64.0);
    assert!(iso_from_double_bj(&x, &y, &tol).unwrap().holds());
    for s in [1.0, -1.0] {
        let shifted = x.plus_scaled(&y, c(s, 0.0)).unwrap();
        let f0 = shifted.norm();
        let grid = (0..=8000).map(|i| shifted.norm_along(&y, c(-4.0 + 1e-3 * i as f64, 0.0))).fold(f64::INFINITY, f64::min);
        assert!(grid >= f0 * (1.0 - 1e-9));
    }

    let zero = vec_p(&[0.0, 0.0], 2.0);
    assert!(iso_from_double_bj(&x.clone(), &NormedElement::new(zero.value().clone(), x.descriptor()).unwrap(), &tol).unwrap().holds());
}

#[test]
fn complex_double_bj_only_forces_the_real_pair() {
    let p = NormDescriptor::VectorP(512.0);
    let x = NormedElement::new(Matrix::column(&[c(1.0, 0.0), c(0.6, 0.0)], Field::Complex), p).unwrap();
    let y = NormedElement::new(Matrix::column(&[c(0.0, 0.0), c(0.0, 0.6)], Field::Complex), p).unwrap();
    let tol = Tolerances::default();
    assert!(iso_check(&x, &y, &tol).unwrap().fails());
    let r = iso_from_double_bj(&x, &y, &tol).unwrap();
    assert!(r.holds());
    assert!(r.notes.iter().any(|n| n.contains("complex field")));
}

#[derive(Debug, Clone, Copy)]
enum Family {
    Operator,
    Schatten(f64),
    Vector(f64),
}

fn pair_for(seed: u64, n: usize, field: Field, family: Family, kind: u8) -> (NormedElement, NormedElement) {
    let rng = &mut rng_from_seed(seed);
    match family {
        Family::Vector(p) => {
            let d = NormDescriptor::VectorP(p);
            let mut x = oportho::random::gaussian_vector(rng, n, field);
            let mut y = oportho::random::gaussian_vector(rng, n, field);
            if kind == 1 {
                let k = 1 + (seed as usize) % (n - 1);
                x[k..].iter_mut().for_each(|z| *z = C64::new(0.0, 0.0));
                y[..k].iter_mut().for_each(|z| *z = C64::new(0.0, 0.0));
            }
            (
                NormedElement::new(Matrix::column(&x, field), d).unwrap(),
                NormedElement::new(Matrix::column(&y, field), d).unwrap(),
            )
        }
        _ => {
            let (a, b) = match kind {
                0 => (oportho::random::gaussian_matrix(rng, n, n, field), oportho::random::gaussian_matrix(rng, n, n, field)),
                1 => disjoint_pair(rng, n, field),
                _ => planted_bj(rng, n, field),
            };
            let d = match family {
                Family::Schatten(p) => NormDescriptor::SchattenP(p),
                _ => NormDescriptor::OperatorTwo,
            };
            (NormedElement::new(a, d).unwrap(), NormedElement::new(b, d).unwrap())
        }
    }
}

fn family_strategy() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::Operator), (1.0f64..4.0).prop_map(Family::Schatten), (1.0f64..6.0).prop_map(Family::Vector)]
}

fn check_against_oracle(x: &NormedElement, y: &NormedElement) -> Result<(), TestCaseError> {
    let tol = Tolerances::default();
    let r = bj_check(x, y, &tol).unwrap();
    let o = oracle_decision(x, y, &tol);
    prop_assert!(!r.decision.contradicts(o), "bj {} vs oracle {} (margin {:e})", r.decision, o, r.margin);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bj_agrees_with_grid_oracle(seed in any::<u64>(), n in 2usize..5, field in field_strategy(), family in family_strategy(), kind in 0u8..3) {
        let (x, y) = pair_for(seed, n, field, family, kind);
        check_against_oracle(&x, &y)?;
    }

    #[test]
    fn bj_decision_is_scale_invariant(seed in any::<u64>(), n in 2usize..5, field in field_strategy(), kind in 0u8..3, s in 0.05f64..20.0) {
        let tol = Tolerances::default();
        let (x, y) = pair_for(seed, n, field, Family::Operator, kind);
        let base = bj_check(&x, &y, &tol).unwrap();
        let cx = bj_check(&x.scaled(c(s, 0.0)), &y, &tol).unwrap();
        let cy = bj_check(&x, &y.scaled(c(s, 0.0)), &tol).unwrap();
        prop_assert!(!base.decision.contradicts(cx.decision));
        prop_assert!(!base.decision.contradicts(cy.decision));
        if base.decision != Decision::Inconclusive && base.margin.abs() > 100.0 * base.band {
            prop_assert_eq!(base.decision, cx.decision);
            prop_assert_eq!(base.decision, cy.decision);
        }
    }

    #[test]
    fn iso_is_symmetric_over_reals(seed in any::<u64>(), n in 2usize..5, kind in 0u8..3, family in family_strategy()) {
        let tol = Tolerances::default();
        let (x, y) = pair_for(seed, n, Field::Real, family, kind);
        prop_assert_eq!(iso_check(&x, &y, &tol).unwrap().decision, iso_check(&y, &x, &tol).unwrap().decision);
    }

    #[test]
    fn roberts_implies_bj_and_iso(seed in any::<u64>(), n in 2usize..5, field in field_strategy(), kind in 0u8..3) {
        let tol = Tolerances::default();
        let (x, y) = pair_for(seed, n, field, Family::Operator, kind);
        let r = roberts_check(&x, &y, &tol).unwrap();
        if r.decisively_holds() || (r.holds() && !r.trivial) {
            prop_assert!(bj_check(&x, &y, &tol).unwrap().holds());
            prop_assert!(iso_check(&x, &y, &tol).unwrap().holds());
        }
    }
}

/// Full-size oracle comparison: 1000 pairs per field and norm family.
#[test]
#[ignore]
fn bj_oracle_full() {
    for field in [Field::Real, Field::Complex] {
        for family in [Family::Operator, Family::Schatten(1.0), Family::Schatten(3.0), Family::Vector(1.5)] {
            for seed in 0..1000u64 {
                let n = 2 + (seed as usize) % 3;
                let (x, y) = pair_for(seed, n, field, family, (seed % 3) as u8);
                check_against_oracle(&x, &y).unwrap();
            }
        }
    }
}
