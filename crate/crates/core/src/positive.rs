//! Positive operators: certificates, Kittaneh's chain, isosceles orthogonality
//! of positive pairs, accretivity, projections and attainment-set structure.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hilbert::bj_spectral;
use crate::linalg::{
    hermitian_eigen, intersect, spectral_map, spectral_norm, top_singular, top_singular_subspace, vector,
    HermitianEigen, Matrix, SubspaceBasis, C64, HERMITIAN_TOL, I,
};
use crate::math::{atan, cos, sin, sqrt};
use crate::norms::NormedElement;
use crate::ortho::{bj_check, iso_check, Decision, OrthReport, Relation, INCONCLUSIVE_FACTOR};
use crate::tol::Tolerances;

/// Absolute idempotency tolerance for projections.
pub const PROJECTION_TOL: f64 = 1e-9;
/// Relative slack for the Kittaneh chain and the sum-of-squares chain.
pub const CHAIN_SLACK: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct PsdCertificate {
    pub hermitian_residual: f64,
    pub min_eigenvalue: f64,
    /// Principal square root.
    pub sqrt: Matrix,
    pub eigen: HermitianEigen,
}

pub fn psd_certify(a: &Matrix, tol: &Tolerances) -> Result<PsdCertificate> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let residual = a.hermitian_residual();
    if residual > HERMITIAN_TOL * a.max_abs() {
        return Err(Error::NotHermitian { residual });
    }
    let e = hermitian_eigen(a)?;
    let norm = e.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if e.min() < -tol.psd_tol * norm {
        return Err(Error::NotPsd { min_eigenvalue: e.min() });
    }
    let root = spectral_map(&e, |l| sqrt(l.max(0.0))).hermitian_part();
    Ok(PsdCertificate { hermitian_residual: residual, min_eigenvalue: e.min(), sqrt: root, eigen: e })
}

/// The larger and smaller operator of a pair, ties going to the first.
#[derive(Debug, Clone)]
pub struct MaxMinPair {
    pub big: Matrix,
    pub small: Matrix,
    pub tie: bool,
    pub big_is_first: bool,
}

pub fn max_min(a: &Matrix, b: &Matrix, tol: &Tolerances) -> MaxMinPair {
    let (na, nb) = (spectral_norm(a), spectral_norm(b));
    let tie = (na - nb).abs() <= tol.eq_tol * na.max(nb);
    if nb <= na || tie {
        MaxMinPair { big: a.clone(), small: b.clone(), tie, big_is_first: true }
    } else {
        MaxMinPair { big: b.clone(), small: a.clone(), tie, big_is_first: false }
    }
}

/// max(‖A‖,‖B‖) ∓ ‖A^½B^½‖ around ‖A−B‖ ≤ max ≤ ‖A+B‖.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KittanehChain {
    pub lower: f64,
    pub diff: f64,
    pub mid: f64,
    pub sum: f64,
    pub upper: f64,
}

impl KittanehChain {
    pub fn as_array(&self) -> [f64; 5] {
        [self.lower, self.diff, self.mid, self.sum, self.upper]
    }
}

pub fn kittaneh_bounds(a: &Matrix, b: &Matrix, tol: &Tolerances) -> Result<KittanehChain> {
    let ca = psd_certify(a, tol)?;
    let cb = psd_certify(b, tol)?;
    let cross = spectral_norm(&(&ca.sqrt * &cb.sqrt));
    let mid = spectral_norm(a).max(spectral_norm(b));
    let chain = KittanehChain {
        lower: mid - cross,
        diff: spectral_norm(&(a - b)),
        mid,
        sum: spectral_norm(&(a + b)),
        upper: mid + cross,
    };
    let slack = CHAIN_SLACK * mid;
    let v = chain.as_array();
    if let Some(i) = (0..4).find(|&i| v[i] > v[i + 1] + slack) {
        return Err(Error::TheoremViolation(format!(
            "Kittaneh chain breaks at position {i}: {} > {}",
            v[i],
            v[i + 1]
        )));
    }
    Ok(chain)
}

fn op(m: &Matrix) -> NormedElement {
    NormedElement::operator(m.clone())
}

/// ‖A+B‖ = ‖A−B‖ = max(‖A‖,‖B‖) for positive A, B, cross-checked against
/// the generic isosceles decider.
pub fn positive_iso_check(a: &Matrix, b: &Matrix, tol: &Tolerances) -> Result<OrthReport> {
    psd_certify(a, tol)?;
    psd_certify(b, tol)?;
    let mid = spectral_norm(a).max(spectral_norm(b));
    let sum = spectral_norm(&(a + b));
    let diff = spectral_norm(&(a - b));
    let deviation = (sum - mid).abs().max((diff - mid).abs());
    let mut report = OrthReport::from_margin(Relation::Isosceles, -deviation, tol.eq_tol * sum.max(mid));
    report.evidence.quantities = alloc::vec![("norm_plus", sum), ("norm_minus", diff), ("max_norm", mid)];
    let generic = iso_check(&op(a), &op(b), tol)?;
    if report.decision.contradicts(generic.decision) {
        return Err(Error::TheoremViolation(format!(
            "positive pair: max characterization says {} but isosceles check says {}",
            report.decision, generic.decision
        )));
    }
    Ok(report)
}

enum WitnessSearch {
    Found(Vec<C64>),
    Absent { decisive: bool },
}

fn witness_for(big: &Matrix, a: &Matrix, b: &Matrix, tol: &Tolerances) -> Result<WitnessSearch> {
    let mid = spectral_norm(big);
    let sum = spectral_norm(&(a + b));
    let band = tol.eq_tol * sum.max(mid);
    if sum > mid + band {
        return Ok(WitnessSearch::Absent { decisive: sum > mid + INCONCLUSIVE_FACTOR * band });
    }
    let top = top_singular_subspace(big, tol)?;
    let b0 = top.basis().expect("nonzero operator");
    let form = (b * a).hermitian_part();
    let k = &(&b0.adjoint() * &form) * b0;
    let e = hermitian_eigen(&k.hermitian_part())?;
    let qband = band * mid;
    if e.min() <= qband {
        let x = vector::normalize(&b0.mul_vec(&e.vector(e.values.len() - 1))).expect("unit");
        Ok(WitnessSearch::Found(x))
    } else {
        Ok(WitnessSearch::Absent { decisive: e.min() > INCONCLUSIVE_FACTOR * qband })
    }
}

/// A unit x with ‖M(A,B)x‖ = ‖A+B‖ and Re⟨BAx, x⟩ ≤ 0, when one exists.
/// Existence must match the isosceles decision; a decisive mismatch is a
/// theorem violation.
pub fn positive_iso_witness(a: &Matrix, b: &Matrix, tol: &Tolerances) -> Result<Option<Vec<C64>>> {
    let iso = positive_iso_check(a, b, tol)?;
    let mm = max_min(a, b, tol);
    if mm.big.is_zero() {
        return Err(Error::ZeroOperator);
    }
    let primary = witness_for(&mm.big, a, b, tol)?;
    if mm.tie {
        let other = witness_for(&mm.small, a, b, tol)?;
        let disagree = matches!(
            (&primary, &other),
            (WitnessSearch::Found(_), WitnessSearch::Absent { decisive: true })
                | (WitnessSearch::Absent { decisive: true }, WitnessSearch::Found(_))
        );
        if disagree {
            return Err(Error::TheoremViolation(
                "tied pair: witness exists for one selection only".into(),
            ));
        }
    }
    match primary {
        WitnessSearch::Found(x) => {
            if iso.fails() {
                return Err(Error::TheoremViolation(format!(
                    "witness exists but the pair is not isosceles (margin {:e})",
                    iso.margin
                )));
            }
            Ok(Some(x))
        }
        WitnessSearch::Absent { decisive } => {
            if decisive && iso.holds() {
                return Err(Error::TheoremViolation("isosceles positive pair without a witness".into()));
            }
            Ok(None)
        }
    }
}

/// Re(T) = (T + Tᴴ)/2 is positive semidefinite.
pub fn accretive_check(t: &Matrix, tol: &Tolerances) -> Result<bool> {
    if !t.is_square() {
        return Err(Error::NotSquare { rows: t.rows(), cols: t.cols() });
    }
    Ok(psd_certify(&t.hermitian_part(), tol).is_ok())
}

#[derive(Debug, Clone)]
pub struct AccretiveReport {
    pub iso: OrthReport,
    pub bj_ab: Option<OrthReport>,
    pub bj_ba: Option<OrthReport>,
    pub witness: Option<Vec<C64>>,
    /// |⟨BAx, x⟩| at the witness.
    pub witness_form: Option<f64>,
    /// Holds when the corollaries were exercised and confirmed;
    /// Inconclusive when the pair is not isosceles.
    pub decision: Decision,
}

/// For positive A, B with BA accretive: isosceles forces a witness with
/// ⟨BAx, x⟩ ≈ 0 and Birkhoff-James orthogonality in some direction.
pub fn accretive_iso_corollary(a: &Matrix, b: &Matrix, tol: &Tolerances) -> Result<AccretiveReport> {
    for m in [a, b] {
        psd_certify(m, tol).map_err(|e| Error::PreconditionUnmet(format!("{e}")))?;
    }
    let ba = b * a;
    if !accretive_check(&ba, tol)? {
        return Err(Error::PreconditionUnmet("BA is not accretive".into()));
    }
    let iso = iso_check(&op(a), &op(b), tol)?;
    let mut out = AccretiveReport {
        iso,
        bj_ab: None,
        bj_ba: None,
        witness: None,
        witness_form: None,
        decision: Decision::Inconclusive,
    };
    if !out.iso.holds() {
        return Ok(out);
    }
    let (ab, _) = bj_spectral(a, b, tol)?;
    let (bav, _) = bj_spectral(b, a, tol)?;
    if ab.fails() && bav.fails() {
        return Err(Error::TheoremViolation(format!(
            "isosceles accretive pair with neither Birkhoff-James direction (margins {:e}, {:e})",
            ab.margin, bav.margin
        )));
    }
    let witness = positive_iso_witness(a, b, tol)?;
    if let Some(x) = &witness {
        let value = crate::numrange::form(&ba, x).norm();
        let big = spectral_norm(a).max(spectral_norm(b));
        let band = tol.eq_tol * spectral_norm(&(a + b)).max(big);
        if value > big * sqrt(2.0 * band * big) + band * big {
            return Err(Error::TheoremViolation(format!("witness has |<BAx,x>| = {value:e}")));
        }
        out.witness_form = Some(value);
    }
    out.decision = if ab.holds() || bav.holds() { Decision::Holds } else { Decision::Inconclusive };
    out.bj_ab = Some(ab);
    out.bj_ba = Some(bav);
    out.witness = witness;
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct InvertibleReport {
    pub iso: OrthReport,
    pub bj: OrthReport,
    /// max(‖A‖,‖B‖) + min λ_min ≤ ‖A+B‖.
    pub lower_bound: (f64, f64),
    /// ‖A−B‖ ≤ max(‖A‖,‖B‖) − min λ_min.
    pub upper_bound: (f64, f64),
    /// ‖A − (‖A‖/‖B‖)B‖, strictly below ‖A‖.
    pub bj_probe: f64,
}

/// Positive invertible pairs are neither isosceles nor Birkhoff-James orthogonal.
pub fn invertible_pair_impossibility(a: &Matrix, b: &Matrix, tol: &Tolerances) -> Result<InvertibleReport> {
    let mut floors = [0.0; 2];
    for (i, m) in [a, b].into_iter().enumerate() {
        let c = psd_certify(m, tol).map_err(|e| Error::PreconditionUnmet(format!("{e}")))?;
        let norm = c.eigen.max();
        if c.min_eigenvalue < 10.0 * tol.psd_tol * norm {
            return Err(Error::PreconditionUnmet(format!(
                "operator is not positive definite (min eigenvalue {:e})",
                c.min_eigenvalue
            )));
        }
        floors[i] = c.min_eigenvalue;
    }
    let (na, nb) = (spectral_norm(a), spectral_norm(b));
    let mid = na.max(nb);
    let floor = floors[0].min(floors[1]);
    let sum = spectral_norm(&(a + b));
    let diff = spectral_norm(&(a - b));
    let slack = CHAIN_SLACK * mid;
    if mid + floor > sum + slack || diff > mid - floor + slack {
        return Err(Error::TheoremViolation(format!(
            "Kittaneh bounds fail: {} <= {} and {} <= {}",
            mid + floor,
            sum,
            diff,
            mid - floor
        )));
    }
    let bj_probe = spectral_norm(&a.add_scaled(b, C64::new(-na / nb, 0.0))?);
    if bj_probe >= na {
        return Err(Error::TheoremViolation(format!(
            "|A - (|A|/|B|)B| = {bj_probe} is not below |A| = {na}"
        )));
    }
    let iso = iso_check(&op(a), &op(b), tol)?;
    let bj = bj_check(&op(a), &op(b), tol)?;
    for r in [&iso, &bj] {
        if r.holds() {
            return Err(Error::TheoremViolation(format!(
                "positive definite pair satisfies {} (margin {:e})",
                r.relation, r.margin
            )));
        }
    }
    Ok(InvertibleReport { iso, bj, lower_bound: (mid + floor, sum), upper_bound: (diff, mid - floor), bj_probe })
}

pub fn projection_residual(p: &Matrix) -> f64 {
    if !p.is_square() {
        return f64::INFINITY;
    }
    p.hermitian_residual().max((&(p * p) - p).max_abs())
}

#[derive(Debug, Clone)]
pub struct ProjectionReport {
    pub iso: OrthReport,
    /// ‖PQ‖; `None` in the identity branch, as are both BJ reports.
    pub product_norm: Option<f64>,
    pub bj_pq: Option<OrthReport>,
    pub bj_qp: Option<OrthReport>,
    pub identity_branch: bool,
}

/// P ⊥_I I ⟺ P = 0, and for projections P_S ⊥_I P_T ⟺ P_S P_T = 0, which
/// then forces Birkhoff-James orthogonality both ways.
pub fn projection_propositions(p: &Matrix, q: &Matrix, tol: &Tolerances) -> Result<ProjectionReport> {
    for m in [p, q] {
        let r = projection_residual(m);
        if r > PROJECTION_TOL {
            return Err(Error::NotProjection { residual: r });
        }
    }
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch { left: p.shape(), right: q.shape() });
    }
    let n = p.rows();
    let iso = iso_check(&op(p), &op(q), tol)?;
    let band = tol.eq_tol;
    if q.approx_eq(&Matrix::identity(n, q.field()), PROJECTION_TOL) {
        let zero = spectral_norm(p) <= band;
        if (iso.holds() && !zero) || (iso.fails() && zero) {
            return Err(Error::TheoremViolation(format!(
                "P vs I: isosceles {} but |P| = {}",
                iso.decision,
                spectral_norm(p)
            )));
        }
        return Ok(ProjectionReport { iso, product_norm: None, bj_pq: None, bj_qp: None, identity_branch: true });
    }
    let prod = spectral_norm(&(p * q));
    let product_zero = prod <= band;
    if (iso.holds() && prod > INCONCLUSIVE_FACTOR * band) || (iso.fails() && product_zero) {
        return Err(Error::TheoremViolation(format!(
            "projections: isosceles {} but |PQ| = {prod:e}",
            iso.decision
        )));
    }
    let pq = bj_check(&op(p), &op(q), tol)?;
    let qp = bj_check(&op(q), &op(p), tol)?;
    if iso.holds() && (pq.fails() || qp.fails()) {
        return Err(Error::TheoremViolation(
            "isosceles projections are not mutually Birkhoff-James orthogonal".into(),
        ));
    }
    let out = ProjectionReport { iso, product_norm: Some(prod), bj_pq: Some(pq), bj_qp: Some(qp), identity_branch: false };
    Ok(out)
}

/// Attainment subspaces of A ± B and their intersection.
#[derive(Debug, Clone)]
pub struct IsoAttainment {
    pub plus: SubspaceBasis,
    pub minus: SubspaceBasis,
    pub common: SubspaceBasis,
    pub norm_plus: f64,
    pub norm_minus: f64,
    /// dim H₁ + dim H₂ > n.
    pub dims_exceed: bool,
    /// Unit x₀ in the intersection with Re⟨Ax₀, Bx₀⟩ = 0, when one exists.
    pub zero_vector: Option<Vec<C64>>,
    /// Range of Re⟨Ax, Bx⟩ over unit x in the intersection.
    pub common_range: Option<(f64, f64)>,
}

/// x ↦ Re⟨Ax, Bx⟩ = xᴴ·Herm(BᴴA)·x.
fn real_pairing_form(a: &Matrix, b: &Matrix) -> Matrix {
    (&b.adjoint() * a).hermitian_part()
}

fn compress(form: &Matrix, basis: &Matrix) -> Matrix {
    (&(&basis.adjoint() * form) * basis).hermitian_part()
}

fn pairing_band(plus: f64, minus: f64, tol: &Tolerances) -> f64 {
    let s = plus.max(minus);
    tol.eq_tol * s * s
}

pub fn iso_attainment(a: &Matrix, b: &Matrix, tol: &Tolerances) -> Result<IsoAttainment> {
    let sum = a + b;
    let diff = a - b;
    let tp = top_singular(&sum, tol)?;
    let tm = top_singular(&diff, tol)?;
    let n = a.cols();
    let common = intersect(&tp.subspace, &tm.subspace)?;
    let band = pairing_band(tp.top, tm.top, tol);
    let (zero_vector, common_range) = match common.basis() {
        None => (None, None),
        Some(c) => {
            let e = hermitian_eigen(&compress(&real_pairing_form(a, b), c))?;
            let (hi, lo) = (e.max(), e.min());
            let z = if lo <= band && hi >= -band {
                let local = mix(hi, lo, &e.vector(0), &e.vector(e.values.len() - 1));
                vector::normalize(&c.mul_vec(&local))
            } else {
                None
            };
            (z, Some((lo, hi)))
        }
    };
    Ok(IsoAttainment {
        dims_exceed: tp.subspace.dim() + tm.subspace.dim() > n,
        plus: tp.subspace,
        minus: tm.subspace,
        common,
        norm_plus: tp.top,
        norm_minus: tm.top,
        zero_vector,
        common_range,
    })
}

fn mix(hi: f64, lo: f64, up: &[C64], down: &[C64]) -> Vec<C64> {
    if hi <= 0.0 {
        return up.to_vec();
    }
    if lo >= 0.0 {
        return down.to_vec();
    }
    let th = atan(sqrt(hi / -lo));
    vector::combine(C64::new(cos(th), 0.0), up, C64::new(sin(th), 0.0), down)
}

/// ‖A+B‖ = ‖A−B‖ alone; over ℂ this is all the real-part form controls.
fn plus_minus_iso(plus: f64, minus: f64, tol: &Tolerances) -> OrthReport {
    let mut r = OrthReport::from_margin(Relation::Isosceles, -(plus - minus).abs(), tol.eq_tol * plus.max(minus));
    r.evidence.quantities = alloc::vec![("norm_plus", plus), ("norm_minus", minus)];
    r
}

/// Per-choice values ⟨Ah₀, Bh₀⟩ at extreme attainment vectors.
#[derive(Debug, Clone)]
pub struct AttainmentPairingReport {
    /// (λ_min, λ_max) of Re⟨Ah, Bh⟩ over unit h ∈ H₁.
    pub plus_range: (f64, f64),
    /// The same over H₂.
    pub minus_range: (f64, f64),
    /// ⟨Ah₀,Bh₀⟩ ≤ 0 for some h₀ and ⟨Ak₀,Bk₀⟩ ≥ 0 for some k₀.
    pub sufficient_condition: bool,
    pub iso: OrthReport,
}

/// Both directions of the attainment-vector test for isosceles orthogonality.
pub fn attainment_pairing_check(a: &Matrix, b: &Matrix, tol: &Tolerances) -> Result<AttainmentPairingReport> {
    let att = iso_attainment(a, b, tol)?;
    let form = real_pairing_form(a, b);
    let range = |s: &SubspaceBasis| -> Result<(f64, f64)> {
        let e = hermitian_eigen(&compress(&form, s.basis().expect("nonzero operator")))?;
        Ok((e.min(), e.max()))
    };
    let plus_range = range(&att.plus)?;
    let minus_range = range(&att.minus)?;
    let band = pairing_band(att.norm_plus, att.norm_minus, tol);
    let iso = plus_minus_iso(att.norm_plus, att.norm_minus, tol);
    let sufficient_condition = plus_range.0 <= band && minus_range.1 >= -band;
    if sufficient_condition && iso.fails() {
        return Err(Error::TheoremViolation(format!(
            "attainment vectors satisfy the sufficient condition but isosceles fails (margin {:e})",
            iso.margin
        )));
    }
    if iso.holds() && (plus_range.0 < -INCONCLUSIVE_FACTOR * band || minus_range.1 > INCONCLUSIVE_FACTOR * band) {
        return Err(Error::TheoremViolation(format!(
            "isosceles pair with <Ah,Bh> = {:e} on M(A+B) or <Ak,Bk> = {:e} on M(A-B)",
            plus_range.0, minus_range.1
        )));
    }
    Ok(AttainmentPairingReport { plus_range, minus_range, sufficient_condition, iso })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquareSumChain {
    pub lower: f64,
    pub middle: f64,
    pub upper: f64,
    /// ‖A+B‖² = ‖A−B‖² = 2, evaluated only for unit-norm A, B with h₁
    /// outside both kernels.
    pub unit_norm_claim: Option<bool>,
}

/// Checks ‖A‖² + ‖B‖² ≤ ‖A+B‖² + ‖A−B‖² ≤ 2(‖A‖² + ‖B‖²) at a vector h₁ in
/// M_{A+B} ∩ M_{A−B} with ⟨Ah₁, Bh₁⟩ = 0.
pub fn square_sum_chain(a: &Matrix, b: &Matrix, h1: &[C64], tol: &Tolerances) -> Result<SquareSumChain> {
    let (na, nb) = (spectral_norm(a), spectral_norm(b));
    let sum = spectral_norm(&(a + b));
    let diff = spectral_norm(&(a - b));
    let ah = a.mul_vec(h1);
    let bh = b.mul_vec(h1);
    let scale = sum.max(diff).max(na).max(nb);
    let pair = vector::inner(&ah, &bh).re;
    let attains = (vector::norm(&(a + b).mul_vec(h1)) - sum).abs() <= 1e-8 * scale
        && (vector::norm(&(a - b).mul_vec(h1)) - diff).abs() <= 1e-8 * scale;
    if !attains || pair.abs() > 1e-8 * scale * scale {
        return Err(Error::PreconditionUnmet("h1 is not a common attainment zero".into()));
    }
    let report = SquareSumChain {
        lower: na * na + nb * nb,
        middle: sum * sum + diff * diff,
        upper: 2.0 * (na * na + nb * nb),
        unit_norm_claim: {
            let unit = (na - 1.0).abs() <= tol.eq_tol && (nb - 1.0).abs() <= tol.eq_tol;
            let outside = vector::norm(&ah) > 1e-9 && vector::norm(&bh) > 1e-9;
            (unit && outside).then(|| (sum * sum - 2.0).abs() <= 1e-9 && (diff * diff - 2.0).abs() <= 1e-9)
        },
    };
    let slack = CHAIN_SLACK * report.upper.max(f64::MIN_POSITIVE);
    if report.lower > report.middle + slack || report.middle > report.upper + slack {
        return Err(Error::TheoremViolation(format!(
            "chain {} <= {} <= {} fails",
            report.lower, report.middle, report.upper
        )));
    }
    Ok(report)
}

/// Outcome of the intersection test for isosceles orthogonality.
#[derive(Debug, Clone)]
pub struct IntersectionZeroReport {
    /// `None` when dim H₁ + dim H₂ ≤ n.
    pub zero_exists: Option<bool>,
    pub iso: OrthReport,
    pub attainment: IsoAttainment,
    pub chain: Option<SquareSumChain>,
}

/// When dim H₁ + dim H₂ > n: isosceles ⟺ some unit x₀ ∈ H₁ ∩ H₂ has
/// Re⟨Ax₀, Bx₀⟩ = 0.
pub fn intersection_zero_check(a: &Matrix, b: &Matrix, tol: &Tolerances) -> Result<IntersectionZeroReport> {
    let att = iso_attainment(a, b, tol)?;
    let iso = plus_minus_iso(att.norm_plus, att.norm_minus, tol);
    let mut chain = None;
    if let Some(x0) = &att.zero_vector {
        chain = Some(square_sum_chain(a, b, x0, tol)?);
    }
    if !att.dims_exceed {
        return Ok(IntersectionZeroReport { zero_exists: None, iso, attainment: att, chain });
    }
    let band = pairing_band(att.norm_plus, att.norm_minus, tol);
    let zero = att.zero_vector.is_some();
    let clearly_absent = match att.common_range {
        None => true,
        Some((lo, hi)) => lo > INCONCLUSIVE_FACTOR * band || hi < -INCONCLUSIVE_FACTOR * band,
    };
    if (iso.holds() && clearly_absent) || (zero && iso.fails()) {
        return Err(Error::TheoremViolation(format!(
            "isosceles {} but a common attainment zero {}",
            iso.decision,
            if zero { "exists" } else { "does not exist" }
        )));
    }
    Ok(IntersectionZeroReport { zero_exists: Some(zero), iso, attainment: att, chain })
}

/// Complex form: run the real machinery on (A, B) and on (A, iB).
pub fn intersection_zero_check_complex(a: &Matrix, b: &Matrix, tol: &Tolerances) -> Result<(IntersectionZeroReport, IntersectionZeroReport)> {
    let ib = b.scale(I);
    Ok((intersection_zero_check(a, b, tol)?, intersection_zero_check(a, &ib, tol)?))
}

/// Decision of the complex intersection test: both halves must hold.
pub fn intersection_zero_complex_decision(pair: &(IntersectionZeroReport, IntersectionZeroReport)) -> Option<bool> {
    match (pair.0.zero_exists, pair.1.zero_exists) {
        (Some(x), Some(y)) => Some(x && y),
        _ => None,
    }
}

