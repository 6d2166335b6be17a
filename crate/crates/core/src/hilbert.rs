//! Operator-norm structure on finite-dimensional Hilbert spaces: attainment
//! sets, the spectral Birkhoff-James criterion, witnesses, Γ and disjoint support.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eigen, spectral_norm, top_singular, vector, Field, Matrix, SubspaceBasis, TopSubspace, C64,
};
use crate::math::{atan, cos, sin, sqrt};
use crate::norms::NormedElement;
use crate::numrange::{self, form};
use crate::ortho::{bj_check, classify, iso_check, roberts_check, Decision, OrthReport, Relation};
use crate::random::{coin, rng_from_seed, unit_vector, uniform, Rng};
use crate::tol::Tolerances;

/// Unit-norm tolerance for vectors handed to membership tests.
pub const UNIT_TOL: f64 = 1e-10;
/// Relative bound on both residuals of a valid witness.
pub const WITNESS_TOL: f64 = 1e-7;
/// Relative size of a bilinear sum that refutes Γ membership.
pub const GAMMA_TOL: f64 = 1e-6;

/// M_T: the unit vectors where T attains its norm.
#[derive(Debug, Clone, PartialEq)]
pub enum AttainmentSet {
    WholeSphere,
    SubsphereOf(SubspaceBasis),
}

pub fn attainment_set(t: &Matrix, tol: &Tolerances) -> AttainmentSet {
    match top_singular(t, tol) {
        Ok(top) => AttainmentSet::SubsphereOf(top.subspace),
        Err(_) => AttainmentSet::WholeSphere,
    }
}

fn check_unit(x: &[C64]) -> Result<()> {
    let n = vector::norm(x);
    if (n - 1.0).abs() > UNIT_TOL {
        return Err(Error::NotUnit { norm: n });
    }
    Ok(())
}

/// ⟨Tx, Ax⟩ = xᴴAᴴTx.
pub fn pairing(t: &Matrix, a: &Matrix, x: &[C64]) -> C64 {
    vector::inner(&t.mul_vec(x), &a.mul_vec(x))
}

/// x ∈ O_{T,A}, i.e. Tx ⊥ Ax.
pub fn o_ta_member(t: &Matrix, a: &Matrix, x: &[C64], tol: &Tolerances) -> Result<bool> {
    check_square_pair(t, a)?;
    check_unit(x)?;
    let tx = t.mul_vec(x);
    let ax = a.mul_vec(x);
    let bound = tol.eq_tol * vector::norm(&tx) * vector::norm(&ax);
    Ok(vector::inner(&tx, &ax).norm() <= bound)
}

/// A unit vector in M_T ∩ O_{T,A} with its residuals.
#[derive(Debug, Clone, PartialEq)]
pub struct BJWitness {
    pub vector: Vec<C64>,
    /// |‖Tx‖ − ‖T‖|.
    pub attainment_residual: f64,
    /// |⟨Tx, Ax⟩|.
    pub pairing_residual: f64,
}

impl BJWitness {
    pub fn measure(t: &Matrix, a: &Matrix, x: Vec<C64>) -> BJWitness {
        let tx = t.mul_vec(&x);
        BJWitness {
            attainment_residual: (vector::norm(&tx) - spectral_norm(t)).abs(),
            pairing_residual: pairing(t, a, &x).norm(),
            vector: x,
        }
    }

    pub fn is_valid(&self, norm_t: f64, norm_a: f64) -> bool {
        (vector::norm(&self.vector) - 1.0).abs() <= UNIT_TOL
            && self.attainment_residual <= WITNESS_TOL * norm_t
            && self.pairing_residual <= WITNESS_TOL * norm_t * norm_a.max(1.0)
    }
}

fn check_square_pair(t: &Matrix, a: &Matrix) -> Result<()> {
    if !t.is_square() {
        return Err(Error::NotSquare { rows: t.rows(), cols: t.cols() });
    }
    if t.shape() != a.shape() {
        return Err(Error::ShapeMismatch { left: t.shape(), right: a.shape() });
    }
    Ok(())
}

/// Result of the spectral criterion with its attainment data.
#[derive(Debug, Clone)]
pub struct SpectralReport {
    pub report: OrthReport,
    pub witness: Option<BJWitness>,
    pub attainment: TopSubspace,
}

/// T ⊥_B A decided through the compression K = B₀ᴴ(AᴴT)B₀ to the top
/// right-singular subspace: the relation holds iff 0 ∈ W(K). The margin is
/// the signed distance from 0 to the boundary of W(K), over ‖T‖‖A‖.
pub fn bj_spectral(t: &Matrix, a: &Matrix, tol: &Tolerances) -> Result<(OrthReport, Option<BJWitness>)> {
    bj_spectral_full(t, a, tol).map(|s| (s.report, s.witness))
}

pub fn bj_spectral_full(t: &Matrix, a: &Matrix, tol: &Tolerances) -> Result<SpectralReport> {
    check_square_pair(t, a)?;
    let top = top_singular(t, tol)?;
    let norm_t = top.top;
    let norm_a = spectral_norm(a);
    let b0 = top.subspace.basis().expect("nonzero operator has a top direction").clone();
    let field = t.field().join(a.field());

    if norm_a == 0.0 {
        let mut report = OrthReport::trivially_holds(Relation::BirkhoffJames);
        report.evidence.witness = Some(b0.col_vec(0));
        let w = BJWitness::measure(t, a, b0.col_vec(0));
        return Ok(SpectralReport { report, witness: Some(w), attainment: top });
    }

    let k = &(&b0.adjoint() * &(&a.adjoint() * t)) * &b0;
    let scale = norm_t * norm_a;
    let (raw, local) = match field {
        Field::Real => real_margin_and_witness(&k)?,
        Field::Complex => complex_margin_and_witness(&k, tol)?,
    };
    let margin = raw / scale;
    let mut report = OrthReport::from_margin(Relation::BirkhoffJames, margin, tol.eq_tol);
    report.evidence.quantities.push(("attainment_dim", b0.cols() as f64));
    report.evidence.quantities.push(("norm_t", norm_t));
    report.evidence.quantities.push(("relative_gap", top.relative_gap()));
    if top.ill_conditioned {
        report.notes.push("ill-conditioned attainment set".to_string());
    }

    let mut witness = None;
    if report.holds() {
        if let Some(z) = local {
            let x = vector::normalize(&b0.mul_vec(&z)).expect("orthonormal basis image is nonzero");
            let w = BJWitness::measure(t, a, x);
            if w.is_valid(norm_t, norm_a) {
                report.evidence.witness = Some(w.vector.clone());
                witness = Some(w);
            } else {
                report.notes.push(format!(
                    "witness failed validation (pairing residual {:e})",
                    w.pairing_residual
                ));
            }
        } else {
            report.notes.push("no witness constructed".to_string());
        }
    }
    Ok(SpectralReport { report, witness, attainment: top })
}

/// Real field: W(K) = [λ_min, λ_max] of sym K; the witness mixes the two
/// extreme eigenvectors so the form vanishes.
fn real_margin_and_witness(k: &Matrix) -> Result<(f64, Option<Vec<C64>>)> {
    let e = hermitian_eigen(&k.hermitian_part())?;
    let (hi, lo) = (e.max(), e.min());
    let margin = hi.min(-lo);
    Ok((margin, Some(mix_extremes(hi, lo, &e.vector(0), &e.vector(e.values.len() - 1)))))
}

/// cos θ·u₊ + sin θ·u₋ with tan²θ = λ₊/(−λ₋), or the extreme vector closest to 0.
fn mix_extremes(hi: f64, lo: f64, up: &[C64], down: &[C64]) -> Vec<C64> {
    if hi <= 0.0 {
        return up.to_vec();
    }
    if lo >= 0.0 {
        return down.to_vec();
    }
    let theta = atan(sqrt(hi / -lo));
    vector::combine(C64::new(cos(theta), 0.0), up, C64::new(sin(theta), 0.0), down)
}

fn complex_margin_and_witness(k: &Matrix, tol: &Tolerances) -> Result<(f64, Option<Vec<C64>>)> {
    if k.rows() == 1 {
        let kappa = k.get(0, 0);
        return Ok((-kappa.norm(), Some(alloc::vec![C64::new(1.0, 0.0)])));
    }
    let (margin, sw) = numrange::zero_margin(k, tol.sweep_angles)?;
    if classify(margin / k.max_abs().max(f64::MIN_POSITIVE), tol.eq_tol) == Decision::Fails {
        return Ok((margin, None));
    }
    let mut z = numrange::zero_preimage(k, &sw, &sw.vectors[0]);
    if z.is_none() {
        // On the boundary: the refined support direction touches 0.
        let j = sw
            .support
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .map(|(j, _)| j)
            .expect("sweep");
        z = Some(sw.vectors[j].clone());
    }
    Ok((margin, z))
}

/// Spectral and minimization verdicts side by side.
#[derive(Debug, Clone)]
pub struct Crosscheck {
    pub spectral: OrthReport,
    pub minimization: OrthReport,
    pub witness: Option<BJWitness>,
    /// Smallest spectral failure margin the minimization can resolve.
    pub resolution: f64,
}

impl Crosscheck {
    /// Joint verdict: agreement, or Inconclusive when either side is.
    pub fn decision(&self) -> Decision {
        if self.spectral.decision == self.minimization.decision {
            self.spectral.decision
        } else {
            Decision::Inconclusive
        }
    }
}

/// Runs the spectral criterion and the direct minimization. A spectral
/// failure only shows up in the minimum at second order, so it counts as
/// decisive only beyond `resolution`.
pub fn bj_crosscheck(t: &Matrix, a: &Matrix, tol: &Tolerances) -> Result<Crosscheck> {
    let s = bj_spectral_full(t, a, tol)?;
    let minimization = bj_check(
        &NormedElement::operator(t.clone()),
        &NormedElement::operator(a.clone()),
        tol,
    )?;
    let resolution = sqrt(200.0 * tol.eq_tol / s.attainment.relative_gap());
    let spectral_decisive = match s.report.decision {
        Decision::Holds => true,
        Decision::Fails => -s.report.margin > resolution,
        Decision::Inconclusive => false,
    };
    if spectral_decisive && s.report.decision.contradicts(minimization.decision) {
        return Err(Error::CriterionMismatch {
            spectral_margin: s.report.margin,
            minimization_margin: minimization.margin,
        });
    }
    Ok(Crosscheck { spectral: s.report, minimization, witness: s.witness, resolution })
}

/// AB* = 0 and B*A = 0 within eq_tol·‖A‖‖B‖.
pub fn disjoint_support(a: &Matrix, b: &Matrix, tol: &Tolerances) -> Result<bool> {
    check_square_pair(a, b)?;
    let bound = tol.eq_tol * spectral_norm(a) * spectral_norm(b);
    Ok(spectral_norm(&(a * &b.adjoint())) <= bound && spectral_norm(&(&b.adjoint() * a)) <= bound)
}

/// The four relations forced by B*A = 0.
#[derive(Debug, Clone)]
pub struct DisjointConsequences {
    pub bj_ab: OrthReport,
    pub bj_ba: OrthReport,
    pub roberts: OrthReport,
    pub iso: OrthReport,
}

impl DisjointConsequences {
    pub fn all_hold(&self) -> bool {
        [&self.bj_ab, &self.bj_ba, &self.roberts, &self.iso].iter().all(|r| r.holds())
    }

    pub fn reports(&self) -> [&OrthReport; 4] {
        [&self.bj_ab, &self.bj_ba, &self.roberts, &self.iso]
    }
}

pub fn disjoint_support_consequences(a: &Matrix, b: &Matrix, tol: &Tolerances) -> Result<DisjointConsequences> {
    check_square_pair(a, b)?;
    let cross = spectral_norm(&(&b.adjoint() * a));
    if cross > tol.eq_tol * spectral_norm(a) * spectral_norm(b) {
        return Err(Error::PreconditionUnmet(format!("|B*A| = {cross:e} is not zero")));
    }
    let ea = NormedElement::operator(a.clone());
    let eb = NormedElement::operator(b.clone());
    let out = DisjointConsequences {
        bj_ab: bj_check(&ea, &eb, tol)?,
        bj_ba: bj_check(&eb, &ea, tol)?,
        roberts: roberts_check(&ea, &eb, tol)?,
        iso: iso_check(&ea, &eb, tol)?,
    };
    for r in out.reports() {
        if r.fails() {
            return Err(Error::TheoremViolation(format!(
                "B*A = 0 but {} fails with margin {:e}",
                r.relation, r.margin
            )));
        }
    }
    Ok(out)
}

/// Structural reason a pair belongs to Γ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    /// AᴴT has vanishing Hermitian part, so every bilinear sum is zero.
    VanishingForm,
    DisjointSupport,
    NestedProjections,
    /// The form is semidefinite: its zero set is the kernel, a subspace.
    SemidefiniteForm,
    /// The form is definite: the zero set is empty.
    Vacuous,
}

#[derive(Debug, Clone, PartialEq)]
pub enum GammaOutcome {
    MemberEvidence(Certificate),
    Counterexample { x1: Vec<C64>, x2: Vec<C64>, sum: C64 },
    NoCounterexampleFound { samples: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub enum ProbeOutcome {
    ClosedUnderAddition { samples: usize },
    /// x₁, x₂ ∈ Z but x₁ + x₂ is not; `value` is the form at the normalized sum.
    Violation { x1: Vec<C64>, x2: Vec<C64>, value: C64 },
}

fn is_projection(p: &Matrix) -> bool {
    p.hermitian_residual() <= 1e-9 && (&(p * p) - p).max_abs() <= 1e-9
}

fn certificate(t: &Matrix, a: &Matrix, tol: &Tolerances) -> Result<Option<Certificate>> {
    let scale = spectral_norm(t) * spectral_norm(a);
    let c = &a.adjoint() * t;
    if disjoint_support(t, a, tol)? {
        return Ok(Some(Certificate::DisjointSupport));
    }
    let h = c.hermitian_part();
    if spectral_norm(&h) <= tol.eq_tol * scale {
        return Ok(Some(Certificate::VanishingForm));
    }
    if is_projection(t) && is_projection(a) {
        let ta = t * a;
        let at = a * t;
        if (&ta - a).max_abs() <= 1e-9 || (&at - t).max_abs() <= 1e-9 {
            return Ok(Some(Certificate::NestedProjections));
        }
    }
    let e = hermitian_eigen(&h)?;
    let floor = tol.psd_tol * scale;
    let hermitian_c = (&c - &h).max_abs() <= tol.eq_tol * scale;
    if (t.field().join(a.field()) == Field::Real || hermitian_c) && (e.min() >= -floor || e.max() <= floor) {
        let definite = e.min() > floor || e.max() < -floor;
        return Ok(Some(if definite { Certificate::Vacuous } else { Certificate::SemidefiniteForm }));
    }
    Ok(None)
}

/// Draws unit vectors from Z = {x : ⟨Tx, Ax⟩ = 0}.
struct ZeroSampler {
    c: Matrix,
    field: Field,
    kind: SamplerKind,
}

enum SamplerKind {
    Real { pos: Vec<(f64, Vec<C64>)>, neg: Vec<(f64, Vec<C64>)>, null: Vec<Vec<C64>> },
    Complex { sweep: numrange::RangeSweep },
}

impl ZeroSampler {
    fn new(t: &Matrix, a: &Matrix, tol: &Tolerances) -> Result<ZeroSampler> {
        let c = &a.adjoint() * t;
        let field = t.field().join(a.field());
        let scale = spectral_norm(t) * spectral_norm(a);
        match field {
            Field::Real => {
                let e = hermitian_eigen(&c.hermitian_part())?;
                let floor = 1e-10 * scale;
                let (mut pos, mut neg, mut null) = (Vec::new(), Vec::new(), Vec::new());
                for (j, &l) in e.values.iter().enumerate() {
                    if l > floor {
                        pos.push((l, e.vector(j)));
                    } else if l < -floor {
                        neg.push((l, e.vector(j)));
                    } else {
                        null.push(e.vector(j));
                    }
                }
                if null.is_empty() && (pos.is_empty() || neg.is_empty()) {
                    return Err(Error::DegenerateZeroSet);
                }
                Ok(ZeroSampler { c, field, kind: SamplerKind::Real { pos, neg, null } })
            }
            Field::Complex => {
                let (margin, sweep) = numrange::zero_margin(&c, tol.sweep_angles)?;
                if classify(margin / scale.max(f64::MIN_POSITIVE), tol.eq_tol) == Decision::Fails {
                    return Err(Error::DegenerateZeroSet);
                }
                Ok(ZeroSampler { c, field, kind: SamplerKind::Complex { sweep } })
            }
        }
    }

    fn sample(&self, rng: &mut Rng) -> Option<Vec<C64>> {
        let n = self.c.rows();
        let x = match &self.kind {
            SamplerKind::Real { pos, neg, null } => {
                let mut x = alloc::vec![C64::new(0.0, 0.0); n];
                let combo = |set: &[(f64, Vec<C64>)], rng: &mut Rng| -> (f64, Vec<C64>) {
                    let w = unit_vector(rng, set.len(), Field::Real);
                    let mut v = alloc::vec![C64::new(0.0, 0.0); n];
                    let mut q = 0.0;
                    for ((l, u), c) in set.iter().zip(&w) {
                        q += l * c.re * c.re;
                        for (vi, ui) in v.iter_mut().zip(u) {
                            *vi += c * ui;
                        }
                    }
                    (q, v)
                };
                if !pos.is_empty() && !neg.is_empty() && (null.is_empty() || coin(rng)) {
                    let (qp, p) = combo(pos, rng);
                    let (qn, m) = combo(neg, rng);
                    let th = atan(sqrt(qp / -qn));
                    let sign = if coin(rng) { 1.0 } else { -1.0 };
                    x = vector::combine(C64::new(cos(th), 0.0), &p, C64::new(sign * sin(th), 0.0), &m);
                }
                if !null.is_empty() {
                    let w = unit_vector(rng, null.len(), Field::Real);
                    let weight = if x.iter().all(|z| z.norm() == 0.0) { 1.0 } else { 2.0 * uniform(rng) };
                    for (u, c) in null.iter().zip(&w) {
                        for (xi, ui) in x.iter_mut().zip(u) {
                            *xi += c * ui * weight;
                        }
                    }
                }
                x
            }
            SamplerKind::Complex { sweep } => {
                let anchor = unit_vector(rng, n, Field::Complex);
                numrange::zero_preimage(&self.c, sweep, &anchor)?
            }
        };
        let x = vector::normalize(&x)?;
        Some(canonical_sign(&x, self.field))
    }
}

/// Makes the first non-negligible entry positive (real) or real positive (complex).
fn canonical_sign(x: &[C64], field: Field) -> Vec<C64> {
    match x.iter().find(|z| z.norm() > 1e-12) {
        None => x.to_vec(),
        Some(&z) => {
            let phase = match field {
                Field::Real => C64::new(if z.re < 0.0 { -1.0 } else { 1.0 }, 0.0),
                Field::Complex => z.conj() / z.norm(),
            };
            x.iter().map(|v| v * phase).collect()
        }
    }
}

/// ⟨Tx₁, Ax₂⟩ + ⟨Tx₂, Ax₁⟩.
pub fn bilinear_sum(t: &Matrix, a: &Matrix, x1: &[C64], x2: &[C64]) -> C64 {
    vector::inner(&t.mul_vec(x1), &a.mul_vec(x2)) + vector::inner(&t.mul_vec(x2), &a.mul_vec(x1))
}

/// Tests whether (T, A) ∈ Γ: the bilinear sum vanishes on pairs of zeros.
pub fn gamma_test(t: &Matrix, a: &Matrix, samples: usize, seed: u64, tol: &Tolerances) -> Result<GammaOutcome> {
    check_square_pair(t, a)?;
    if let Some(cert) = certificate(t, a, tol)? {
        return Ok(GammaOutcome::MemberEvidence(cert));
    }
    let sampler = match ZeroSampler::new(t, a, tol) {
        Ok(s) => s,
        Err(Error::DegenerateZeroSet) => return Ok(GammaOutcome::MemberEvidence(Certificate::Vacuous)),
        Err(e) => return Err(e),
    };
    let bound = GAMMA_TOL * spectral_norm(t) * spectral_norm(a);
    let mut rng = rng_from_seed(seed);
    for _ in 0..samples {
        let (Some(x1), Some(x2)) = (sampler.sample(&mut rng), sampler.sample(&mut rng)) else {
            continue;
        };
        let sum = bilinear_sum(t, a, &x1, &x2);
        if sum.norm() > bound {
            return Ok(GammaOutcome::Counterexample { x1, x2, sum });
        }
    }
    Ok(GammaOutcome::NoCounterexampleFound { samples })
}

/// Samples pairs from Z and checks x₁ + x₂ stays in Z.
pub fn o_ta_subspace_probe(t: &Matrix, a: &Matrix, samples: usize, seed: u64, tol: &Tolerances) -> Result<ProbeOutcome> {
    check_square_pair(t, a)?;
    let sampler = ZeroSampler::new(t, a, tol)?;
    let bound = GAMMA_TOL * spectral_norm(t) * spectral_norm(a);
    let mut rng = rng_from_seed(seed);
    for _ in 0..samples {
        let (Some(x1), Some(x2)) = (sampler.sample(&mut rng), sampler.sample(&mut rng)) else {
            continue;
        };
        let s: Vec<C64> = x1.iter().zip(&x2).map(|(p, q)| p + q).collect();
        let q = form(&sampler.c, &s);
        if q.norm() > bound {
            let sn = vector::dot(&s, &s).re;
            return Ok(ProbeOutcome::Violation { x1, x2, value: q / sn });
        }
    }
    Ok(ProbeOutcome::ClosedUnderAddition { samples })
}
