//! Structured generators, randomized theorem suites and the table of
//! reference examples.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::hilbert::{
    bj_crosscheck, bj_spectral, bj_spectral_full, disjoint_support, disjoint_support_consequences, gamma_test,
    o_ta_member, o_ta_subspace_probe, GammaOutcome, ProbeOutcome,
};
use crate::linalg::{spectral_norm, vector, Field, Matrix, C64};
use crate::norms::{NormDescriptor, NormedElement};
use crate::ortho::{Decision, bj_check, bj_from_si, iso_check, iso_from_double_bj, roberts_check_with_probes, si_check};
use crate::positive::{
    accretive_iso_corollary, invertible_pair_impossibility, kittaneh_bounds, positive_iso_check,
    positive_iso_witness, projection_propositions, attainment_pairing_check, intersection_zero_check, intersection_zero_check_complex,
};
use crate::random::{
    gaussian_matrix, int_in, orthonormal_vectors, rng_from_seed, uniform, uniform_in, unitary, Rng,
};
use crate::tol::Tolerances;

/// Samples drawn from the zero set per gamma trial.
pub const GAMMA_SAMPLES: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Dense,
    Psd,
    PositiveDefinite,
    Projection,
    NestedProjections,
    DisjointSupportPair,
    BjOrthogonalPair,
    Thm34Truncation(usize),
}

impl Kind {
    pub fn name(&self) -> String {
        match self {
            Kind::Dense => "dense".into(),
            Kind::Psd => "psd".into(),
            Kind::PositiveDefinite => "positive-definite".into(),
            Kind::Projection => "projection".into(),
            Kind::NestedProjections => "nested-projections".into(),
            Kind::DisjointSupportPair => "disjoint-support-pair".into(),
            Kind::BjOrthogonalPair => "bj-orthogonal-pair".into(),
            Kind::Thm34Truncation(n) => format!("thm34-truncation({n})"),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    /// Accepts `thm34-truncation(n)` and `thm34-truncation:n`.
    fn from_str(s: &str) -> Result<Kind> {
        let bad = || Error::BadKind(s.to_string());
        Ok(match s {
            "dense" => Kind::Dense,
            "psd" => Kind::Psd,
            "positive-definite" => Kind::PositiveDefinite,
            "projection" => Kind::Projection,
            "nested-projections" => Kind::NestedProjections,
            "disjoint-support-pair" => Kind::DisjointSupportPair,
            "bj-orthogonal-pair" => Kind::BjOrthogonalPair,
            _ => {
                let rest = s.strip_prefix("thm34-truncation").ok_or_else(bad)?;
                let digits = rest
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| rest.strip_prefix(':'))
                    .ok_or_else(bad)?;
                let n: usize = digits.parse().map_err(|_| bad())?;
                if n < 2 {
                    return Err(bad());
                }
                Kind::Thm34Truncation(n)
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Generated {
    Single(Matrix),
    Pair(Matrix, Matrix),
}

impl Generated {
    pub fn matrices(&self) -> Vec<&Matrix> {
        match self {
            Generated::Single(m) => vec![m],
            Generated::Pair(a, b) => vec![a, b],
        }
    }
}

/// Deterministic in `seed`. `dim` is ignored by truncations, which carry
/// their own size.
pub fn generate(kind: Kind, dim: usize, field: Field, seed: u64) -> Result<Generated> {
    if kind_needs_dim(kind) && !(1..=64).contains(&dim) {
        return Err(Error::InvalidDimensions { rows: dim, cols: dim });
    }
    let rng = &mut rng_from_seed(seed);
    Ok(match kind {
        Kind::Dense => Generated::Single(gaussian_matrix(rng, dim, dim, field)),
        Kind::Psd => Generated::Single(psd(rng, dim, field)),
        Kind::PositiveDefinite => Generated::Single(positive_definite(rng, dim, field)),
        Kind::Projection => {
            let rank = int_in(rng, 0, dim);
            Generated::Single(projection(rng, dim, rank, field))
        }
        Kind::NestedProjections => {
            let (n, m) = nested_projections(rng, dim, field);
            Generated::Pair(n, m)
        }
        Kind::DisjointSupportPair => {
            let (a, b) = disjoint_pair(rng, dim, field);
            Generated::Pair(a, b)
        }
        Kind::BjOrthogonalPair => {
            let (t, a) = planted_bj(rng, dim, field);
            Generated::Pair(t, a)
        }
        Kind::Thm34Truncation(n) => {
            let (t, a) = thm34_truncation(n);
            Generated::Pair(t, a)
        }
    })
}

fn kind_needs_dim(kind: Kind) -> bool {
    !matches!(kind, Kind::Thm34Truncation(_))
}

fn diag_product(u: &Matrix, d: &[C64], v: &Matrix) -> Matrix {
    let n = d.len();
    let mut m = Matrix::zeros(n, n, Field::Complex);
    for i in 0..n {
        m.set(i, i, d[i]);
    }
    let out = &(u * &m) * &v.adjoint();
    if u.field().join(v.field()).is_real() && d.iter().all(|z| z.im == 0.0) {
        Matrix::from_entries(n, n, Field::Real, out.data().iter().map(|z| C64::new(z.re, 0.0)).collect())
            .expect("square")
    } else {
        out
    }
}

fn real_diag(d: &[f64]) -> Vec<C64> {
    d.iter().map(|&x| C64::new(x, 0.0)).collect()
}

fn phase(rng: &mut Rng, field: Field) -> C64 {
    match field {
        Field::Real => C64::new(if uniform(rng) < 0.5 { -1.0 } else { 1.0 }, 0.0),
        Field::Complex => C64::from_polar(1.0, uniform_in(rng, 0.0, core::f64::consts::TAU)),
    }
}

fn outer(u: &[C64], v: &[C64], field: Field) -> Matrix {
    &Matrix::column(u, field) * &Matrix::column(v, field).adjoint()
}

/// GᴴG with G of random rank.
pub fn psd(rng: &mut Rng, n: usize, field: Field) -> Matrix {
    let rank = int_in(rng, 1, n);
    let g = gaussian_matrix(rng, rank, n, field);
    (&g.adjoint() * &g).hermitian_part()
}

/// GᴴG + 0.1‖GᴴG‖·I.
pub fn positive_definite(rng: &mut Rng, n: usize, field: Field) -> Matrix {
    let g = gaussian_matrix(rng, n, n, field);
    let m = (&g.adjoint() * &g).hermitian_part();
    let shift = 0.1 * spectral_norm(&m);
    m.add_scaled(&Matrix::identity(n, field), C64::new(shift, 0.0)).expect("square")
}

pub fn projection(rng: &mut Rng, n: usize, rank: usize, field: Field) -> Matrix {
    let vs = orthonormal_vectors(rng, n, rank, field);
    projector_of(n, &vs, field)
}

fn projector_of(n: usize, vs: &[Vec<C64>], field: Field) -> Matrix {
    if vs.is_empty() {
        return Matrix::zeros(n, n, field);
    }
    let b = Matrix::from_columns(n, vs, field);
    (&b * &b.adjoint()).hermitian_part()
}

/// Coordinate projections P_N ⊋ P_M with N of codimension one.
pub fn nested_projections(rng: &mut Rng, n: usize, field: Field) -> (Matrix, Matrix) {
    let m_rank = if n >= 3 { int_in(rng, 1, n - 2) } else { 0 };
    let diag = |k: usize| {
        let mut m = Matrix::zeros(n, n, field);
        for i in 0..k {
            m.set(i, i, C64::new(1.0, 0.0));
        }
        m
    };
    (diag(n - 1), diag(m_rank))
}

/// A, B with orthogonal ranges and orthogonal co-ranges.
pub fn disjoint_pair(rng: &mut Rng, n: usize, field: Field) -> (Matrix, Matrix) {
    let u = unitary(rng, n, field);
    let v = unitary(rng, n, field);
    let k = int_in(rng, 1, n - 1);
    let block = |rng: &mut Rng, idx: core::ops::Range<usize>| {
        let g = gaussian_matrix(rng, idx.len(), idx.len(), field);
        let ids: Vec<usize> = idx.collect();
        &(&u.columns(&ids) * &g) * &v.columns(&ids).adjoint()
    };
    let a = block(rng, 0..k);
    let b = block(rng, k..n);
    (a, b)
}

/// T with simple top singular vector x₀ and A with Ax₀ ⊥ Tx₀.
pub fn planted_bj(rng: &mut Rng, n: usize, field: Field) -> (Matrix, Matrix) {
    let u = unitary(rng, n, field);
    let v = unitary(rng, n, field);
    let mut s: Vec<f64> = (0..n).map(|_| uniform_in(rng, 0.05, 0.9)).collect();
    s[0] = 1.0;
    let t = diag_product(&u, &real_diag(&s), &v);
    let x0 = v.col_vec(0);
    let u0 = u.col_vec(0);
    let g = gaussian_matrix(rng, n, n, field);
    let c = vector::inner(&g.mul_vec(&x0), &u0);
    let a = g.add_scaled(&outer(&u0, &x0, field), -c).expect("square");
    (t, a)
}

/// T whose top singular value has multiplicity k ≥ 2, against a dense A.
pub fn tied_top_pair(rng: &mut Rng, n: usize, field: Field) -> (Matrix, Matrix) {
    let u = unitary(rng, n, field);
    let v = unitary(rng, n, field);
    let k = int_in(rng, 2, n);
    let s: Vec<f64> = (0..n).map(|i| if i < k { 1.0 } else { uniform_in(rng, 0.05, 0.9) }).collect();
    (diag_product(&u, &real_diag(&s), &v), gaussian_matrix(rng, n, n, field))
}

/// T = diag(1/2, 1/2, 2/3, …, (n−1)/n), A = diag(1, 1/2, …, 1/n).
pub fn thm34_truncation(n: usize) -> (Matrix, Matrix) {
    let t: Vec<f64> = (1..=n).map(|k| if k == 1 { 0.5 } else { (k - 1) as f64 / k as f64 }).collect();
    let a: Vec<f64> = (1..=n).map(|k| 1.0 / k as f64).collect();
    (Matrix::diag_real(&t), Matrix::diag_real(&a))
}

/// PSD pair with ‖A ± B‖ = max(‖A‖, ‖B‖): the larger operator owns a top
/// eigenvector annihilated by the other, and everything else sits below half
/// its norm.
pub fn iso_positive_pair(rng: &mut Rng, n: usize, field: Field) -> (Matrix, Matrix) {
    let u = unitary(rng, n, field);
    let m = uniform_in(rng, 1.0, 2.0);
    let mut big = vec![0.0; n];
    big[0] = m;
    for x in big.iter_mut().skip(1) {
        *x = uniform_in(rng, 0.0, 0.5 * m);
    }
    let big = diag_product(&u, &real_diag(&big), &u).hermitian_part();
    let inner = psd(rng, n - 1, field);
    let scale = uniform_in(rng, 0.1, 0.5 * m) / spectral_norm(&inner).max(f64::MIN_POSITIVE);
    let rest: Vec<usize> = (1..n).collect();
    let q = u.columns(&rest);
    let small = (&(&q * &inner.scale_real(scale)) * &q.adjoint()).hermitian_part();
    if uniform(rng) < 0.5 {
        (big, small)
    } else {
        (small, big)
    }
}

/// Commuting PSD pair, so BA is positive and hence accretive.
pub fn commuting_psd_pair(rng: &mut Rng, n: usize, field: Field) -> (Matrix, Matrix) {
    let u = unitary(rng, n, field);
    let (a, b): (Vec<f64>, Vec<f64>) = if uniform(rng) < 0.5 {
        let m = uniform_in(rng, 1.0, 2.0);
        (0..n)
            .map(|i| if i == 0 { (m, 0.0) } else { (uniform_in(rng, 0.0, 0.5 * m), uniform_in(rng, 0.0, 0.5 * m)) })
            .unzip()
    } else {
        (0..n).map(|_| (uniform(rng), uniform(rng))).unzip()
    };
    let a = diag_product(&u, &real_diag(&a), &u).hermitian_part();
    let b = diag_product(&u, &real_diag(&b), &u).hermitian_part();
    if uniform(rng) < 0.5 {
        (a, b)
    } else {
        (b, a)
    }
}

/// x = U·diag(dx)·Vᴴ, y = U·diag(dy)·Vᴴ with |dx₁| = M, dy₁ = 0 and
/// |dxᵢ ± dyᵢ| ≤ M elsewhere, so (x ± y) ⊥_B y in the operator norm.
pub fn double_bj_pair(rng: &mut Rng, n: usize, field: Field) -> (Matrix, Matrix) {
    let u = unitary(rng, n, field);
    let v = unitary(rng, n, field);
    let m = uniform_in(rng, 1.0, 2.0);
    let mut dx = vec![C64::new(0.0, 0.0); n];
    let mut dy = dx.clone();
    dx[0] = phase(rng, field) * m;
    for i in 1..n {
        dx[i] = phase(rng, field) * uniform_in(rng, 0.0, 0.5 * m);
        dy[i] = phase(rng, field) * uniform_in(rng, 0.1 * m, 0.5 * m);
    }
    (diag_product(&u, &dx, &v), diag_product(&u, &dy, &v))
}

/// A = (S + D)/2, B = (S − D)/2 where S and D have top singular subspaces of
/// dimensions k₁, k₂ with k₁ + k₂ > n; ‖S‖ = ‖D‖ on about half the draws.
pub fn intersecting_attainment_pair(rng: &mut Rng, n: usize, field: Field) -> (Matrix, Matrix) {
    let k1 = int_in(rng, n.div_ceil(2), n);
    let k2 = int_in(rng, n + 1 - k1, n);
    let top_d = if uniform(rng) < 0.5 { 1.0 } else { uniform_in(rng, 0.5, 1.5) };
    let mut build = |k: usize, top: f64| {
        let u = unitary(rng, n, field);
        let v = unitary(rng, n, field);
        let s: Vec<f64> = (0..n).map(|i| if i < k { top } else { uniform_in(rng, 0.0, 0.8 * top) }).collect();
        diag_product(&u, &real_diag(&s), &v)
    };
    let s = build(k1, 1.0);
    let d = build(k2, top_d);
    ((&s + &d).scale_real(0.5), (&s - &d).scale_real(0.5))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    BhatiaSemrl,
    Prop41,
    Kittaneh,
    IsoMax,
    Cariso,
    Projections,
    Invertible,
    Prop51,
    SiBj,
    Thm33,
    Thm35,
    Gamma,
    AttainmentPairing,
    IntersectionZero,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::BhatiaSemrl,
        Suite::Prop41,
        Suite::Kittaneh,
        Suite::IsoMax,
        Suite::Cariso,
        Suite::Projections,
        Suite::Invertible,
        Suite::Prop51,
        Suite::SiBj,
        Suite::Thm33,
        Suite::Thm35,
        Suite::Gamma,
        Suite::AttainmentPairing,
        Suite::IntersectionZero,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::BhatiaSemrl => "bhatia-semrl",
            Suite::Prop41 => "prop41",
            Suite::Kittaneh => "kittaneh",
            Suite::IsoMax => "iso-max",
            Suite::Cariso => "cariso",
            Suite::Projections => "projections",
            Suite::Invertible => "invertible",
            Suite::Prop51 => "prop51",
            Suite::SiBj => "si-bj",
            Suite::Thm33 => "thm33",
            Suite::Thm35 => "thm35",
            Suite::Gamma => "gamma",
            Suite::AttainmentPairing => "attainment-pairing",
            Suite::IntersectionZero => "intersection-zero",
        }
    }

    /// Suites whose relations are only defined over ℝ ignore the field choice.
    pub fn real_only(&self) -> bool {
        matches!(self, Suite::SiBj | Suite::Thm33)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL.iter().copied().find(|x| x.name() == s).ok_or_else(|| Error::BadSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Real,
    Complex,
    Both,
}

impl FieldChoice {
    pub fn fields(&self) -> &'static [Field] {
        match self {
            FieldChoice::Real => &[Field::Real],
            FieldChoice::Complex => &[Field::Complex],
            FieldChoice::Both => &[Field::Real, Field::Complex],
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FieldChoice::Real => "real",
            FieldChoice::Complex => "complex",
            FieldChoice::Both => "both",
        }
    }
}

impl FromStr for FieldChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<FieldChoice> {
        match s {
            "real" => Ok(FieldChoice::Real),
            "complex" => Ok(FieldChoice::Complex),
            "both" => Ok(FieldChoice::Both),
            _ => Err(Error::InvalidConfig(format!("unknown field {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub trials: usize,
    pub dims: Vec<usize>,
    pub field: FieldChoice,
    pub seed: u64,
    pub tolerances: Tolerances,
}

impl SuiteConfig {
    pub fn new(suite: Suite, trials: usize, dims: Vec<usize>, field: FieldChoice, seed: u64) -> SuiteConfig {
        SuiteConfig { suite, trials, dims, field, seed, tolerances: Tolerances::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidConfig("trials must be positive".into()));
        }
        if self.dims.is_empty() {
            return Err(Error::InvalidConfig("no dimensions given".into()));
        }
        if let Some(d) = self.dims.iter().find(|d| !(2..=64).contains(*d)) {
            return Err(Error::InvalidConfig(format!("dimension {d} outside [2, 64]")));
        }
        self.tolerances.validate()
    }

    /// (dimension, field) of trial `index`: fields alternate fastest.
    pub fn schedule(&self, index: usize) -> (usize, Field) {
        let fields = if self.suite.real_only() { &[Field::Real][..] } else { self.field.fields() };
        let nf = fields.len();
        (self.dims[(index / nf) % self.dims.len()], fields[index % nf])
    }
}

/// Inputs of one trial, enough to replay it.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub construction: String,
    pub seed: u64,
    pub elements: Vec<NormedElement>,
}

impl Instance {
    pub fn new(construction: impl Into<String>, seed: u64, elements: Vec<NormedElement>) -> Instance {
        Instance { construction: construction.into(), seed, elements }
    }

    fn pair(construction: &'static str, seed: u64, a: Matrix, b: Matrix) -> Instance {
        Instance { construction: construction.into(), seed, elements: vec![NormedElement::operator(a), NormedElement::operator(b)] }
    }

    fn matrix(&self, i: usize) -> &Matrix {
        self.elements[i].value()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TrialOutcome {
    Passed,
    Inconclusive(String),
    Failed(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub offset: u64,
    pub instance: Instance,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub suite: Suite,
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
    pub failures: Vec<Failure>,
}

impl SuiteResult {
    pub fn clean(&self) -> bool {
        self.failed == 0
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteResult> {
    cfg.validate()?;
    let mut out = SuiteResult {
        suite: cfg.suite,
        trials: cfg.trials,
        passed: 0,
        failed: 0,
        inconclusive: 0,
        failures: Vec::new(),
    };
    for index in 0..cfg.trials {
        let offset = index as u64;
        let (dim, field) = cfg.schedule(index);
        let instance = instance_for(cfg.suite, index, dim, field, cfg.seed.wrapping_add(offset));
        match replay(cfg.suite, &instance, &cfg.tolerances) {
            TrialOutcome::Passed => out.passed += 1,
            TrialOutcome::Inconclusive(_) => out.inconclusive += 1,
            TrialOutcome::Failed(detail) => {
                out.failed += 1;
                out.failures.push(Failure { offset, instance, detail });
            }
        }
    }
    Ok(out)
}

/// The instance trial `index` of `suite` draws from `seed`.
pub fn instance_for(suite: Suite, index: usize, dim: usize, field: Field, seed: u64) -> Instance {
    let rng = &mut rng_from_seed(seed);
    let pair = |c, (a, b): (Matrix, Matrix)| Instance::pair(c, seed, a, b);
    match suite {
        Suite::BhatiaSemrl => match int_in(rng, 0, 2) {
            0 => {
                let t = gaussian_matrix(rng, dim, dim, field);
                pair("dense", (t, gaussian_matrix(rng, dim, dim, field)))
            }
            1 => pair("bj-orthogonal-pair", planted_bj(rng, dim, field)),
            _ => pair("tied-top-pair", tied_top_pair(rng, dim, field)),
        },
        Suite::Prop41 => pair("disjoint-support-pair", disjoint_pair(rng, dim, field)),
        Suite::Kittaneh | Suite::IsoMax => {
            if uniform(rng) < 0.5 {
                pair("iso-positive-pair", iso_positive_pair(rng, dim, field))
            } else {
                let a = psd(rng, dim, field);
                pair("psd", (a, psd(rng, dim, field)))
            }
        }
        Suite::AttainmentPairing => match int_in(rng, 0, 2) {
            0 => {
                let t = gaussian_matrix(rng, dim, dim, field);
                pair("dense", (t, gaussian_matrix(rng, dim, dim, field)))
            }
            1 => pair("iso-positive-pair", iso_positive_pair(rng, dim, field)),
            _ => pair("disjoint-support-pair", disjoint_pair(rng, dim, field)),
        },
        Suite::Cariso => pair("commuting-psd-pair", commuting_psd_pair(rng, dim, field)),
        Suite::Projections => match int_in(rng, 0, 2) {
            0 => {
                let r = int_in(rng, 1, dim - 1);
                let s = int_in(rng, 1, dim - 1);
                let p = projection(rng, dim, r, field);
                pair("random-projections", (p, projection(rng, dim, s, field)))
            }
            1 => {
                let r = int_in(rng, 1, dim - 1);
                let s = int_in(rng, 1, dim - r);
                let vs = orthonormal_vectors(rng, dim, r + s, field);
                let p = projector_of(dim, &vs[..r], field);
                pair("orthogonal-ranges", (p, projector_of(dim, &vs[r..], field)))
            }
            _ => {
                let r = int_in(rng, 0, dim);
                let p = projection(rng, dim, r, field);
                pair("projection-vs-identity", (p, Matrix::identity(dim, field)))
            }
        },
        Suite::Invertible => {
            let a = positive_definite(rng, dim, field);
            pair("positive-definite", (a, positive_definite(rng, dim, field)))
        }
        Suite::Prop51 => pair("double-bj-pair", double_bj_pair(rng, dim, field)),
        Suite::SiBj => match index {
            0 => pair("example-5.5", (Matrix::diag_real(&[4.0, 3.0]), Matrix::diag_real(&[0.0, 1.0]))),
            1 => {
                let mut inst = Instance::pair(
                    "example-5.6",
                    seed,
                    Matrix::diag_real(&[1.0, -2.0]),
                    Matrix::identity(2, Field::Real),
                );
                for e in inst.elements.iter_mut() {
                    *e = NormedElement::new(e.value().clone(), NormDescriptor::SchattenP(1.0)).expect("valid norm");
                }
                inst
            }
            _ => pair("disjoint-support-pair", disjoint_pair(rng, dim, Field::Real)),
        },
        Suite::Thm33 => pair("bj-orthogonal-pair", planted_bj(rng, dim, Field::Real)),
        Suite::Thm35 => {
            if index % 4 == 3 {
                pair("thm34-truncation", thm34_truncation(dim))
            } else {
                pair("bj-orthogonal-pair", planted_bj(rng, dim, field))
            }
        }
        Suite::Gamma => match int_in(rng, 0, 3) {
            0 => {
                let t = gaussian_matrix(rng, dim, dim, field);
                pair("dense", (t, gaussian_matrix(rng, dim, dim, field)))
            }
            1 => pair("disjoint-support-pair", disjoint_pair(rng, dim, field)),
            2 => {
                let u = unitary(rng, dim, field);
                let (n, m) = nested_projections(rng, dim, field);
                let conj = |p: &Matrix| (&(&u * p) * &u.adjoint()).hermitian_part();
                pair("nested-projections", (conj(&n), conj(&m)))
            }
            _ => {
                let d: Vec<f64> = (0..dim).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect();
                let u = unitary(rng, dim, field);
                let a = diag_product(&u, &real_diag(&d), &u).hermitian_part();
                pair("indefinite-form", (Matrix::identity(dim, field), a))
            }
        },
        Suite::IntersectionZero => pair("intersecting-attainment-pair", intersecting_attainment_pair(rng, dim, field)),
    }
}

fn violation(e: Error) -> TrialOutcome {
    TrialOutcome::Failed(e.to_string())
}

macro_rules! attempt {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return violation(e),
        }
    };
}

/// Re-executes one trial from its recorded inputs.
pub fn replay(suite: Suite, inst: &Instance, tol: &Tolerances) -> TrialOutcome {
    if inst.elements.len() != 2 {
        return TrialOutcome::Failed("instance must hold two elements".into());
    }
    let (a, b) = (inst.matrix(0), inst.matrix(1));
    let (ea, eb) = (&inst.elements[0], &inst.elements[1]);
    let inconclusive = |what: &str| TrialOutcome::Inconclusive(what.to_string());
    match suite {
        Suite::BhatiaSemrl => {
            let c = attempt!(bj_crosscheck(a, b, tol));
            if c.spectral.holds() {
                match &c.witness {
                    Some(w) if !w.is_valid(spectral_norm(a), spectral_norm(b)) => {
                        return TrialOutcome::Failed(format!(
                            "witness residuals {:e}, {:e} exceed bounds",
                            w.attainment_residual, w.pairing_residual
                        ))
                    }
                    Some(_) => {}
                    None => return TrialOutcome::Failed("spectral criterion holds without a witness".into()),
                }
            }
            let decisive_fail = c.spectral.fails() && -c.spectral.margin > c.resolution;
            if (c.spectral.holds() || decisive_fail) && c.minimization.decision != Decision::Inconclusive {
                TrialOutcome::Passed
            } else {
                inconclusive("margin inside the crosscheck resolution")
            }
        }
        Suite::Prop41 => {
            if !attempt!(disjoint_support(a, b, tol)) {
                return TrialOutcome::Failed("generated pair lacks disjoint support".into());
            }
            let r = attempt!(disjoint_support_consequences(a, b, tol));
            if r.all_hold() {
                TrialOutcome::Passed
            } else {
                inconclusive("a relation landed in the tolerance band")
            }
        }
        Suite::Kittaneh => {
            attempt!(kittaneh_bounds(a, b, tol));
            TrialOutcome::Passed
        }
        Suite::IsoMax => {
            let r = attempt!(positive_iso_check(a, b, tol));
            let w = attempt!(positive_iso_witness(a, b, tol));
            match (r.decision, w.is_some()) {
                (Decision::Inconclusive, _) => inconclusive("isosceles margin in band"),
                (Decision::Holds, false) => {
                    TrialOutcome::Failed("isosceles positive pair without a witness".into())
                }
                _ => TrialOutcome::Passed,
            }
        }
        Suite::Cariso => {
            let r = attempt!(accretive_iso_corollary(a, b, tol));
            if r.iso.fails() || r.decision == Decision::Holds {
                TrialOutcome::Passed
            } else {
                inconclusive("corollary not decisively exercised")
            }
        }
        Suite::Projections => {
            let r = attempt!(projection_propositions(a, b, tol));
            if r.iso.decision == Decision::Inconclusive {
                inconclusive("isosceles margin in band")
            } else {
                TrialOutcome::Passed
            }
        }
        Suite::Invertible => {
            let r = attempt!(invertible_pair_impossibility(a, b, tol));
            if r.iso.fails() && r.bj.fails() {
                TrialOutcome::Passed
            } else {
                inconclusive("a failure margin landed in the band")
            }
        }
        Suite::Prop51 => {
            let r = attempt!(iso_from_double_bj(ea, eb, tol));
            if r.holds() {
                TrialOutcome::Passed
            } else {
                inconclusive("a hypothesis was not confirmed")
            }
        }
        Suite::SiBj => match bj_from_si(ea, eb, tol) {
            Ok(r) if r.holds() => TrialOutcome::Passed,
            Ok(_) => inconclusive("r-orthogonality margin in band"),
            Err(Error::PreconditionUnmet(m)) => inconclusive(&m),
            Err(e) => violation(e),
        },
        Suite::Thm33 => planted_witness(a, b, tol),
        Suite::Thm35 => {
            if inst.construction == "thm34-truncation" {
                let r = attempt!(bj_check(ea, eb, tol));
                let (s, _) = attempt!(bj_spectral(a, b, tol));
                if r.fails() && s.fails() {
                    TrialOutcome::Passed
                } else {
                    TrialOutcome::Failed(format!("truncation reported {} / {}", r.decision, s.decision))
                }
            } else {
                let r = attempt!(bj_check(ea, eb, tol));
                if r.fails() {
                    return TrialOutcome::Failed("planted pair fails Birkhoff-James orthogonality".into());
                }
                planted_witness(a, b, tol)
            }
        }
        Suite::Gamma => gamma_trial(inst, tol),
        Suite::AttainmentPairing => {
            let r = attempt!(attainment_pairing_check(a, b, tol));
            if r.iso.decision == Decision::Inconclusive {
                inconclusive("isosceles margin in band")
            } else {
                TrialOutcome::Passed
            }
        }
        Suite::IntersectionZero => {
            let field = a.field().join(b.field());
            if field.is_real() {
                let r = attempt!(intersection_zero_check(a, b, tol));
                match r.zero_exists {
                    None => TrialOutcome::Failed("construction did not exceed the dimension bound".into()),
                    Some(_) if r.iso.decision == Decision::Inconclusive => {
                        inconclusive("isosceles margin in band")
                    }
                    Some(_) => TrialOutcome::Passed,
                }
            } else {
                attempt!(intersection_zero_check_complex(a, b, tol));
                TrialOutcome::Passed
            }
        }
    }
}

fn planted_witness(t: &Matrix, a: &Matrix, tol: &Tolerances) -> TrialOutcome {
    let s = attempt!(bj_spectral_full(t, a, tol));
    if !s.report.holds() {
        return TrialOutcome::Failed(format!("planted pair: spectral criterion {}", s.report.decision));
    }
    let Some(w) = s.witness else {
        return TrialOutcome::Failed("no witness in the attainment set".into());
    };
    if !w.is_valid(spectral_norm(t), spectral_norm(a)) {
        return TrialOutcome::Failed(format!(
            "witness residuals {:e}, {:e} exceed bounds",
            w.attainment_residual, w.pairing_residual
        ));
    }
    if !attempt!(o_ta_member(t, a, &w.vector, &tol.with_eq_tol(1e-6).unwrap_or(*tol))) {
        return TrialOutcome::Failed("witness is not in O_{T,A}".into());
    }
    TrialOutcome::Passed
}

fn gamma_trial(inst: &Instance, tol: &Tolerances) -> TrialOutcome {
    let (t, a) = (inst.matrix(0), inst.matrix(1));
    let g = attempt!(gamma_test(t, a, GAMMA_SAMPLES, inst.seed, tol));
    let structural = matches!(inst.construction.as_str(), "disjoint-support-pair" | "nested-projections");
    if structural && !matches!(g, GammaOutcome::MemberEvidence(_)) {
        return TrialOutcome::Failed(format!("{} pair not certified: {:?}", inst.construction, g));
    }
    let probe = match o_ta_subspace_probe(t, a, GAMMA_SAMPLES, inst.seed, tol) {
        Ok(p) => Some(p),
        Err(Error::DegenerateZeroSet) => None,
        Err(e) => return violation(e),
    };
    match (&g, &probe) {
        (GammaOutcome::Counterexample { .. }, Some(ProbeOutcome::Violation { .. })) => TrialOutcome::Passed,
        (GammaOutcome::Counterexample { .. }, _) => {
            TrialOutcome::Failed("gamma counterexample without a probe violation".into())
        }
        (GammaOutcome::MemberEvidence(_), Some(ProbeOutcome::Violation { value, .. })) => {
            TrialOutcome::Failed(format!("certified pair has a non-closed zero set ({value})"))
        }
        _ => TrialOutcome::Passed,
    }
}

/// One reproduced number.
#[derive(Debug, Clone, PartialEq)]
pub struct ExampleRow {
    pub id: &'static str,
    pub quantity: String,
    pub expected: f64,
    pub computed: f64,
    pub delta: f64,
    pub tolerance: f64,
}

impl ExampleRow {
    fn new(id: &'static str, quantity: impl Into<String>, expected: f64, computed: f64, tolerance: f64) -> ExampleRow {
        ExampleRow { id, quantity: quantity.into(), expected, computed, delta: (expected - computed).abs(), tolerance }
    }

    pub fn ok(&self) -> bool {
        self.delta <= self.tolerance
    }
}

/// Exact rows use this tolerance.
pub const EXACT_TOL: f64 = 1e-12;
/// Rows produced by a scalar minimization.
pub const SEARCH_ROW_TOL: f64 = 1e-9;

pub const THM34_SIZES: [usize; 4] = [4, 10, 50, 100];

/// Closed form of ‖Tₙ‖ − min_λ ‖Tₙ + λAₙ‖ for the truncations (n ≥ 4).
pub fn thm34_gap(n: usize) -> f64 {
    let n = n as f64;
    (3.0 * n - 2.0) / (2.0 * n * (n + 1.0))
}

fn flag(b: bool) -> f64 {
    if b {
        1.0
    } else {
        0.0
    }
}

fn norm_along(x: &NormedElement, y: &NormedElement, l: f64) -> f64 {
    x.norm_along(y, C64::new(l, 0.0))
}

pub fn reproduce_examples() -> Result<Vec<ExampleRow>> {
    let tol = Tolerances::default();
    let mut rows = Vec::new();

    let a = Matrix::diag_real(&[4.0, 3.0]);
    let b = Matrix::diag_real(&[0.0, 1.0]);
    let (ea, eb) = (NormedElement::operator(a.clone()), NormedElement::operator(b.clone()));
    rows.push(ExampleRow::new("example-4.3", "|A+B|", 4.0, norm_along(&ea, &eb, 1.0), EXACT_TOL));
    rows.push(ExampleRow::new("example-4.3", "|A-B|", 4.0, norm_along(&ea, &eb, -1.0), EXACT_TOL));
    let ab = &a.adjoint() * &b;
    rows.push(ExampleRow::new("example-4.3", "|A*B - diag(0,3)|", 0.0, (&ab - &Matrix::diag_real(&[0.0, 3.0])).max_abs(), EXACT_TOL));

    for k in 1..=20 {
        let l = libm::ldexp(1.0, -k);
        rows.push(ExampleRow::new("example-5.5", format!("|A+2^-{k}B|"), 4.0, norm_along(&ea, &eb, l), EXACT_TOL));
        rows.push(ExampleRow::new("example-5.5", format!("|A-2^-{k}B|"), 4.0, norm_along(&ea, &eb, -l), EXACT_TOL));
    }
    rows.push(ExampleRow::new("example-5.5", "|A+5B|", 8.0, norm_along(&ea, &eb, 5.0), EXACT_TOL));
    rows.push(ExampleRow::new("example-5.5", "|A-5B|", 4.0, norm_along(&ea, &eb, -5.0), EXACT_TOL));
    rows.push(ExampleRow::new("example-5.5", "si holds", 1.0, flag(si_check(&ea, &eb, &tol)?.holds()), 0.0));
    let rob = roberts_check_with_probes(&ea, &eb, &tol, &[C64::new(5.0, 0.0)])?;
    rows.push(ExampleRow::new("example-5.5", "roberts fails", 1.0, flag(rob.fails()), 0.0));
    rows.push(ExampleRow::new("example-5.5", "roberts lambda*", 5.0, rob.evidence.lambda.map_or(f64::NAN, |l| l.re), EXACT_TOL));

    let s1 = NormDescriptor::SchattenP(1.0);
    let x = NormedElement::new(Matrix::diag_real(&[1.0, -2.0]), s1)?;
    let id = NormedElement::new(Matrix::identity(2, Field::Real), s1)?;
    rows.push(ExampleRow::new("example-5.6", "|A+I|_1", 3.0, norm_along(&x, &id, 1.0), EXACT_TOL));
    rows.push(ExampleRow::new("example-5.6", "|A-I|_1", 3.0, norm_along(&x, &id, -1.0), EXACT_TOL));
    for k in 1..=20 {
        let l = libm::ldexp(1.0, -k);
        rows.push(ExampleRow::new("example-5.6", format!("|A+2^-{k}I|_1"), 3.0, norm_along(&x, &id, l), EXACT_TOL));
        rows.push(ExampleRow::new("example-5.6", format!("|A-2^-{k}I|_1"), 3.0, norm_along(&x, &id, -l), EXACT_TOL));
    }
    rows.push(ExampleRow::new("example-5.6", "|A+2I|_1", 3.0, norm_along(&x, &id, 2.0), EXACT_TOL));
    rows.push(ExampleRow::new("example-5.6", "|A-2I|_1", 5.0, norm_along(&x, &id, -2.0), EXACT_TOL));
    rows.push(ExampleRow::new("example-5.6", "si holds", 1.0, flag(si_check(&x, &id, &tol)?.holds()), 0.0));
    let rob = roberts_check_with_probes(&x, &id, &tol, &[C64::new(2.0, 0.0)])?;
    rows.push(ExampleRow::new("example-5.6", "roberts fails", 1.0, flag(rob.fails()), 0.0));

    let p = Matrix::diag_real(&[1.0, 1.0, 0.0]);
    let q = Matrix::diag_real(&[0.0, 1.0, 1.0]);
    let (ep, eq) = (NormedElement::operator(p.clone()), NormedElement::operator(q.clone()));
    rows.push(ExampleRow::new("planes", "|P+Q|", 2.0, norm_along(&ep, &eq, 1.0), EXACT_TOL));
    rows.push(ExampleRow::new("planes", "|P-Q|", 1.0, norm_along(&ep, &eq, -1.0), EXACT_TOL));
    rows.push(ExampleRow::new("planes", "iso fails", 1.0, flag(iso_check(&ep, &eq, &tol)?.fails()), 0.0));
    rows.push(ExampleRow::new("planes", "P bj Q", 1.0, flag(bj_check(&ep, &eq, &tol)?.holds()), 0.0));
    rows.push(ExampleRow::new("planes", "Q bj P", 1.0, flag(bj_check(&eq, &ep, &tol)?.holds()), 0.0));

    let pn = Matrix::diag_real(&[1.0, 1.0, 0.0]);
    let pm = Matrix::diag_real(&[1.0, 0.0, 0.0]);
    let (s, w) = bj_spectral(&pn, &pm, &tol)?;
    rows.push(ExampleRow::new("remark-3.7", "P_N bj P_M", 1.0, flag(s.holds()), 0.0));
    let e2 = w.map_or(f64::NAN, |w| w.vector[1].norm());
    rows.push(ExampleRow::new("remark-3.7", "|<witness, e2>|", 1.0, e2, 1e-10));
    let gamma = gamma_test(&pn, &pm, GAMMA_SAMPLES, 0, &tol)?;
    rows.push(ExampleRow::new("remark-3.7", "gamma member", 1.0, flag(matches!(gamma, GammaOutcome::MemberEvidence(_))), 0.0));
    rows.push(ExampleRow::new("remark-3.7", "disjoint support", 0.0, flag(disjoint_support(&pn, &pm, &tol)?), 0.0));

    for n in THM34_SIZES {
        let (t, a) = thm34_truncation(n);
        let (et, ea) = (NormedElement::operator(t.clone()), NormedElement::operator(a.clone()));
        let r = bj_check(&et, &ea, &tol)?;
        rows.push(ExampleRow::new("thm-3.4", format!("delta_{n}"), thm34_gap(n), -r.margin, SEARCH_ROW_TOL));
        let s = bj_spectral_full(&t, &a, &tol)?;
        let k = -s.report.margin * spectral_norm(&t) * spectral_norm(&a);
        let nf = n as f64;
        rows.push(ExampleRow::new("thm-3.4", format!("compression_{n}"), (nf - 1.0) / (nf * nf), k, EXACT_TOL));
    }
    Ok(rows)
}

/// δₙ for each truncation size, by direct minimization.
pub fn thm34_gaps(tol: &Tolerances) -> Result<Vec<(usize, f64)>> {
    THM34_SIZES
        .iter()
        .map(|&n| {
            let (t, a) = thm34_truncation(n);
            let r = bj_check(&NormedElement::operator(t), &NormedElement::operator(a), tol)?;
            Ok((n, -r.margin))
        })
        .collect()
}
