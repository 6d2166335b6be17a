use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::{bj_check, classify, iso_check, xplus_xminus, Confidence, Decision, OrthReport, Relation};
use crate::error::{Error, Result};
use crate::linalg::{Field, C64};
use crate::norms::{check_compatible, NormedElement};
use crate::search::bisect;
use crate::tol::Tolerances;

pub const DEFAULT_SI_DEPTH: u32 = 40;

/// Samples per dyadic interval, endpoints included.
const SAMPLES: usize = 17;

pub fn si_check(x: &NormedElement, y: &NormedElement, tol: &Tolerances) -> Result<OrthReport> {
    si_check_depth(x, y, tol, DEFAULT_SI_DEPTH)
}

/// Strong isosceles: isosceles plus roots of h(t) = ‖x + tŷ‖ − ‖x − tŷ‖ in
/// every dyadic interval [2^{−k−1}, 2^{−k}], k = 0..=depth, with ŷ = y/‖y‖.
pub fn si_check_depth(
    x: &NormedElement,
    y: &NormedElement,
    tol: &Tolerances,
    depth: u32,
) -> Result<OrthReport> {
    check_compatible(x, y)?;
    if x.field().join(y.field()) == Field::Complex {
        return Err(Error::ComplexFieldUnsupported);
    }
    let ny = y.norm();
    if ny == 0.0 {
        let mut rep = OrthReport::trivially_holds(Relation::StrongIsosceles);
        rep.confidence = Confidence::Depth { depth };
        return Ok(rep);
    }
    let iso = iso_check(x, y, tol)?;
    if !iso.holds() {
        let mut rep = OrthReport::from_margin(Relation::StrongIsosceles, iso.margin, iso.band);
        rep.evidence = iso.evidence;
        rep.notes.push("isosceles stage failed".to_string());
        return Ok(rep);
    }

    let yhat = y.scaled(C64::new(1.0 / ny, 0.0));
    let h = |t: f64| x.norm_along(&yhat, C64::new(t, 0.0)) - x.norm_along(&yhat, C64::new(-t, 0.0));
    let band = tol.eq_tol * x.norm().max(f64::MIN_POSITIVE);
    let mut roots = Vec::with_capacity(depth as usize + 1);
    let mut worst = 0.0f64;

    for k in 0..=depth {
        let hi = libm::ldexp(1.0, -(k as i32));
        let lo = 0.5 * hi;
        let ts: Vec<f64> = (0..SAMPLES)
            .map(|i| lo + (hi - lo) * i as f64 / (SAMPLES - 1) as f64)
            .collect();
        let hs: Vec<f64> = ts.iter().map(|&t| h(t)).collect();
        match locate_root(&ts, &hs, band, &h) {
            Some((t, v)) => {
                worst = worst.max(v.abs());
                roots.push(t / ny);
            }
            None => {
                let (i, closest) = hs
                    .iter()
                    .enumerate()
                    .map(|(i, v)| (i, v.abs()))
                    .min_by(|a, b| a.1.total_cmp(&b.1))
                    .expect("samples");
                let mut rep = OrthReport::from_margin(Relation::StrongIsosceles, -closest, band);
                rep.confidence = Confidence::Depth { depth: k };
                rep.evidence.lambda = Some(C64::new(ts[i] / ny, 0.0));
                rep.evidence.value = Some(hs[i]);
                rep.evidence.roots = roots;
                rep.notes.push(format!("no root in dyadic interval {k}"));
                return Ok(rep);
            }
        }
    }
    let mut rep = OrthReport::from_margin(Relation::StrongIsosceles, -worst, band);
    rep.confidence = Confidence::Depth { depth };
    rep.evidence.roots = roots;
    Ok(rep)
}

/// A root of h among samples: the lower endpoint when h vanishes on the whole
/// interval, otherwise the first near-zero sample or a bisected sign change.
fn locate_root(ts: &[f64], hs: &[f64], band: f64, h: &impl Fn(f64) -> f64) -> Option<(f64, f64)> {
    if hs.iter().all(|v| v.abs() <= band) {
        return Some((ts[0], hs[0]));
    }
    if let Some(i) = hs.iter().position(|v| v.abs() <= band) {
        return Some((ts[i], hs[i]));
    }
    for i in 0..hs.len() - 1 {
        if (hs[i] > 0.0) != (hs[i + 1] > 0.0) {
            let t = bisect(h, ts[i], ts[i + 1], 1e-16 * ts[i + 1]);
            return Some((t, h(t)));
        }
    }
    None
}

/// Monitors the implication strong isosceles ⟹ r-orthogonality.
pub fn bj_from_si(x: &NormedElement, y: &NormedElement, tol: &Tolerances) -> Result<OrthReport> {
    let si = si_check(x, y, tol)?;
    if !si.holds() {
        return Err(Error::PreconditionUnmet(format!(
            "strong isosceles orthogonality is {} (margin {:e})",
            si.decision, si.margin
        )));
    }
    let r = xplus_xminus(x, y, tol)?.combined();
    if r.fails() {
        return Err(Error::TheoremViolation(format!(
            "strong isosceles pair is not r-orthogonal: |x + {}y| = {} < |x| by {:e}",
            r.evidence.lambda.map_or(0.0, |l| l.re),
            r.evidence.value.unwrap_or(f64::NAN),
            -r.margin
        )));
    }
    Ok(r)
}

/// Monitors (x + y) ⊥_B y and (x − y) ⊥_B y ⟹ x ⊥_I y.
pub fn iso_from_double_bj(x: &NormedElement, y: &NormedElement, tol: &Tolerances) -> Result<OrthReport> {
    check_compatible(x, y)?;
    let one = C64::new(1.0, 0.0);
    let sum = x.plus_scaled(y, one)?;
    let diff = x.plus_scaled(y, -one)?;
    let h_sum = bj_check(&sum, y, tol)?;
    let h_diff = bj_check(&diff, y, tol)?;
    let mut iso = iso_check(x, y, tol)?;
    if x.field().join(y.field()) == Field::Complex {
        let plus = iso.evidence.quantity("norm_plus").unwrap_or(0.0);
        let minus = iso.evidence.quantity("norm_minus").unwrap_or(0.0);
        iso.margin = -(plus - minus).abs();
        iso.band = tol.eq_tol * plus.max(minus);
        iso.decision = classify(iso.margin, iso.band);
        iso.notes.push("complex field: only |x+y| = |x-y| is implied".into());
    }
    if !h_sum.holds() || !h_diff.holds() {
        let which = if !h_sum.holds() { "(x+y) bj y" } else { "(x-y) bj y" };
        iso.decision = Decision::Inconclusive;
        iso.notes.push(format!("hypothesis {which} is {}", if !h_sum.holds() { h_sum.decision } else { h_diff.decision }));
        return Ok(iso);
    }
    if iso.fails() {
        return Err(Error::TheoremViolation(format!(
            "both Birkhoff-James hypotheses hold but |x+y| - |x-y| = {:e}",
            -iso.margin
        )));
    }
    iso.decision = classify(iso.margin, iso.band);
    Ok(iso)
}
