use alloc::string::ToString;

use super::{classify, Evidence, OrthReport, Relation};
use crate::error::{Error, Result};
use crate::linalg::{Field, C64};
use crate::norms::{check_compatible, NormedElement};
use crate::search::{brent, planar};
use crate::tol::Tolerances;

fn lambda_field(x: &NormedElement, y: &NormedElement) -> Field {
    x.field().join(y.field())
}

/// Birkhoff-James: ‖x‖ ≤ ‖x + λy‖ for every scalar λ.
pub fn bj_check(x: &NormedElement, y: &NormedElement, tol: &Tolerances) -> Result<OrthReport> {
    check_compatible(x, y)?;
    let f0 = x.norm();
    let ny = y.norm();
    if ny == 0.0 || f0 == 0.0 {
        return Ok(OrthReport::trivially_holds(Relation::BirkhoffJames));
    }
    let r = 2.0 * f0 / ny;
    let xatol = tol.search_tol * r;
    let field = lambda_field(x, y);

    #[cfg(debug_assertions)]
    assert_convex(x, y, r, field, f0 + r * ny);

    let (lambda, m) = match field {
        Field::Real => {
            let best = brent(|t| x.norm_along(y, C64::new(t, 0.0)), -r, r, xatol);
            (C64::new(best.x, 0.0), best.fx)
        }
        Field::Complex => {
            let best = planar(|a, b| x.norm_along(y, C64::new(a, b)), r, xatol);
            (C64::new(best.x, best.y), best.fxy)
        }
    };
    let (lambda, m) = if m < f0 { (lambda, m) } else { (C64::new(0.0, 0.0), f0) };
    let band = tol.eq_tol * f0;
    let mut report = OrthReport::from_margin(Relation::BirkhoffJames, m - f0, band);
    report.evidence = Evidence { lambda: Some(lambda), value: Some(m), ..Evidence::default() };
    report.evidence.quantities.push(("norm_x", f0));
    if boundary_hit(lambda, r) && report.margin < -band {
        report.notes.push("minimizer on the search boundary".to_string());
    }
    Ok(report)
}

fn boundary_hit(lambda: C64, r: f64) -> bool {
    lambda.re.abs() >= r * (1.0 - 1e-9) || lambda.im.abs() >= r * (1.0 - 1e-9)
}

/// Midpoint convexity of λ ↦ ‖x + λy‖ on 32 fixed random triples.
#[cfg(debug_assertions)]
fn assert_convex(x: &NormedElement, y: &NormedElement, r: f64, field: Field, scale: f64) {
    use crate::random::{rng_from_seed, uniform_in};
    let mut rng = rng_from_seed(0x0c0f_fee5);
    let draw = |rng: &mut crate::random::Rng| match field {
        Field::Real => C64::new(uniform_in(rng, -r, r), 0.0),
        Field::Complex => C64::new(uniform_in(rng, -r, r), uniform_in(rng, -r, r)),
    };
    for _ in 0..32 {
        let a = draw(&mut rng);
        let b = draw(&mut rng);
        let fm = x.norm_along(y, (a + b) * 0.5);
        let avg = 0.5 * (x.norm_along(y, a) + x.norm_along(y, b));
        assert!(fm <= avg + 1e-12 * scale, "norm is not convex along the pencil");
    }
}

/// Membership of y in x⁺ and x⁻.
#[derive(Debug, Clone, PartialEq)]
pub struct XReport {
    pub plus: OrthReport,
    pub minus: OrthReport,
}

impl XReport {
    /// r-orthogonality: both halves hold.
    pub fn r_orthogonal(&self) -> bool {
        self.plus.holds() && self.minus.holds()
    }

    /// The two halves folded into a single r-orthogonality report.
    pub fn combined(&self) -> OrthReport {
        let worse = if self.plus.margin <= self.minus.margin { &self.plus } else { &self.minus };
        let band = self.plus.band.max(self.minus.band);
        let mut out = OrthReport::from_margin(Relation::ROrthogonal, worse.margin, band);
        out.evidence = worse.evidence.clone();
        out.trivial = self.plus.trivial && self.minus.trivial;
        out
    }
}

/// Half-line versions of Birkhoff-James over real λ ≥ 0 and λ ≤ 0.
pub fn xplus_xminus(x: &NormedElement, y: &NormedElement, tol: &Tolerances) -> Result<XReport> {
    check_compatible(x, y)?;
    if lambda_field(x, y) == Field::Complex {
        return Err(Error::ComplexFieldUnsupported);
    }
    let f0 = x.norm();
    let ny = y.norm();
    if ny == 0.0 || f0 == 0.0 {
        return Ok(XReport {
            plus: OrthReport::trivially_holds(Relation::XPlus),
            minus: OrthReport::trivially_holds(Relation::XMinus),
        });
    }
    let r = 2.0 * f0 / ny;
    let band = tol.eq_tol * f0;
    let half = |relation: Relation, lo: f64, hi: f64| {
        let best = brent(|t| x.norm_along(y, C64::new(t, 0.0)), lo, hi, tol.search_tol * r);
        let (t, m) = if best.fx < f0 { (best.x, best.fx) } else { (0.0, f0) };
        let mut rep = OrthReport::from_margin(relation, m - f0, band);
        rep.decision = classify(rep.margin, band);
        rep.evidence = Evidence {
            lambda: Some(C64::new(t, 0.0)),
            value: Some(m),
            ..Evidence::default()
        };
        rep
    };
    Ok(XReport { plus: half(Relation::XPlus, 0.0, r), minus: half(Relation::XMinus, -r, 0.0) })
}
