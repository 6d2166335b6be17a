use super::{Evidence, OrthReport, Relation};
use crate::error::Result;
use crate::linalg::{Field, C64, I};
use crate::norms::{check_compatible, NormedElement};
use crate::tol::Tolerances;

/// Isosceles: ‖x + y‖ = ‖x − y‖, and over ℂ also ‖x + iy‖ = ‖x − iy‖.
pub fn iso_check(x: &NormedElement, y: &NormedElement, tol: &Tolerances) -> Result<OrthReport> {
    check_compatible(x, y)?;
    let one = C64::new(1.0, 0.0);
    let plus = x.norm_along(y, one);
    let minus = x.norm_along(y, -one);
    let mut quantities = alloc::vec![("norm_plus", plus), ("norm_minus", minus)];
    let mut deviation = (plus - minus).abs();
    let mut scale = plus.max(minus);
    if x.field().join(y.field()) == Field::Complex {
        let iplus = x.norm_along(y, I);
        let iminus = x.norm_along(y, -I);
        quantities.push(("norm_plus_i", iplus));
        quantities.push(("norm_minus_i", iminus));
        deviation = deviation.max((iplus - iminus).abs());
        scale = scale.max(iplus).max(iminus);
    }
    let mut report = OrthReport::from_margin(Relation::Isosceles, 0.0 - deviation, tol.eq_tol * scale);
    report.trivial = y.norm() == 0.0;
    report.evidence = Evidence { value: Some(deviation), quantities, ..Evidence::default() };
    Ok(report)
}
