use alloc::vec::Vec;

use super::{Confidence, Evidence, OrthReport, Relation};
use crate::error::Result;
use crate::linalg::{Field, C64};
use crate::math::{cos, powf, sin};
use crate::norms::{check_compatible, NormedElement};
use crate::tol::Tolerances;

/// Magnitudes on the real grid (each used with both signs).
pub const ROBERTS_REAL_GRID: usize = 512;
/// Magnitudes and phases on the complex grid.
pub const ROBERTS_COMPLEX_GRID: usize = 64;

/// Roberts: ‖x + λy‖ = ‖x − λy‖ for every scalar λ, checked on a grid.
pub fn roberts_check(x: &NormedElement, y: &NormedElement, tol: &Tolerances) -> Result<OrthReport> {
    roberts_check_with_probes(x, y, tol, &[])
}

/// As [`roberts_check`], with caller-chosen scalars tried before the grid.
/// The first violating probe, if any, is the reported λ*.
pub fn roberts_check_with_probes(
    x: &NormedElement,
    y: &NormedElement,
    tol: &Tolerances,
    probes: &[C64],
) -> Result<OrthReport> {
    check_compatible(x, y)?;
    let nx = x.norm();
    let ny = y.norm();
    if ny == 0.0 || nx == 0.0 {
        let mut rep = OrthReport::trivially_holds(Relation::Roberts);
        rep.confidence = Confidence::Grid { points: 0 };
        return Ok(rep);
    }
    let r = 4.0 * nx / ny;
    let band = tol.eq_tol * (nx + r * ny);
    let d = |lambda: C64| (x.norm_along(y, lambda) - x.norm_along(y, -lambda)).abs();

    let grid = grid(r, x.field().join(y.field()));
    let mut worst = (C64::new(0.0, 0.0), 0.0);
    for &lambda in &grid {
        let v = d(lambda);
        if v > worst.1 {
            worst = (lambda, v);
        }
    }
    let mut chosen = worst;
    let mut max_dev = worst.1;
    for &p in probes {
        let v = d(p);
        max_dev = max_dev.max(v);
        if v > band {
            chosen = (p, v);
            break;
        }
    }
    let mut report = OrthReport::from_margin(Relation::Roberts, -max_dev, band);
    report.confidence = Confidence::Grid { points: grid.len() + probes.len() };
    let lambda = chosen.0;
    report.evidence = Evidence {
        lambda: Some(lambda),
        value: Some(chosen.1),
        quantities: alloc::vec![
            ("norm_plus_lambda", x.norm_along(y, lambda)),
            ("norm_minus_lambda", x.norm_along(y, -lambda)),
        ],
        ..Evidence::default()
    };
    Ok(report)
}

fn grid(r: f64, field: Field) -> Vec<C64> {
    let mags = |count: usize| -> Vec<f64> {
        (0..count)
            .map(|k| 1e-3 * r * powf(1e3, k as f64 / (count - 1) as f64))
            .collect()
    };
    match field {
        Field::Real => mags(ROBERTS_REAL_GRID)
            .into_iter()
            .flat_map(|m| [C64::new(m, 0.0), C64::new(-m, 0.0)])
            .collect(),
        Field::Complex => {
            let n = ROBERTS_COMPLEX_GRID;
            let mut out = Vec::with_capacity(n * n);
            for m in mags(n) {
                for j in 0..n {
                    let th = 2.0 * core::f64::consts::PI * j as f64 / n as f64;
                    out.push(C64::new(m * cos(th), m * sin(th)));
                }
            }
            out
        }
    }
}
