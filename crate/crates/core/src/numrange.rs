//! Numerical range W(K) = {zᴴKz : ‖z‖ = 1} of a square matrix.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::Result;
use crate::linalg::{hermitian_eigen, vector, Matrix, C64};
use crate::math::{cos, sin};
use crate::search::{bisect, brent};

/// zᴴKz.
pub fn form(k: &Matrix, z: &[C64]) -> C64 {
    vector::dot(z, &k.mul_vec(z))
}

/// Boundary data from support directions θ: h(θ) = max Re(e^{−iθ}w) over W.
#[derive(Debug, Clone)]
pub struct RangeSweep {
    pub angles: Vec<f64>,
    pub support: Vec<f64>,
    /// Boundary point attaining h(θ).
    pub points: Vec<C64>,
    /// Unit vector whose form value is the boundary point.
    pub vectors: Vec<Vec<C64>>,
}

fn support_at(k: &Matrix, theta: f64) -> Result<(f64, C64, Vec<C64>)> {
    let rot = k.scale(C64::new(cos(theta), -sin(theta)));
    let e = hermitian_eigen(&rot.hermitian_part())?;
    let v = e.vector(0);
    Ok((e.max(), form(k, &v), v))
}

pub fn sweep(k: &Matrix, count: usize) -> Result<RangeSweep> {
    let mut out = RangeSweep {
        angles: Vec::with_capacity(count),
        support: Vec::with_capacity(count),
        points: Vec::with_capacity(count),
        vectors: Vec::with_capacity(count),
    };
    for j in 0..count {
        let theta = 2.0 * PI * j as f64 / count as f64;
        let (h, p, v) = support_at(k, theta)?;
        out.angles.push(theta);
        out.support.push(h);
        out.points.push(p);
        out.vectors.push(v);
    }
    Ok(out)
}

/// Signed distance from 0 to the boundary of W(K): positive when 0 is
/// interior, negative (minus the distance to W) when 0 lies outside.
/// The refined minimizing direction is appended to the sweep.
pub fn zero_margin(k: &Matrix, count: usize) -> Result<(f64, RangeSweep)> {
    let mut sw = sweep(k, count)?;
    let (j, _) = sw
        .support
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("nonempty sweep");
    let step = 2.0 * PI / count as f64;
    let center = sw.angles[j];
    let best = brent(
        |th| support_at(k, th).map(|s| s.0).unwrap_or(f64::INFINITY),
        center - step,
        center + step,
        1e-12,
    );
    let mut margin = sw.support[j];
    if best.fx < margin {
        margin = best.fx;
        let (h, p, v) = support_at(k, best.x)?;
        sw.angles.push(best.x);
        sw.support.push(h);
        sw.points.push(p);
        sw.vectors.push(v);
    }
    Ok((margin, sw))
}

/// Finds unit z with zᴴKz = 0, given a sweep whose boundary polygon (or one
/// of whose chords) contains 0, and an anchor vector steering the choice.
pub fn zero_preimage(k: &Matrix, sw: &RangeSweep, anchor: &[C64]) -> Option<Vec<C64>> {
    let scale = k.max_abs().max(f64::MIN_POSITIVE);
    let tiny = 1e-14 * scale;
    let anchor = vector::normalize(anchor)?;
    let wa = form(k, &anchor);
    if wa.norm() <= tiny {
        return Some(anchor);
    }
    if let Some(j) = (0..sw.points.len()).find(|&j| sw.points[j].norm() <= tiny) {
        return Some(sw.vectors[j].clone());
    }

    if let Some(z) = through_polygon(k, sw, &anchor, wa) {
        return Some(z);
    }

    let mut pts: Vec<(C64, &[C64])> = sw.points.iter().copied().zip(sw.vectors.iter().map(|v| v.as_slice())).collect();
    pts.push((wa, &anchor));
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let (p, q) = (pts[i].0, pts[j].0);
            let cross = (p.conj() * q).im;
            let along = (p.conj() * q).re;
            if along < 0.0 && cross.abs() <= 1e-9 * p.norm() * q.norm() {
                if let Some(z) = solve_segment(k, pts[i].1, pts[j].1, C64::new(0.0, 0.0)) {
                    return Some(z);
                }
            }
        }
    }
    None
}

/// Shoots a ray from the anchor's value through 0 to the far polygon edge,
/// lifts the hit point to a vector, then solves along the chord back to the anchor.
fn through_polygon(k: &Matrix, sw: &RangeSweep, anchor: &[C64], wa: C64) -> Option<Vec<C64>> {
    let d = -wa / wa.norm();
    let n = sw.points.len();
    let mut hit: Option<(f64, usize, usize, f64)> = None;
    for j in 0..n {
        let jn = (j + 1) % n;
        let (p, q) = (sw.points[j], sw.points[jn]);
        let e = q - p;
        if e.norm() == 0.0 {
            continue;
        }
        // wa + s·d = p + u·e
        let det = -d.re * e.im + e.re * d.im;
        if det.abs() <= 1e-14 * e.norm() {
            continue;
        }
        let r = p - wa;
        let s = (-r.re * e.im + e.re * r.im) / det;
        let u = (d.re * r.im - d.im * r.re) / det;
        if (-1e-12..=1.0 + 1e-12).contains(&u) && s >= wa.norm() && hit.is_none_or(|h| s > h.0) {
            hit = Some((s, j, jn, u.clamp(0.0, 1.0)));
        }
    }
    let (s, j, jn, u) = hit?;
    let q = wa + d * s;
    let lifted = if u <= 0.0 {
        sw.vectors[j].clone()
    } else if u >= 1.0 {
        sw.vectors[jn].clone()
    } else {
        solve_segment(k, &sw.vectors[j], &sw.vectors[jn], q)?
    };
    if q.norm() <= 1e-14 * k.max_abs() {
        return Some(lifted);
    }
    solve_segment(k, anchor, &lifted, C64::new(0.0, 0.0))
}

/// Given unit z1, z2 whose values lie on opposite sides of `w` along one
/// line, returns unit z in span{z1, z2} with zᴴKz = w.
pub fn solve_segment(k: &Matrix, z1: &[C64], z2: &[C64], w: C64) -> Option<Vec<C64>> {
    let l = |z: &[C64]| form(k, z) - w * vector::dot(z, z);
    let l1 = l(z1);
    let l2 = l(z2);
    let tiny = 1e-15 * k.max_abs().max(w.norm()).max(f64::MIN_POSITIVE);
    if l1.norm() <= tiny {
        return vector::normalize(z1);
    }
    if l2.norm() <= tiny {
        return vector::normalize(z2);
    }
    let rho = l1.conj() / l1.norm();
    if (rho * l2).re >= 0.0 {
        return None;
    }
    // Skew part of ρ(K − w) between z1 and z2; the phase on z2 makes it vanish.
    let kz2 = k.mul_vec(z2);
    let kz1 = k.mul_vec(z1);
    let a12 = vector::dot(z1, &kz2) - w * vector::dot(z1, z2);
    let a21 = vector::dot(z2, &kz1) - w * vector::dot(z2, z1);
    let skew = (rho * a12 - (rho * a21).conj()) / C64::new(0.0, 2.0);
    let phase = if skew.norm() > tiny { C64::new(0.0, 1.0) * skew.conj() / skew.norm() } else { C64::new(1.0, 0.0) };
    let z2p: Vec<C64> = z2.iter().map(|z| z * phase).collect();
    let mix = |t: f64| vector::combine(C64::new(cos(t), 0.0), z1, C64::new(sin(t), 0.0), &z2p);
    let g = |t: f64| (rho * l(&mix(t))).re;
    let t = bisect(g, 0.0, PI / 2.0, 1e-17);
    vector::normalize(&mix(t))
}
