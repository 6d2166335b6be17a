//! Column vectors as plain slices of complex scalars.

use alloc::vec::Vec;

use super::matrix::{C64, ZERO};
use crate::math::sqrt;

/// uᴴv.
pub fn dot(u: &[C64], v: &[C64]) -> C64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

/// ⟨u, v⟩ = vᴴu, linear in the first argument.
pub fn inner(u: &[C64], v: &[C64]) -> C64 {
    dot(v, u)
}

pub fn norm(u: &[C64]) -> f64 {
    sqrt(u.iter().map(|z| z.norm_sqr()).sum())
}

pub fn normalize(u: &[C64]) -> Option<Vec<C64>> {
    let n = norm(u);
    if n == 0.0 || !n.is_finite() {
        return None;
    }
    Some(u.iter().map(|z| z / n).collect())
}

pub fn scale(u: &[C64], c: C64) -> Vec<C64> {
    u.iter().map(|z| z * c).collect()
}

/// a·u + b·v.
pub fn combine(a: C64, u: &[C64], b: C64, v: &[C64]) -> Vec<C64> {
    u.iter().zip(v).map(|(x, y)| a * x + b * y).collect()
}

pub fn basis_vector(n: usize, i: usize) -> Vec<C64> {
    let mut e = alloc::vec![ZERO; n];
    e[i] = C64::new(1.0, 0.0);
    e
}

/// Multiplies by a unit phase so the first entry of largest modulus is real positive.
pub fn canonical_phase(u: &[C64]) -> Vec<C64> {
    let mut best = 0;
    let mut best_abs = -1.0;
    for (i, z) in u.iter().enumerate() {
        if z.norm() > best_abs * (1.0 + 1e-12) {
            best = i;
            best_abs = z.norm();
        }
    }
    if best_abs <= 0.0 {
        return u.to_vec();
    }
    let phase = u[best].conj() / best_abs;
    u.iter().map(|z| z * phase).collect()
}
