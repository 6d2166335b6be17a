use alloc::vec;
use alloc::vec::Vec;

use super::matrix::{Matrix, C64, ZERO};
use super::vector::{basis_vector, dot, norm};
use crate::math::sqrt;

const MAX_SWEEPS: usize = 80;

/// Thin singular value decomposition m = U·diag(s)·Vᴴ.
#[derive(Debug, Clone)]
pub struct Svd {
    /// Descending, length min(rows, cols).
    pub values: Vec<f64>,
    /// rows × k, orthonormal columns.
    pub left: Matrix,
    /// cols × k, orthonormal columns.
    pub right: Matrix,
}

impl Svd {
    pub fn reconstruct(&self) -> Matrix {
        let (r, k) = self.left.shape();
        let c = self.right.rows();
        let field = self.left.field().join(self.right.field());
        let mut out = Matrix::zeros(r, c, field);
        for i in 0..r {
            for j in 0..c {
                let mut acc = ZERO;
                for l in 0..k {
                    acc += self.left.get(i, l) * self.values[l] * self.right.get(j, l).conj();
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

fn columns_of(m: &Matrix) -> Vec<Vec<C64>> {
    (0..m.cols()).map(|j| m.col_vec(j)).collect()
}

/// One-sided Jacobi: orthogonalizes the columns of `w`, accumulating the
/// rotations into `v` when present.
fn hestenes(w: &mut [Vec<C64>], mut v: Option<&mut [Vec<C64>]>) {
    let k = w.len();
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..k {
            for q in (p + 1)..k {
                let alpha: f64 = w[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = w[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma = dot(&w[p], &w[q]);
                let g = gamma.norm();
                if alpha == 0.0 || beta == 0.0 || g <= 1e-15 * sqrt(alpha * beta) {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + sqrt(1.0 + zeta * zeta))
                } else {
                    -1.0 / (-zeta + sqrt(1.0 + zeta * zeta))
                };
                let c = 1.0 / sqrt(1.0 + t * t);
                let s = c * t;
                let phase = gamma.conj() / g;
                rotate_pair(w, p, q, c, s, phase);
                if let Some(v) = v.as_deref_mut() {
                    rotate_pair(v, p, q, c, s, phase);
                }
            }
        }
        if !rotated {
            break;
        }
    }
}

fn rotate_pair(cols: &mut [Vec<C64>], p: usize, q: usize, c: f64, s: f64, phase: C64) {
    let (lo, hi) = cols.split_at_mut(q);
    let a = &mut lo[p];
    let b = &mut hi[0];
    for (x, y) in a.iter_mut().zip(b.iter_mut()) {
        let yq = *y * phase;
        let xp = *x;
        *x = xp * c - yq * s;
        *y = xp * s + yq * c;
    }
}

/// Singular values only, descending.
pub fn singular_values(m: &Matrix) -> Vec<f64> {
    let src = if m.rows() >= m.cols() { m.clone() } else { m.adjoint() };
    let mut w = columns_of(&src);
    hestenes(&mut w, None);
    let mut s: Vec<f64> = w.iter().map(|c| norm(c)).collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Largest singular value.
pub fn spectral_norm(m: &Matrix) -> f64 {
    singular_values(m)[0]
}

pub fn svd(m: &Matrix) -> Svd {
    if m.rows() >= m.cols() {
        svd_tall(m)
    } else {
        let t = svd_tall(&m.adjoint());
        Svd { values: t.values, left: t.right, right: t.left }
    }
}

fn svd_tall(m: &Matrix) -> Svd {
    let (rows, k) = m.shape();
    let field = m.field();
    let mut w = columns_of(m);
    let mut v: Vec<Vec<C64>> = (0..k).map(|j| basis_vector(k, j)).collect();
    hestenes(&mut w, Some(&mut v));

    let sigma: Vec<f64> = w.iter().map(|c| norm(c)).collect();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| sigma[b].total_cmp(&sigma[a]));
    let smax = sigma[order[0]];

    let mut u_cols: Vec<Vec<C64>> = Vec::with_capacity(k);
    for &j in &order {
        let s = sigma[j];
        let mut cand = if s > 0.0 && s > smax * 1e-300 {
            w[j].iter().map(|z| z / s).collect()
        } else {
            vec![ZERO; rows]
        };
        orthogonalize(&mut cand, &u_cols);
        let n = norm(&cand);
        if n < 0.5 {
            cand = completion(rows, &u_cols);
        } else {
            cand.iter_mut().for_each(|z| *z /= n);
        }
        u_cols.push(cand);
    }

    let values = order.iter().map(|&j| sigma[j]).collect();
    let right_cols: Vec<Vec<C64>> = order.iter().map(|&j| v[j].clone()).collect();
    Svd {
        values,
        left: Matrix::from_columns(rows, &u_cols, field),
        right: Matrix::from_columns(k, &right_cols, field),
    }
}

/// Two passes of Gram-Schmidt against orthonormal `basis`.
pub(crate) fn orthogonalize(v: &mut [C64], basis: &[Vec<C64>]) {
    for _ in 0..2 {
        for b in basis {
            let c = dot(b, v);
            for (x, y) in v.iter_mut().zip(b) {
                *x -= c * y;
            }
        }
    }
}

/// A unit vector orthogonal to `basis`, drawn from the standard basis.
pub(crate) fn completion(n: usize, basis: &[Vec<C64>]) -> Vec<C64> {
    let mut best = basis_vector(n, 0);
    let mut best_norm = -1.0;
    for i in 0..n {
        let mut e = basis_vector(n, i);
        orthogonalize(&mut e, basis);
        let en = norm(&e);
        if en > best_norm {
            best_norm = en;
            best = e;
        }
        if en > 0.7 {
            break;
        }
    }
    best.iter().map(|z| z / best_norm).collect()
}
