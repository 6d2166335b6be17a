use alloc::vec::Vec;

use super::matrix::{Matrix, C64, ZERO};
use crate::error::{Error, Result};
use crate::math::sqrt;

/// Entrywise Hermitian tolerance, relative to the largest entry.
pub const HERMITIAN_TOL: f64 = 1e-10;

const MAX_SWEEPS: usize = 80;

/// Eigenpairs of a Hermitian matrix, eigenvalues in descending order.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors as columns, aligned with `values`.
    pub vectors: Matrix,
}

impl HermitianEigen {
    pub fn vector(&self, j: usize) -> Vec<C64> {
        self.vectors.col_vec(j)
    }

    pub fn max(&self) -> f64 {
        self.values[0]
    }

    pub fn min(&self) -> f64 {
        self.values[self.values.len() - 1]
    }
}

pub(crate) fn check_hermitian(m: &Matrix) -> Result<()> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let residual = m.hermitian_residual();
    if residual > HERMITIAN_TOL * m.max_abs() {
        return Err(Error::NotHermitian { residual });
    }
    Ok(())
}

/// Cyclic complex Jacobi eigensolver.
pub fn hermitian_eigen(m: &Matrix) -> Result<HermitianEigen> {
    check_hermitian(m)?;
    let n = m.rows();
    let sym = m.hermitian_part();
    let mut h: Vec<C64> = sym.data().to_vec();
    let mut v: Vec<C64> = Matrix::identity(n, m.field()).data().to_vec();
    for i in 0..n {
        h[i * n + i].im = 0.0;
    }
    let fro = sqrt(h.iter().map(|z| z.norm_sqr()).sum());

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += h[p * n + q].norm_sqr();
            }
        }
        if sqrt(off) <= 1e-16 * fro || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut h, &mut v, n, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| h[b * n + b].re.total_cmp(&h[a * n + a].re));
    let values = order.iter().map(|&i| h[i * n + i].re).collect();
    let mut vectors = Matrix::zeros(n, n, m.field());
    for (k, &j) in order.iter().enumerate() {
        for i in 0..n {
            vectors.set(i, k, v[i * n + j]);
        }
    }
    Ok(HermitianEigen { values, vectors })
}

fn rotate(h: &mut [C64], v: &mut [C64], n: usize, p: usize, q: usize) {
    let hpq = h[p * n + q];
    let g = hpq.norm();
    if g == 0.0 {
        return;
    }
    let a = h[p * n + p].re;
    let b = h[q * n + q].re;
    let zeta = (b - a) / (2.0 * g);
    let t = if zeta >= 0.0 {
        1.0 / (zeta + sqrt(1.0 + zeta * zeta))
    } else {
        -1.0 / (-zeta + sqrt(1.0 + zeta * zeta))
    };
    let c = 1.0 / sqrt(1.0 + t * t);
    let s = c * t;
    let d = hpq.conj() / g;
    // Block of the unitary acting on coordinates (p, q).
    let upp = C64::new(c, 0.0);
    let upq = C64::new(s, 0.0);
    let uqp = -d * s;
    let uqq = d * c;

    for k in 0..n {
        let x = h[k * n + p];
        let y = h[k * n + q];
        h[k * n + p] = x * upp + y * uqp;
        h[k * n + q] = x * upq + y * uqq;
    }
    for k in 0..n {
        let x = h[p * n + k];
        let y = h[q * n + k];
        h[p * n + k] = upp.conj() * x + uqp.conj() * y;
        h[q * n + k] = upq.conj() * x + uqq.conj() * y;
    }
    h[p * n + q] = ZERO;
    h[q * n + p] = ZERO;
    h[p * n + p].im = 0.0;
    h[q * n + q].im = 0.0;
    for k in 0..n {
        let x = v[k * n + p];
        let y = v[k * n + q];
        v[k * n + p] = x * upp + y * uqp;
        v[k * n + q] = x * upq + y * uqq;
    }
}

/// V·diag(λ)·Vᴴ.
pub fn reconstruct(e: &HermitianEigen) -> Matrix {
    let n = e.values.len();
    let mut out = Matrix::zeros(n, n, e.vectors.field());
    for i in 0..n {
        for j in 0..n {
            let mut acc = ZERO;
            for k in 0..n {
                acc += e.vectors.get(i, k) * e.values[k] * e.vectors.get(j, k).conj();
            }
            out.set(i, j, acc);
        }
    }
    out
}

/// Applies a real function to the spectrum: V·diag(f(λ))·Vᴴ.
pub fn spectral_map(e: &HermitianEigen, f: impl Fn(f64) -> f64) -> Matrix {
    let mapped = HermitianEigen {
        values: e.values.iter().map(|&x| f(x)).collect(),
        vectors: e.vectors.clone(),
    };
    reconstruct(&mapped)
}
