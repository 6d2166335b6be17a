//! Seeded random matrices and vectors.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rand_distr::{Distribution, StandardNormal};

use crate::linalg::{orthogonalize, vector, Field, Matrix, C64};
use crate::math::sqrt;

pub type Rng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform on [0, 1).
pub fn uniform(rng: &mut Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

pub fn uniform_in(rng: &mut Rng, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * uniform(rng)
}

/// Uniform integer in [lo, hi].
pub fn int_in(rng: &mut Rng, lo: usize, hi: usize) -> usize {
    lo + (rng.next_u64() % (hi - lo + 1) as u64) as usize
}

pub fn coin(rng: &mut Rng) -> bool {
    rng.next_u32() & 1 == 1
}

pub fn normal(rng: &mut Rng) -> f64 {
    StandardNormal.sample(rng)
}

/// Standard normal scalar in the field; complex draws have E|z|² = 1.
pub fn scalar(rng: &mut Rng, field: Field) -> C64 {
    match field {
        Field::Real => C64::new(normal(rng), 0.0),
        Field::Complex => {
            let h = core::f64::consts::FRAC_1_SQRT_2;
            C64::new(normal(rng) * h, normal(rng) * h)
        }
    }
}

pub fn gaussian_matrix(rng: &mut Rng, rows: usize, cols: usize, field: Field) -> Matrix {
    let mut m = Matrix::zeros(rows, cols, field);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, scalar(rng, field));
        }
    }
    m
}

pub fn gaussian_vector(rng: &mut Rng, n: usize, field: Field) -> Vec<C64> {
    (0..n).map(|_| scalar(rng, field)).collect()
}

pub fn unit_vector(rng: &mut Rng, n: usize, field: Field) -> Vec<C64> {
    loop {
        if let Some(v) = vector::normalize(&gaussian_vector(rng, n, field)) {
            return v;
        }
    }
}

/// `k` orthonormal vectors from Gram-Schmidt on Gaussian draws.
pub fn orthonormal_vectors(rng: &mut Rng, n: usize, k: usize, field: Field) -> Vec<Vec<C64>> {
    let mut out: Vec<Vec<C64>> = Vec::with_capacity(k);
    while out.len() < k {
        let mut v = gaussian_vector(rng, n, field);
        orthogonalize(&mut v, &out);
        let vn = vector::norm(&v);
        if vn > 1e-6 * sqrt(n as f64) {
            out.push(v.iter().map(|z| z / vn).collect());
        }
    }
    out
}

pub fn unitary(rng: &mut Rng, n: usize, field: Field) -> Matrix {
    Matrix::from_columns(n, &orthonormal_vectors(rng, n, n, field), field)
}
