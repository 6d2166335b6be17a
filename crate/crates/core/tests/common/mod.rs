#![allow(dead_code)]

use oportho::{Field, Matrix, C64};
use proptest::prelude::*;

pub fn real(rows: &[&[f64]]) -> Matrix {
    Matrix::from_rows(rows).unwrap()
}

pub fn complex(rows: usize, cols: usize, entries: &[(f64, f64)]) -> Matrix {
    Matrix::from_complex(rows, cols, entries.iter().map(|&(a, b)| C64::new(a, b)).collect()).unwrap()
}

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Real), Just(Field::Complex)]
}

/// Square matrices of size 2..=max with entries in [-3, 3].
pub fn square(max: usize) -> impl Strategy<Value = Matrix> {
    (2..=max, field_strategy()).prop_flat_map(|(n, f)| matrix_of(n, n, f))
}

pub fn matrix_of(rows: usize, cols: usize, field: Field) -> impl Strategy<Value = Matrix> {
    let len = rows * cols;
    (
        proptest::collection::vec(-3.0f64..3.0, len),
        proptest::collection::vec(-3.0f64..3.0, len),
    )
        .prop_map(move |(re, im)| {
            let entries = re
                .iter()
                .zip(&im)
                .map(|(&a, &b)| C64::new(a, if field == Field::Real { 0.0 } else { b }))
                .collect();
            Matrix::from_entries(rows, cols, field, entries).unwrap()
        })
}

/// Two square matrices of a common size and field.
pub fn square_pair(max: usize) -> impl Strategy<Value = (Matrix, Matrix)> {
    (2..=max, field_strategy()).prop_flat_map(|(n, f)| (matrix_of(n, n, f), matrix_of(n, n, f)))
}

/// Power iteration on MᴴM from a fixed start; independent of the library's SVD.
pub fn power_norm(m: &Matrix) -> f64 {
    let n = m.cols();
    let g = &m.adjoint() * m;
    let mut v: Vec<C64> = (0..n).map(|i| C64::new(1.0 + 0.37 * i as f64, 0.11 * i as f64)).collect();
    let mut lambda = 0.0;
    for _ in 0..5000 {
        let w = g.mul_vec(&v);
        let nw = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if nw == 0.0 {
            return 0.0;
        }
        v = w.iter().map(|z| z / nw).collect();
        if (nw - lambda).abs() <= 1e-15 * nw {
            lambda = nw;
            break;
        }
        lambda = nw;
    }
    lambda.sqrt()
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}
