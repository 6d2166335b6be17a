use alloc::vec::Vec;

use super::matrix::{Field, Matrix, C64, ZERO};
use super::svd::{orthogonalize, svd};
use super::vector::{dot, norm};
use crate::error::{Error, Result};
use crate::tol::Tolerances;

/// Principal-angle cosine above which a direction counts as shared.
pub const INTERSECT_COS: f64 = 1.0 - 1e-9;

/// Orthonormal basis of a subspace of 𝕂ⁿ. `None` is the zero subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    basis: Option<Matrix>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> SubspaceBasis {
        SubspaceBasis { ambient_dim, basis: None }
    }

    pub fn whole(n: usize, field: Field) -> SubspaceBasis {
        SubspaceBasis { ambient_dim: n, basis: Some(Matrix::identity(n, field)) }
    }

    /// Wraps columns already known to be orthonormal (checked to 1e-12).
    pub fn from_orthonormal(m: Matrix) -> Result<SubspaceBasis> {
        let gram = &m.adjoint() * &m;
        if !gram.approx_eq(&Matrix::identity(m.cols(), gram.field()), 1e-12) {
            return Err(Error::InvalidDimensions { rows: m.rows(), cols: m.cols() });
        }
        Ok(SubspaceBasis { ambient_dim: m.rows(), basis: Some(m) })
    }

    /// Span of arbitrary vectors; directions with residual norm ≤ 1e-10 are dropped.
    pub fn span(n: usize, vectors: &[Vec<C64>], field: Field) -> SubspaceBasis {
        let mut cols: Vec<Vec<C64>> = Vec::new();
        let scale = vectors.iter().map(|v| norm(v)).fold(0.0, f64::max);
        for v in vectors {
            let mut w = v.clone();
            orthogonalize(&mut w, &cols);
            let wn = norm(&w);
            if wn > 1e-10 * scale && wn > 0.0 {
                cols.push(w.iter().map(|z| z / wn).collect());
            }
        }
        SubspaceBasis::from_columns(n, cols, field)
    }

    pub(crate) fn from_columns(n: usize, cols: Vec<Vec<C64>>, field: Field) -> SubspaceBasis {
        if cols.is_empty() {
            SubspaceBasis::zero(n)
        } else {
            SubspaceBasis { ambient_dim: n, basis: Some(Matrix::from_columns(n, &cols, field)) }
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.as_ref().map_or(0, |b| b.cols())
    }

    pub fn basis(&self) -> Option<&Matrix> {
        self.basis.as_ref()
    }

    pub fn vectors(&self) -> Vec<Vec<C64>> {
        match &self.basis {
            None => Vec::new(),
            Some(b) => (0..b.cols()).map(|j| b.col_vec(j)).collect(),
        }
    }

    /// Orthogonal projection of `v` onto the subspace.
    pub fn project(&self, v: &[C64]) -> Vec<C64> {
        let mut out = alloc::vec![ZERO; self.ambient_dim];
        for b in self.vectors() {
            let c = dot(&b, v);
            for (o, x) in out.iter_mut().zip(&b) {
                *o += c * x;
            }
        }
        out
    }

    pub fn projector(&self, field: Field) -> Matrix {
        match &self.basis {
            None => Matrix::zeros(self.ambient_dim, self.ambient_dim, field),
            Some(b) => b * &b.adjoint(),
        }
    }

    /// ‖v − Pv‖.
    pub fn distance(&self, v: &[C64]) -> f64 {
        let p = self.project(v);
        let diff: Vec<C64> = v.iter().zip(&p).map(|(a, b)| a - b).collect();
        norm(&diff)
    }

    /// Largest distance from a basis vector of either subspace to the other.
    pub fn span_residual(&self, other: &SubspaceBasis) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        let a = self.vectors().iter().map(|v| other.distance(v)).fold(0.0, f64::max);
        let b = other.vectors().iter().map(|v| self.distance(v)).fold(0.0, f64::max);
        a.max(b)
    }
}

/// Top right-singular subspace together with its conditioning.
#[derive(Debug, Clone)]
pub struct TopSubspace {
    pub subspace: SubspaceBasis,
    pub top: f64,
    /// Largest singular value outside the subspace.
    pub next: Option<f64>,
    /// Some singular value sits in (s₁(1 − 10·gap_tol), s₁(1 − gap_tol)).
    pub ill_conditioned: bool,
}

impl TopSubspace {
    /// (s_top − s_next)/s_top, or 1 when every singular value is tied.
    pub fn relative_gap(&self) -> f64 {
        match self.next {
            None => 1.0,
            Some(s) => (self.top - s) / self.top,
        }
    }
}

pub fn top_singular(m: &Matrix, tol: &Tolerances) -> Result<TopSubspace> {
    if m.is_zero() {
        return Err(Error::ZeroOperator);
    }
    let d = svd(m);
    let s1 = d.values[0];
    let keep = s1 * (1.0 - tol.gap_tol);
    let warn = s1 * (1.0 - 10.0 * tol.gap_tol);
    let n = m.cols();
    let mut cols = Vec::new();
    let mut next = None;
    let mut ill = false;
    for (j, &s) in d.values.iter().enumerate() {
        if s >= keep {
            cols.push(d.right.col_vec(j));
        } else {
            if next.is_none() {
                next = Some(s);
            }
            if s > warn {
                ill = true;
            }
        }
    }
    // Directions in the kernel beyond the thin factor only matter when s₁ = 0.
    if next.is_none() && d.values.len() < n {
        next = Some(0.0);
    }
    Ok(TopSubspace {
        subspace: SubspaceBasis::from_columns(n, cols, m.field()),
        top: s1,
        next,
        ill_conditioned: ill,
    })
}

pub fn top_singular_subspace(m: &Matrix, tol: &Tolerances) -> Result<SubspaceBasis> {
    top_singular(m, tol).map(|t| t.subspace)
}

/// Intersection via principal angles.
pub fn intersect(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<SubspaceBasis> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::ShapeMismatch {
            left: (a.ambient_dim, a.dim()),
            right: (b.ambient_dim, b.dim()),
        });
    }
    let n = a.ambient_dim;
    let (ba, bb) = match (&a.basis, &b.basis) {
        (Some(x), Some(y)) => (x, y),
        _ => return Ok(SubspaceBasis::zero(n)),
    };
    let field = ba.field().join(bb.field());
    let cross = &ba.adjoint() * bb;
    let d = svd(&cross);
    let mut cols = Vec::new();
    for (j, &s) in d.values.iter().enumerate() {
        if s >= INTERSECT_COS {
            let coeff = d.left.col_vec(j);
            cols.push(ba.mul_vec(&coeff));
        }
    }
    let mut out: Vec<Vec<C64>> = Vec::new();
    for mut c in cols {
        orthogonalize(&mut c, &out);
        let cn = norm(&c);
        if cn > 0.5 {
            out.push(c.iter().map(|z| z / cn).collect());
        }
    }
    Ok(SubspaceBasis::from_columns(n, out, field))
}
