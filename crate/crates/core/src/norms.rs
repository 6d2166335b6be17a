//! Norm families and normed elements.

use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::{singular_values, spectral_norm, Field, Matrix, C64};
use crate::math::{powf, sqrt};
use crate::tol::Tolerances;

/// Which norm an element is measured in. `OperatorTwo` doubles as Schatten-∞.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NormDescriptor {
    OperatorTwo,
    SchattenP(f64),
    VectorP(f64),
}

impl NormDescriptor {
    pub fn schatten(p: f64) -> Result<NormDescriptor> {
        let d = NormDescriptor::SchattenP(p);
        d.validate()?;
        Ok(d)
    }

    pub fn vector(p: f64) -> Result<NormDescriptor> {
        let d = NormDescriptor::VectorP(p);
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            NormDescriptor::OperatorTwo => Ok(()),
            NormDescriptor::SchattenP(p) | NormDescriptor::VectorP(p) => {
                if p.is_finite() && p >= 1.0 {
                    Ok(())
                } else {
                    Err(Error::InvalidNorm("p must be finite and at least 1"))
                }
            }
        }
    }

    pub fn p(&self) -> Option<f64> {
        match *self {
            NormDescriptor::OperatorTwo => None,
            NormDescriptor::SchattenP(p) | NormDescriptor::VectorP(p) => Some(p),
        }
    }
}

impl fmt::Display for NormDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormDescriptor::OperatorTwo => write!(f, "operator"),
            NormDescriptor::SchattenP(p) => write!(f, "schatten-{p}"),
            NormDescriptor::VectorP(p) => write!(f, "vector-{p}"),
        }
    }
}

/// A matrix viewed as an element of a normed space.
#[derive(Debug, Clone, PartialEq)]
pub struct NormedElement {
    value: Matrix,
    norm: NormDescriptor,
}

impl NormedElement {
    pub fn new(value: Matrix, norm: NormDescriptor) -> Result<NormedElement> {
        norm.validate()?;
        if matches!(norm, NormDescriptor::VectorP(_)) && value.cols() != 1 {
            return Err(Error::InvalidNorm("vector norms apply to single columns"));
        }
        Ok(NormedElement { value, norm })
    }

    pub fn operator(value: Matrix) -> NormedElement {
        NormedElement { value, norm: NormDescriptor::OperatorTwo }
    }

    pub fn value(&self) -> &Matrix {
        &self.value
    }

    pub fn descriptor(&self) -> NormDescriptor {
        self.norm
    }

    pub fn field(&self) -> Field {
        self.value.field()
    }

    pub fn norm(&self) -> f64 {
        norm_of(self)
    }

    /// self + λ·other in the same norm.
    pub fn plus_scaled(&self, other: &NormedElement, lambda: C64) -> Result<NormedElement> {
        check_compatible(self, other)?;
        Ok(NormedElement { value: self.value.add_scaled(&other.value, lambda)?, norm: self.norm })
    }

    pub fn scaled(&self, c: C64) -> NormedElement {
        NormedElement { value: self.value.scale(c), norm: self.norm }
    }

    /// ‖self + λ·other‖ without allocating a new element.
    pub fn norm_along(&self, other: &NormedElement, lambda: C64) -> f64 {
        let m = self.value.add_scaled(&other.value, lambda).expect("shapes checked by caller");
        matrix_norm(&m, self.norm)
    }
}

pub(crate) fn check_compatible(x: &NormedElement, y: &NormedElement) -> Result<()> {
    if x.value.shape() != y.value.shape() {
        return Err(Error::ShapeMismatch { left: x.value.shape(), right: y.value.shape() });
    }
    if x.norm != y.norm {
        return Err(Error::NormMismatch);
    }
    Ok(())
}

pub fn norm_of(e: &NormedElement) -> f64 {
    matrix_norm(&e.value, e.norm)
}

pub fn matrix_norm(m: &Matrix, norm: NormDescriptor) -> f64 {
    match norm {
        NormDescriptor::OperatorTwo => spectral_norm(m),
        NormDescriptor::SchattenP(p) => {
            if p == 2.0 {
                m.frobenius_norm()
            } else {
                p_sum(&singular_values(m), p)
            }
        }
        NormDescriptor::VectorP(p) => {
            let abs: alloc::vec::Vec<f64> = m.data().iter().map(|z| z.norm()).collect();
            p_sum(&abs, p)
        }
    }
}

/// (Σ|vᵢ|ᵖ)^{1/p}, scaled by the largest entry to avoid overflow.
fn p_sum(values: &[f64], p: f64) -> f64 {
    if p == 1.0 {
        return values.iter().sum();
    }
    let big = values.iter().copied().fold(0.0, f64::max);
    if big == 0.0 {
        return 0.0;
    }
    if p == 2.0 {
        return big * sqrt(values.iter().map(|v| (v / big) * (v / big)).sum());
    }
    big * powf(values.iter().map(|v| powf(v / big, p)).sum(), 1.0 / p)
}

/// Singular values of b + λa and b − λa agree, given bᴴa = 0.
pub fn uin_singular_match(a: &Matrix, b: &Matrix, lambda: C64, tol: &Tolerances) -> Result<bool> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch { left: a.shape(), right: b.shape() });
    }
    let cross = spectral_norm(&(&b.adjoint() * a));
    if cross > tol.eq_tol * spectral_norm(a) * spectral_norm(b) {
        return Err(Error::HypothesisViolated("B*A must vanish"));
    }
    let plus = singular_values(&b.add_scaled(a, lambda)?);
    let minus = singular_values(&b.add_scaled(a, -lambda)?);
    let scale = plus[0].max(minus[0]);
    Ok(plus.iter().zip(&minus).all(|(s, t)| (s - t).abs() <= tol.eq_tol * scale))
}
