use alloc::string::String;
use core::fmt;

/// Errors raised by the deciders, the spectral criteria and the theorem monitors.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Entry count or dimensions do not describe a valid matrix.
    InvalidDimensions { rows: usize, cols: usize },
    /// Two operands have incompatible shapes.
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    /// Two normed elements carry different norm descriptors.
    NormMismatch,
    /// A norm descriptor or normed element is malformed.
    InvalidNorm(&'static str),
    /// A tolerance lies outside (0, 1e-3).
    InvalidTolerance(&'static str),
    NotSquare { rows: usize, cols: usize },
    NotHermitian { residual: f64 },
    NotPsd { min_eigenvalue: f64 },
    NotProjection { residual: f64 },
    NotUnit { norm: f64 },
    ZeroOperator,
    /// The relation is only defined over real scalars.
    ComplexFieldUnsupported,
    /// A caller-asserted hypothesis does not hold for the inputs.
    HypothesisViolated(&'static str),
    PreconditionUnmet(String),
    /// A proved implication failed numerically. Carries the evidence.
    TheoremViolation(String),
    /// The spectral criterion and the direct minimization disagree decisively.
    CriterionMismatch { spectral_margin: f64, minimization_margin: f64 },
    /// The zero set of the quadratic form meets the unit sphere nowhere.
    DegenerateZeroSet,
    BadKind(String),
    BadSuite(String),
    InvalidConfig(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDimensions { rows, cols } => {
                write!(f, "invalid dimensions {rows}x{cols}")
            }
            Error::ShapeMismatch { left, right } => write!(
                f,
                "shape mismatch: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::NormMismatch => write!(f, "operands carry different norms"),
            Error::InvalidNorm(msg) => write!(f, "invalid norm: {msg}"),
            Error::InvalidTolerance(msg) => write!(f, "invalid tolerance: {msg}"),
            Error::NotSquare { rows, cols } => write!(f, "matrix is not square ({rows}x{cols})"),
            Error::NotHermitian { residual } => {
                write!(f, "matrix is not Hermitian (residual {residual:e})")
            }
            Error::NotPsd { min_eigenvalue } => write!(
                f,
                "matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e})"
            ),
            Error::NotProjection { residual } => {
                write!(f, "matrix is not an orthogonal projection (residual {residual:e})")
            }
            Error::NotUnit { norm } => write!(f, "vector is not a unit vector (norm {norm})"),
            Error::ZeroOperator => write!(f, "operator is zero"),
            Error::ComplexFieldUnsupported => {
                write!(f, "relation is defined for real spaces only")
            }
            Error::HypothesisViolated(msg) => write!(f, "hypothesis violated: {msg}"),
            Error::PreconditionUnmet(msg) => write!(f, "precondition unmet: {msg}"),
            Error::TheoremViolation(msg) => write!(f, "theorem violation: {msg}"),
            Error::CriterionMismatch { spectral_margin, minimization_margin } => write!(
                f,
                "spectral criterion (margin {spectral_margin:e}) disagrees with minimization (margin {minimization_margin:e})"
            ),
            Error::DegenerateZeroSet => write!(f, "quadratic form has no zeros on the sphere"),
            Error::BadKind(kind) => write!(f, "unknown generator kind `{kind}`"),
            Error::BadSuite(suite) => write!(f, "unknown suite `{suite}`"),
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
