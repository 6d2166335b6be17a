//! Orthogonality relations between matrices.
//!
//! Deciders for Birkhoff-James, isosceles, Roberts, r- and strong isosceles
//! orthogonality under operator, Schatten and vector norms, spectral criteria
//! on Hilbert spaces, positive-operator results and randomized suites that
//! exercise them.

#![no_std]

extern crate alloc;

mod error;
mod math;
mod search;
mod tol;

pub mod hilbert;
pub mod linalg;
pub mod norms;
pub mod numrange;
pub mod ortho;
pub mod positive;
pub mod random;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{Field, Matrix, SubspaceBasis, C64};
pub use norms::{norm_of, NormDescriptor, NormedElement};
pub use ortho::{Decision, OrthReport, Relation};
pub use tol::Tolerances;
