//! Exact linear algebra over ℚ and ℚ(i).

pub mod elim;
mod matrix;
mod scalar;
mod subspace;

pub use matrix::Mat;
pub use scalar::Scalar;
pub use subspace::{unit, Subspace};
