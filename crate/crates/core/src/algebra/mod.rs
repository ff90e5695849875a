//! Exact scalar and matrix arithmetic over `Q(ζ₂₄)`.

pub mod linalg;
pub mod matrix;
pub mod scalar;

pub use crate::error::AlgebraError;
pub use linalg::Vector;
pub use matrix::Matrix4;
pub use scalar::{AlgebraicScalar, Rational};
