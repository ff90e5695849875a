//! Exact recomputation of the group, fix-line, singularity and lattice tables
//! for quotients of K3 pencils by subgroups of `T×T` and `O×O` in SO(4).

pub mod algebra;
pub mod config;
pub mod error;
pub mod geometry;
pub mod groups;
pub mod lattices;
pub mod singularities;
pub mod tables;

pub use error::Error;
