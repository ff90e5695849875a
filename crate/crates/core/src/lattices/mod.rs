//! Integral lattices: Gram matrices, discriminant groups, divisible classes and overlattices.

pub mod catalog;
pub mod cover;
pub mod divisibility;
pub mod gram;
pub mod snf;

pub use crate::error::LatticeError;
pub use catalog::{find_entry, CatalogEntry, DIVISIBLE_CLASSES};
pub use cover::{cover_self_intersection, p_rank_bound_check};
pub use divisibility::in_glue_span;
pub use divisibility::{adjoin_class, index_formula_check, is_p_divisible, nikulin_count_check, DivisorClass};
pub use gram::{
    ade_lattice, ade_sum, determinant, direct_sum, discriminant, gram_from_graph, CurveGraph, IntegralLattice,
};
pub use snf::{discriminant_group, smith_normal_form, DiscriminantGroup};
