//! Quotient singularities and rational-curve counts.

pub mod ade;
pub mod analysis;
pub mod nodes;
pub mod nu;

pub use crate::error::SingularityError;
pub use ade::{
    binary_quotient_type, off_quadric_singularities, quadric_point_singularity, AdeKind, AdeType, BinaryGroupClass,
    SingularityReport,
};
pub use analysis::{analyze, GroupAnalysis, LabeledClass};
pub use nodes::{builtin_nodes, expected_node_count, find_record, merge_nodes, Fiber, MeetingToken, NodeOrbitRecord};
pub use nu::{fiber_singularities, nu_totals, remaining_orbits, NuTotals};
