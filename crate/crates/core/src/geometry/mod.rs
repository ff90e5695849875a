//! Fix-lines, ruling actions, base locus and orbit decompositions in P³.

pub mod fixed;
pub mod line;
pub mod quadric;
pub mod ruling;

pub use crate::error::GeometryError;
pub use fixed::{
    fix_group, fix_lines, fixline_classes, line_orbits, orbit, orbits, orbits_on_ruling, ruling_orbits, side_elements,
    stabilizer, FixLineClass, RulingOrbit,
};
pub use line::{LineType, ProjectiveLine, ProjectivePoint};
pub use quadric::{
    base_locus, base_point_orbits, meeting_point_orbits, points_off_quadric, quadric_points, BaseLocus, QuadricPointRow,
};
pub use ruling::{mobius, ruling_point, RulingPoint};
