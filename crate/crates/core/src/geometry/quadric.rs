//! Base locus of the invariant pencils and point counts on and off the quadric.

use std::collections::{BTreeMap, BTreeSet};

use once_cell::sync::OnceCell;

use super::fixed::{fix_group, orbits, point_stabilizer, ruling_orbits};
use super::line::{ProjectiveLine, ProjectivePoint};
use super::ruling::line_in_quadric;
use crate::error::GeometryError;
use crate::groups::{GroupLabel, ProjectiveGroup, Side};

/// The `2n` lines of the base locus, `n` in each ruling.
#[derive(Clone, Debug)]
pub struct BaseLocus {
    pub degree: u32,
    pub left: Vec<ProjectiveLine>,
    pub right: Vec<ProjectiveLine>,
}

impl BaseLocus {
    pub fn lines(&self) -> impl Iterator<Item = &ProjectiveLine> {
        self.left.iter().chain(self.right.iter())
    }

    pub fn side(&self, side: Side) -> &[ProjectiveLine] {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn contains(&self, line: &ProjectiveLine) -> bool {
        self.lines().any(|l| l == line)
    }
}

fn compute_base_locus(degree: u32) -> Result<BaseLocus, GeometryError> {
    let full = match degree {
        6 => GroupLabel::TxT,
        8 => GroupLabel::OxO,
        d => return Err(GeometryError::UnsupportedDegree(d)),
    };
    let pg = full.group().projective();
    let pick = |side: Side| -> Vec<ProjectiveLine> {
        let mut hits = ruling_orbits(&pg, side)
            .into_iter()
            .filter(|o| o.len() == degree as usize);
        let found = hits.next().expect("an orbit of length n");
        assert!(hits.next().is_none(), "orbit of length n is unique");
        found.lines
    };
    Ok(BaseLocus {
        degree,
        left: pick(Side::Left),
        right: pick(Side::Right),
    })
}

/// The base locus of the degree-6 (`T×T`-invariant) or degree-8 (`O×O`-invariant) pencil.
pub fn base_locus(degree: u32) -> Result<&'static BaseLocus, GeometryError> {
    static SIX: OnceCell<BaseLocus> = OnceCell::new();
    static EIGHT: OnceCell<BaseLocus> = OnceCell::new();
    let cell = match degree {
        6 => &SIX,
        8 => &EIGHT,
        d => return Err(GeometryError::UnsupportedDegree(d)),
    };
    cell.get_or_try_init(|| compute_base_locus(degree))
}

/// Number of points off the quadric cut out on a member of the pencil by `line`.
///
/// The line meets the surface in `degree` points and the quadric in two; a point of
/// the quadric lies on every member exactly when it lies on the base locus.
pub fn points_off_quadric(line: &ProjectiveLine, degree: u32) -> Result<usize, GeometryError> {
    if line_in_quadric(line) {
        return Err(GeometryError::LineInQuadric);
    }
    let base = base_locus(degree)?;
    let hits: BTreeSet<ProjectivePoint> = base.lines().filter_map(|b| line.intersection(b)).collect();
    Ok(degree as usize - hits.len())
}

/// Orbit lengths of the pairwise intersection points of two line sets.
pub fn meeting_point_orbits(pg: &ProjectiveGroup, left: &[ProjectiveLine], right: &[ProjectiveLine]) -> Vec<usize> {
    let points: Vec<ProjectivePoint> = left
        .iter()
        .flat_map(|a| right.iter().filter_map(move |b| a.intersection(b)))
        .collect();
    let mut lengths: Vec<usize> = orbits(pg, &points).iter().map(Vec::len).collect();
    lengths.sort_unstable();
    lengths
}

/// For each pair (orbit of left base lines, orbit of right base lines), the orbit
/// lengths of their meeting points.
pub fn base_point_orbits(pg: &ProjectiveGroup, degree: u32) -> Result<Vec<Vec<usize>>, GeometryError> {
    let base = base_locus(degree)?;
    let lo = orbits(pg, &base.left);
    let ro = orbits(pg, &base.right);
    Ok(lo
        .iter()
        .flat_map(|l| ro.iter().map(move |r| meeting_point_orbits(pg, l, r)))
        .collect())
}

/// Orbits of intersection points of base-locus lines with the other ruling fix-lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricPointRow {
    /// Order of the pointwise fixer of the left-ruling line through the point.
    pub left_fix: usize,
    /// Same for the right-ruling line.
    pub right_fix: usize,
    /// Ruling of the base-locus line through the point.
    pub base_side: Side,
    /// `|Fix(P)|`.
    pub point_fix: usize,
    pub length: usize,
    pub number: usize,
}

impl QuadricPointRow {
    /// Order of the fixer of the line through the point that is not in the base locus.
    pub fn transversal_order(&self) -> usize {
        match self.base_side {
            Side::Left => self.right_fix,
            Side::Right => self.left_fix,
        }
    }
}

pub fn quadric_points(pg: &ProjectiveGroup, degree: u32) -> Result<Vec<QuadricPointRow>, GeometryError> {
    let base = base_locus(degree)?;
    let mut rows: BTreeMap<(Side, usize, usize, usize, usize), usize> = BTreeMap::new();
    for base_side in [Side::Left, Side::Right] {
        let other_side = match base_side {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        };
        let others: Vec<ProjectiveLine> = ruling_orbits(pg, other_side)
            .into_iter()
            .flat_map(|o| o.lines)
            .filter(|l| !base.contains(l))
            .collect();
        let mut points = Vec::new();
        for b in base.side(base_side) {
            for o in &others {
                if let Some(p) = b.intersection(o) {
                    points.push((p, b.clone(), o.clone()));
                }
            }
        }
        let just_points: Vec<ProjectivePoint> = points.iter().map(|(p, _, _)| p.clone()).collect();
        for orbit in orbits(pg, &just_points) {
            let (_, b, o) = points.iter().find(|(p, _, _)| *p == orbit[0]).expect("member");
            let (l, r) = match base_side {
                Side::Left => (b, o),
                Side::Right => (o, b),
            };
            let key = (
                base_side,
                fix_group(pg, l).len(),
                fix_group(pg, r).len(),
                point_stabilizer(pg, &orbit[0]).len(),
                orbit.len(),
            );
            *rows.entry(key).or_default() += 1;
        }
    }
    Ok(rows
        .into_iter()
        .map(
            |((base_side, left_fix, right_fix, point_fix, length), number)| QuadricPointRow {
                left_fix,
                right_fix,
                base_side,
                point_fix,
                length,
                number,
            },
        )
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ruling::ruling_point;

    #[test]
    fn base_locus_sizes() {
        for (d, n) in [(6, 6), (8, 8)] {
            let b = base_locus(d).unwrap();
            assert_eq!(b.left.len(), n);
            assert_eq!(b.right.len(), n);
            assert!(b
                .left
                .iter()
                .all(|l| ruling_point(l).map(|p| p.side) == Some(Side::Left)));
            assert!(b
                .right
                .iter()
                .all(|l| ruling_point(l).map(|p| p.side) == Some(Side::Right)));
        }
        assert_eq!(base_locus(7).unwrap_err(), GeometryError::UnsupportedDegree(7));
    }

    #[test]
    fn lines_of_one_ruling_are_disjoint_and_meet_the_other() {
        let b = base_locus(6).unwrap();
        assert!(!b.left[0].meets(&b.left[1]));
        assert!(b.left[0].intersection(&b.right[3]).is_some());
    }

    #[test]
    fn line_in_quadric_is_rejected() {
        let b = base_locus(6).unwrap();
        assert_eq!(points_off_quadric(&b.left[0], 6), Err(GeometryError::LineInQuadric));
    }
}
