//! Rational curves on the minimal resolution of a quotient.

use std::fmt;

use super::ade::SingularityReport;
use super::analysis::{analyze, GroupAnalysis};
use super::nodes::{find_record, Fiber, NodeOrbitRecord};
use crate::error::SingularityError;
use crate::groups::GroupLabel;

/// `ν₁` base-locus lines, `ν₂` curves over quadric points, `ν₃` over other points
/// off the quadric, `ν₄` over nodes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct NuTotals {
    pub nu1: usize,
    pub nu2: usize,
    pub nu3: usize,
    pub nu4: usize,
}

impl NuTotals {
    pub fn nu(&self) -> usize {
        self.nu1 + self.nu2 + self.nu3 + self.nu4
    }

    pub fn as_tuple(&self) -> (usize, usize, usize, usize, usize) {
        (self.nu1, self.nu2, self.nu3, self.nu4, self.nu())
    }
}

impl fmt::Display for NuTotals {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ν1={} ν2={} ν3={} ν4={} ν={}",
            self.nu1,
            self.nu2,
            self.nu3,
            self.nu4,
            self.nu()
        )
    }
}

/// Orbits of off-quadric fix-points per class that are not nodes of the fiber.
///
/// On a nodal member a fix-line through a node meets the surface there with
/// multiplicity two. If each of `ns` nodes lies on `c` lines of a family, the nodes
/// account for `2·ns·c` of the `Σ ℓ(L)·n(L)` intersection points of the family, and
/// the same share of each class's point orbits.
pub fn remaining_orbits(
    a: &GroupAnalysis,
    record: Option<&NodeOrbitRecord>,
) -> Result<Vec<(String, usize)>, SingularityError> {
    let mut absorbed = vec![0usize; a.classes.len()];
    if let Some(r) = record {
        for token in &r.meeting_lines {
            let members: Vec<usize> = (0..a.classes.len())
                .filter(|&i| token.matches(&a.classes[i].label))
                .collect();
            if members.is_empty() {
                return Err(SingularityError::Inconsistent(format!(
                    "{}: no class in family {}",
                    a.label, token.family
                )));
            }
            let incidences = 2 * r.node_count * token.count;
            let points: usize = members
                .iter()
                .map(|&i| a.classes[i].class.length() * a.classes[i].points_off_quadric)
                .sum();
            for &i in &members {
                let k = a.classes[i].orbit_count()?;
                if (k * incidences) % points != 0 {
                    return Err(SingularityError::Inconsistent(format!(
                        "{} λ{}: {token} absorbs a fractional number of orbits of {}",
                        a.label, r.fiber, a.classes[i].label
                    )));
                }
                absorbed[i] += k * incidences / points;
            }
        }
    }
    a.classes
        .iter()
        .zip(absorbed)
        .map(|(c, used)| {
            let k = c.orbit_count()?;
            k.checked_sub(used).map(|left| (c.label.clone(), left)).ok_or_else(|| {
                SingularityError::Inconsistent(format!("{}: more nodes than fix-points on {}", a.label, c.label))
            })
        })
        .collect()
}

fn record_for(
    label: GroupLabel,
    fiber: Fiber,
    node_data: &[NodeOrbitRecord],
) -> Result<Option<&NodeOrbitRecord>, SingularityError> {
    match fiber {
        Fiber::Smooth => Ok(None),
        Fiber::Lambda(k) => {
            find_record(node_data, label, k)
                .map(Some)
                .ok_or_else(|| SingularityError::MissingNodeData {
                    group: label.to_string(),
                    fiber: fiber.to_string(),
                })
        }
    }
}

fn check_degree(label: GroupLabel, degree: u32) -> Result<(), SingularityError> {
    if label.degree() != degree {
        return Err(SingularityError::Inconsistent(format!(
            "{label} acts on the degree-{} pencil, not degree {degree}",
            label.degree()
        )));
    }
    Ok(())
}

/// Singularities of `X_λ/H` on the given fiber: quadric points, remaining
/// off-quadric fix-points, then nodes.
pub fn fiber_singularities(
    label: GroupLabel,
    fiber: Fiber,
    node_data: &[NodeOrbitRecord],
) -> Result<[SingularityReport; 3], SingularityError> {
    let a = analyze(label)?;
    let record = record_for(label, fiber, node_data)?;
    let mut off = SingularityReport::default();
    for (name, left) in remaining_orbits(a, record)? {
        let c = a.class(&name).expect("listed class");
        off.extend(&super::ade::off_quadric_singularities(c.fix_order(), left));
    }
    let nodes = record.map(NodeOrbitRecord::singularities).unwrap_or_default();
    Ok([a.quadric_singularities(), off, nodes])
}

/// `(ν₁, ν₂, ν₃, ν₄)` for a quotient of the degree-6 or degree-8 pencil.
pub fn nu_totals(
    label: GroupLabel,
    degree: u32,
    fiber: Fiber,
    node_data: &[NodeOrbitRecord],
) -> Result<NuTotals, SingularityError> {
    check_degree(label, degree)?;
    let a = analyze(label)?;
    let [quadric, off, nodes] = fiber_singularities(label, fiber, node_data)?;
    Ok(NuTotals {
        nu1: a.base_line_orbits,
        nu2: quadric.rank(),
        nu3: off.rank(),
        nu4: nodes.rank(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::singularities::nodes::builtin_nodes;

    fn nu(label: GroupLabel, fiber: Fiber) -> NuTotals {
        nu_totals(label, label.degree(), fiber, builtin_nodes()).unwrap()
    }

    #[test]
    fn smooth_txv() {
        assert_eq!(nu(GroupLabel::TxV, Fiber::Smooth).as_tuple(), (4, 12, 3, 0, 19));
        assert_eq!(nu(GroupLabel::VxV, Fiber::Smooth).nu(), 15);
    }

    #[test]
    fn tt1_lambda1() {
        let n = nu(GroupLabel::TT1, Fiber::Lambda(1));
        assert_eq!((n.nu3, n.nu4, n.nu()), (0, 18, 20));
    }

    #[test]
    fn missing_node_data() {
        let err = nu_totals(GroupLabel::TT1, 6, Fiber::Lambda(2), &[]).unwrap_err();
        assert!(matches!(err, SingularityError::MissingNodeData { .. }));
        assert!(nu_totals(GroupLabel::TT1, 6, Fiber::Smooth, &[]).is_ok());
    }

    #[test]
    fn wrong_degree() {
        assert!(nu_totals(GroupLabel::TT1, 8, Fiber::Smooth, builtin_nodes()).is_err());
    }
}
