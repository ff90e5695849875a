//! Fix-point data of one subgroup acting on its pencil, computed once and cached.

use std::sync::Arc;

use once_cell::sync::OnceCell;

use super::ade::{off_quadric_singularities, quadric_point_singularity, SingularityReport};
use crate::error::SingularityError;
use crate::geometry::{
    base_locus, base_point_orbits, fix_lines, fixline_classes, line_orbits, points_off_quadric, quadric_points,
    FixLineClass, QuadricPointRow,
};
use crate::groups::quaternion::{named, sigma};
use crate::groups::{GroupLabel, ProjectiveGroup};

/// An orbit of fix-lines off the quadric together with its name.
#[derive(Clone, Debug)]
pub struct LabeledClass {
    pub label: String,
    /// The element `(a, b)` whose fix-line names the class.
    pub representative: (String, String),
    pub class: FixLineClass,
    /// Points off the quadric cut out by a line of the class on a member of the pencil.
    pub points_off_quadric: usize,
}

impl LabeledClass {
    /// `o(L)`.
    pub fn fix_order(&self) -> usize {
        self.class.fix_order()
    }

    /// Orbits of `H_L` on the points off the quadric; `H_L/F_L` acts freely there.
    pub fn orbit_count(&self) -> Result<usize, SingularityError> {
        let r = self.class.ratio();
        if !self.points_off_quadric.is_multiple_of(r) {
            return Err(SingularityError::Inconsistent(format!(
                "class {}: {} points do not split into orbits of length {r}",
                self.label, self.points_off_quadric
            )));
        }
        Ok(self.points_off_quadric / r)
    }

    pub fn singularities(&self) -> Result<SingularityReport, SingularityError> {
        Ok(off_quadric_singularities(self.fix_order(), self.orbit_count()?))
    }
}

#[derive(Debug)]
pub struct GroupAnalysis {
    pub label: GroupLabel,
    pub degree: u32,
    pub group: Arc<ProjectiveGroup>,
    pub classes: Vec<LabeledClass>,
    pub quadric_rows: Vec<QuadricPointRow>,
    /// Orbits of base-locus lines, both rulings.
    pub base_line_orbits: usize,
    /// Orbit lengths of base-locus meeting points, per pair of line orbits.
    pub base_point_orbits: Vec<Vec<usize>>,
}

impl GroupAnalysis {
    pub fn class(&self, label: &str) -> Option<&LabeledClass> {
        self.classes.iter().find(|c| c.label == label)
    }

    pub fn quadric_singularities(&self) -> SingularityReport {
        let mut r = SingularityReport::default();
        for row in &self.quadric_rows {
            if let Some(t) = quadric_point_singularity(row.transversal_order(), 0) {
                r.add(row.number, t);
            }
        }
        r
    }

    pub fn off_quadric_singularities(&self) -> Result<SingularityReport, SingularityError> {
        let mut r = SingularityReport::default();
        for c in &self.classes {
            r.extend(&c.singularities()?);
        }
        Ok(r)
    }
}

/// `(label, a, b)`: the class containing a fix-line of `σ(a, b)` is called `label`.
fn class_names(label: GroupLabel) -> Vec<(String, &'static str, &'static str)> {
    let own = |v: &[(&str, &'static str, &'static str)]| v.iter().map(|&(l, a, b)| (l.to_string(), a, b)).collect();
    match label {
        GroupLabel::TxV => own(&[("M_1", "q1", "q1"), ("M_2", "q1", "q2"), ("M_3", "q1", "q3")]),
        GroupLabel::TT1 => own(&[
            ("M_1", "q1", "q1"),
            ("M_2", "q1", "q2"),
            ("M_3", "q1", "q3"),
            ("N", "p3", "p3"),
        ]),
        GroupLabel::VxV => {
            const Q: [&str; 3] = ["q1", "q2", "q3"];
            (0..3)
                .flat_map(|i| (0..3).map(move |j| (format!("M_{}{}", i + 1, j + 1), Q[i], Q[j])))
                .collect()
        }
        GroupLabel::OxT => own(&[("M", "q1", "q1"), ("N", "p3", "p3"), ("M'", "p4q2", "q2")]),
        GroupLabel::OO2 => own(&[
            ("R", "p4", "p4"),
            ("N", "p3", "p3"),
            ("N'", "p3^2", "p3"),
            ("M", "p4q2", "p4q2"),
        ]),
        GroupLabel::TxT => own(&[("M", "q2", "q2"), ("N", "p3", "p3"), ("N'", "p3^2", "p3")]),
        GroupLabel::OxO => Vec::new(),
    }
}

fn label_classes(label: GroupLabel, pg: &ProjectiveGroup, degree: u32) -> Result<Vec<LabeledClass>, SingularityError> {
    let classes = fixline_classes(pg);
    let mut names: Vec<Option<(String, String, String)>> = vec![None; classes.len()];
    for (name, a, b) in class_names(label) {
        let qa = named(a).expect("known quaternion");
        let qb = named(b).expect("known quaternion");
        let g = sigma(&qa, &qb);
        if !pg.contains(&g) {
            return Err(SingularityError::Inconsistent(format!("({a},{b}) is not in {label}")));
        }
        let hits: Vec<usize> = fix_lines(&g)?
            .iter()
            .filter_map(|l| classes.iter().position(|c| c.contains(l)))
            .collect();
        let Some(&k) = hits.first() else {
            return Err(SingularityError::Inconsistent(format!(
                "({a},{b}) has no fix-line off the quadric"
            )));
        };
        if hits.iter().any(|&h| h != k) || names[k].is_some() {
            return Err(SingularityError::Inconsistent(format!(
                "class of ({a},{b}) in {label} is ambiguous"
            )));
        }
        names[k] = Some((name, a.to_string(), b.to_string()));
    }
    classes
        .into_iter()
        .zip(names)
        .map(|(class, name)| {
            let (label_name, a, b) = name.ok_or_else(|| {
                SingularityError::Inconsistent(format!("{label}: unnamed class of length {}", class.length()))
            })?;
            let points_off_quadric = points_off_quadric(class.rep(), degree)?;
            Ok(LabeledClass {
                label: label_name,
                representative: (a, b),
                class,
                points_off_quadric,
            })
        })
        .collect()
}

fn compute(label: GroupLabel) -> Result<GroupAnalysis, SingularityError> {
    let degree = label.degree();
    let group = label.group().projective();
    let classes = label_classes(label, &group, degree)?;
    let base = base_locus(degree)?;
    let base_line_orbits = line_orbits(&group, &base.left).len() + line_orbits(&group, &base.right).len();
    Ok(GroupAnalysis {
        label,
        degree,
        quadric_rows: quadric_points(&group, degree)?,
        base_point_orbits: base_point_orbits(&group, degree)?,
        base_line_orbits,
        classes,
        group,
    })
}

/// Cached analysis of one of the six subgroups.
pub fn analyze(label: GroupLabel) -> Result<&'static GroupAnalysis, SingularityError> {
    static CACHE: [OnceCell<GroupAnalysis>; 7] = [
        OnceCell::new(),
        OnceCell::new(),
        OnceCell::new(),
        OnceCell::new(),
        OnceCell::new(),
        OnceCell::new(),
        OnceCell::new(),
    ];
    if label == GroupLabel::OxO {
        return Err(SingularityError::Inconsistent(
            "O×O has no pencil of its own to analyze".into(),
        ));
    }
    let i = GroupLabel::ALL.iter().position(|&l| l == label).expect("listed");
    CACHE[i].get_or_try_init(|| compute(label))
}
