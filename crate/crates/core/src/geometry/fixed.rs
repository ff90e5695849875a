//! Fix-lines of group elements, orbits, stabilizers and fix-groups.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::hash::Hash;

use super::line::{LineType, ProjectiveLine, ProjectivePoint};
use super::ruling::{line_in_quadric, ruling_point, RulingPoint};
use crate::algebra::Matrix4;
use crate::error::GeometryError;
use crate::groups::quaternion::{as_left, as_right};
use crate::groups::{projective_order, ProjectiveGroup, Side};

/// Objects a matrix group acts on.
pub trait Acted: Clone + Eq + Hash + Ord {
    fn act(&self, g: &Matrix4) -> Self;
}

impl Acted for ProjectiveLine {
    fn act(&self, g: &Matrix4) -> Self {
        self.transform(g)
    }
}

impl Acted for ProjectivePoint {
    fn act(&self, g: &Matrix4) -> Self {
        self.transform(g)
    }
}

/// Full orbit of `x` under the group, sorted.
pub fn orbit<X: Acted>(pg: &ProjectiveGroup, x: &X) -> Vec<X> {
    let gens: Vec<&Matrix4> = pg.generators().collect();
    let mut seen: HashSet<X> = HashSet::from([x.clone()]);
    let mut out = vec![x.clone()];
    let mut k = 0;
    while k < out.len() {
        for g in &gens {
            let y = out[k].act(g);
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        k += 1;
    }
    out.sort();
    out
}

/// Partition of `items` into orbits; each returned orbit is complete and sorted,
/// and the orbits are ordered by their smallest member.
pub fn orbits<X: Acted>(pg: &ProjectiveGroup, items: &[X]) -> Vec<Vec<X>> {
    let mut assigned: HashSet<X> = HashSet::new();
    let mut out: Vec<Vec<X>> = Vec::new();
    let mut sorted = items.to_vec();
    sorted.sort();
    sorted.dedup();
    for x in &sorted {
        if assigned.contains(x) {
            continue;
        }
        let o = orbit(pg, x);
        assigned.extend(o.iter().cloned());
        out.push(o);
    }
    out.sort();
    out
}

pub fn line_orbits(pg: &ProjectiveGroup, lines: &[ProjectiveLine]) -> Vec<Vec<ProjectiveLine>> {
    orbits(pg, lines)
}

/// `H_L`: indices of elements with `hL = L`.
pub fn stabilizer(pg: &ProjectiveGroup, line: &ProjectiveLine) -> Vec<usize> {
    (0..pg.order())
        .filter(|&i| line.is_stabilized_by(pg.element(i)))
        .collect()
}

/// `F_L`: indices of elements fixing `L` pointwise.
pub fn fix_group(pg: &ProjectiveGroup, line: &ProjectiveLine) -> Vec<usize> {
    (0..pg.order())
        .filter(|&i| line.is_fixed_pointwise_by(pg.element(i)))
        .collect()
}

/// Indices of elements fixing the point.
pub fn point_stabilizer(pg: &ProjectiveGroup, p: &ProjectivePoint) -> Vec<usize> {
    (0..pg.order()).filter(|&i| p.is_fixed_by(pg.element(i))).collect()
}

/// Lines fixed pointwise by `e`: its two-dimensional eigenspaces.
pub fn fix_lines(e: &Matrix4) -> Result<Vec<ProjectiveLine>, GeometryError> {
    if e.is_scalar() {
        return Err(GeometryError::TrivialElement);
    }
    let tag = LineType::from_order(projective_order(e) as usize);
    let mut lines = Vec::new();
    for (_, basis) in e.eigenspaces()? {
        if basis.len() == 2 {
            lines.push(ProjectiveLine::from_vectors(&basis[0], &basis[1])?.with_type(tag));
        }
    }
    lines.sort();
    Ok(lines)
}

/// Indices of the one-sided elements `(p, 1)` (left) or `(1, p)` (right), identity included.
pub fn side_elements(pg: &ProjectiveGroup, side: Side) -> Vec<usize> {
    (0..pg.order())
        .filter(|&i| {
            let m = pg.element(i);
            match side {
                Side::Left => as_left(m).is_some(),
                Side::Right => as_right(m).is_some(),
            }
        })
        .collect()
}

/// An orbit of ruling lines fixed by one-sided elements.
#[derive(Clone, Debug)]
pub struct RulingOrbit {
    pub side: Side,
    /// Order of the one-sided subgroup fixing each line of the orbit pointwise.
    pub fixing_order: usize,
    pub lines: Vec<ProjectiveLine>,
}

impl RulingOrbit {
    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn points(&self) -> Vec<RulingPoint> {
        self.lines
            .iter()
            .map(|l| ruling_point(l).expect("ruling line"))
            .collect()
    }
}

/// Orbits of the lines of one ruling that are fixed by nontrivial one-sided elements.
pub fn ruling_orbits(pg: &ProjectiveGroup, side: Side) -> Vec<RulingOrbit> {
    let k = side_elements(pg, side);
    let mut lines: Vec<ProjectiveLine> = Vec::new();
    for &i in &k {
        let m = pg.element(i);
        if m.is_scalar() {
            continue;
        }
        lines.extend(fix_lines(m).expect("finite order element"));
    }
    let mut out: Vec<RulingOrbit> = orbits(pg, &lines)
        .into_iter()
        .map(|o| {
            let fixing_order = k.iter().filter(|&&i| o[0].is_fixed_pointwise_by(pg.element(i))).count();
            RulingOrbit {
                side,
                fixing_order,
                lines: o,
            }
        })
        .collect();
    out.sort_by(|a, b| {
        (a.fixing_order, b.len())
            .cmp(&(b.fixing_order, a.len()))
            .then(a.lines.cmp(&b.lines))
    });
    out
}

/// Orbit lengths grouped by the order of the fixing one-sided subgroup, longest first.
pub fn orbits_on_ruling(pg: &ProjectiveGroup, side: Side) -> BTreeMap<usize, Vec<usize>> {
    let mut table: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for o in ruling_orbits(pg, side) {
        table.entry(o.fixing_order).or_default().push(o.len());
    }
    for v in table.values_mut() {
        v.sort_unstable_by(|a, b| b.cmp(a));
    }
    table
}

/// An orbit of fix-lines not contained in the quadric.
#[derive(Clone, Debug)]
pub struct FixLineClass {
    pub lines: Vec<ProjectiveLine>,
    /// `F_L` of the first line, as element indices.
    pub fix_group: Vec<usize>,
    /// `H_L` of the first line, as element indices.
    pub stabilizer: Vec<usize>,
    /// Whether `F_L` is cyclic.
    pub fix_group_cyclic: bool,
    pub line_type: Option<LineType>,
}

impl FixLineClass {
    pub fn rep(&self) -> &ProjectiveLine {
        &self.lines[0]
    }

    /// `ℓ(L)`.
    pub fn length(&self) -> usize {
        self.lines.len()
    }

    pub fn fix_order(&self) -> usize {
        self.fix_group.len()
    }

    pub fn stabilizer_order(&self) -> usize {
        self.stabilizer.len()
    }

    /// `|H_L| / |F_L|`.
    pub fn ratio(&self) -> usize {
        self.stabilizer_order() / self.fix_order()
    }

    pub fn contains(&self, line: &ProjectiveLine) -> bool {
        self.lines.binary_search(line).is_ok()
    }
}

/// All orbits of lines off the quadric that are fixed pointwise by some nontrivial element.
pub fn fixline_classes(pg: &ProjectiveGroup) -> Vec<FixLineClass> {
    let mut fixers: HashMap<ProjectiveLine, Vec<usize>> = HashMap::new();
    for i in 0..pg.order() {
        let m = pg.element(i);
        if m.is_scalar() {
            continue;
        }
        for l in fix_lines(m).expect("finite order element") {
            if !line_in_quadric(&l) {
                fixers.entry(l).or_default().push(i);
            }
        }
    }
    let lines: Vec<ProjectiveLine> = fixers.keys().cloned().collect();
    orbits(pg, &lines)
        .into_iter()
        .map(|o| {
            let rep = &o[0];
            let fix_group = fix_group(pg, rep);
            let stabilizer = stabilizer(pg, rep);
            let n = fix_group.len();
            let fix_group_cyclic = fix_group.iter().any(|&i| projective_order(pg.element(i)) as usize == n);
            let line_type = LineType::from_order(n);
            let lines = o.into_iter().map(|l| l.with_type(line_type)).collect();
            FixLineClass {
                lines,
                fix_group,
                stabilizer,
                fix_group_cyclic,
                line_type,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::quaternion::{p3, p4, q1, sigma, Quaternion};
    use crate::groups::FiniteMatrixGroup;

    #[test]
    fn q1_has_two_disjoint_fix_lines() {
        let lines = fix_lines(&sigma(&q1(), &Quaternion::one())).unwrap();
        assert_eq!(lines.len(), 2);
        assert!(!lines[0].meets(&lines[1]));
        assert!(lines.iter().all(|l| l.type_tag == Some(LineType::M)));
        assert!(lines.iter().all(line_in_quadric));
    }

    #[test]
    fn identity_has_no_fix_lines() {
        assert_eq!(fix_lines(&Matrix4::identity()), Err(GeometryError::TrivialElement));
    }

    #[test]
    fn diagonal_order_four_fixes_one_line() {
        let lines = fix_lines(&sigma(&p4(), &p4())).unwrap();
        assert_eq!(lines.len(), 1);
        assert_eq!(lines[0].type_tag, Some(LineType::R));
        assert!(!line_in_quadric(&lines[0]));
    }

    #[test]
    fn trivial_group_orbit() {
        let g = FiniteMatrixGroup::generate("1", vec![], 10).unwrap();
        let pg = g.projective();
        let l = fix_lines(&sigma(&p3(), &p3())).unwrap().remove(0);
        assert_eq!(orbit(&pg, &l).len(), 1);
        assert_eq!(stabilizer(&pg, &l).len(), 1);
    }
}
