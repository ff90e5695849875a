//! Finite subgroups of SO(4) generated by explicit matrices, and their images in PGL(4).

pub mod quaternion;
pub mod registry;

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use once_cell::sync::OnceCell;

use crate::algebra::{AlgebraicScalar, Matrix4, Rational};
pub use crate::error::GroupError;
pub use registry::{GroupLabel, Side};

pub const DEFAULT_CAP: usize = 10_000;

/// A group element together with its hashable normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub matrix: Matrix4,
}

impl GroupElement {
    pub fn new(matrix: Matrix4) -> Self {
        GroupElement { matrix }
    }

    pub fn canonical_key(&self) -> Vec<[Rational; 8]> {
        self.matrix.canonical_key()
    }

    /// Multiplicative order; group elements here have order dividing 24.
    pub fn order(&self) -> u32 {
        element_order(&self.matrix)
    }
}

/// Multiplicative order of a matrix of finite order at most 120.
pub fn element_order(m: &Matrix4) -> u32 {
    m.order(120).expect("element of finite order")
}

/// Order of the image in PGL(4), i.e. the least `k` with `mᵏ = ±I`.
pub fn projective_order(m: &Matrix4) -> u32 {
    let minus = Matrix4::scalar(AlgebraicScalar::from(-1));
    let mut acc = m.clone();
    for k in 1..=120 {
        if acc.is_identity() || acc == minus {
            return k;
        }
        acc = &acc * m;
    }
    panic!("element of infinite projective order");
}

#[derive(Debug)]
pub struct FiniteMatrixGroup {
    name: String,
    generators: Vec<Matrix4>,
    elements: Vec<Matrix4>,
    index: HashMap<Matrix4, usize>,
    projective: OnceCell<Arc<ProjectiveGroup>>,
}

impl FiniteMatrixGroup {
    /// Breadth-first closure of `generators` under left multiplication.
    pub fn generate(name: &str, generators: Vec<Matrix4>, cap: usize) -> Result<Self, GroupError> {
        for g in &generators {
            if g.det().is_zero() {
                return Err(GroupError::Algebra(crate::error::AlgebraError::Singular));
            }
        }
        let id = Matrix4::identity();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let prod = g * &elements[i];
                if index.contains_key(&prod) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(GroupError::CapExceeded { cap });
                }
                index.insert(prod.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(prod);
            }
        }
        Ok(FiniteMatrixGroup {
            name: name.to_string(),
            generators,
            elements,
            index,
            projective: OnceCell::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Matrix4] {
        &self.generators
    }

    pub fn elements(&self) -> &[Matrix4] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &Matrix4) -> bool {
        self.index.contains_key(m)
    }

    pub fn position(&self, m: &Matrix4) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn is_subgroup_of(&self, g: &FiniteMatrixGroup) -> bool {
        self.elements.iter().all(|e| g.contains(e))
    }

    /// Normality by conjugating the generators of `self` with the generators of `g`.
    pub fn is_normal_in(&self, g: &FiniteMatrixGroup) -> bool {
        if !self.is_subgroup_of(g) {
            return false;
        }
        g.generators.iter().all(|x| {
            let xinv = x.inverse().expect("group elements are invertible");
            self.generators.iter().all(|h| self.contains(&(&(x * h) * &xinv)))
        })
    }

    pub fn index_in(&self, g: &FiniteMatrixGroup) -> Result<usize, GroupError> {
        if !self.is_subgroup_of(g) {
            return Err(GroupError::NotSubgroup {
                sub: self.name.clone(),
                group: g.name.clone(),
            });
        }
        Ok(g.order() / self.order())
    }

    /// The group `c⁻¹·G·c`.
    pub fn conjugate(&self, c: &Matrix4) -> Result<FiniteMatrixGroup, GroupError> {
        let cinv = c.inverse()?;
        let gens = self.generators.iter().map(|g| &(&cinv * g) * c).collect();
        FiniteMatrixGroup::generate(&format!("{}^c", self.name), gens, self.order().max(1))
    }

    /// Image in PGL(4); cached.
    pub fn projective(&self) -> Arc<ProjectiveGroup> {
        self.projective
            .get_or_init(|| Arc::new(ProjectiveGroup::from_group(self)))
            .clone()
    }
}

/// A finite group modulo its scalar subgroup (±I inside SO(4)).
#[derive(Debug)]
pub struct ProjectiveGroup {
    name: String,
    source_order: usize,
    /// One representative per class `{M, −M}`: the larger of the two in the derived order.
    elements: Vec<Matrix4>,
    index: HashMap<Matrix4, usize>,
    generators: Vec<usize>,
}

/// Canonical representative of `±m`.
pub fn projective_rep(m: &Matrix4) -> Matrix4 {
    let n = m.neg();
    if n > *m {
        n
    } else {
        m.clone()
    }
}

impl ProjectiveGroup {
    pub fn from_group(g: &FiniteMatrixGroup) -> Self {
        let mut elements = Vec::new();
        let mut index = HashMap::new();
        // keep the identity first
        for m in g.elements() {
            let rep = projective_rep(m);
            if !index.contains_key(&rep) {
                index.insert(rep.clone(), elements.len());
                elements.push(rep);
            }
        }
        let mut generators: Vec<usize> = g.generators().iter().map(|m| index[&projective_rep(m)]).collect();
        generators.sort_unstable();
        generators.dedup();
        generators.retain(|&i| i != 0);
        ProjectiveGroup {
            name: g.name().to_string(),
            source_order: g.order(),
            elements,
            index,
            generators,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Order of the scalar subgroup of the source group.
    pub fn scalar_order(&self) -> usize {
        self.source_order / self.order()
    }

    pub fn elements(&self) -> &[Matrix4] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Matrix4 {
        &self.elements[i]
    }

    pub fn generators(&self) -> impl Iterator<Item = &Matrix4> {
        self.generators.iter().map(|&i| &self.elements[i])
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn position(&self, m: &Matrix4) -> Option<usize> {
        self.index.get(&projective_rep(m)).copied()
    }

    pub fn contains(&self, m: &Matrix4) -> bool {
        self.position(m).is_some()
    }

    /// Conjugacy classes as sorted lists of element indices, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let gens: Vec<(Matrix4, Matrix4)> = self
            .generators()
            .map(|g| (g.clone(), g.inverse().expect("invertible")))
            .collect();
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.order() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            let mut members = vec![start];
            class_of[start] = cid;
            let mut k = 0;
            while k < members.len() {
                let x = self.elements[members[k]].clone();
                for (g, ginv) in &gens {
                    let y = &(g * &x) * ginv;
                    let j = self.position(&y).expect("closed under conjugation");
                    if class_of[j] == usize::MAX {
                        class_of[j] = cid;
                        members.push(j);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }
}
