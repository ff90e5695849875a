//! Curve graphs, Gram matrices, A-D-E root lattices and determinants.

use std::collections::HashMap;
use std::fmt;

use crate::error::LatticeError;
use crate::singularities::ade::{AdeKind, AdeType};

/// Intersection graph of smooth rational curves.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CurveGraph {
    names: Vec<String>,
    self_intersections: Vec<i64>,
    edges: Vec<(usize, usize, i64)>,
    index: HashMap<String, usize>,
}

impl CurveGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a curve and returns its index; names must be unique.
    pub fn add_curve(&mut self, name: &str, self_intersection: i64) -> Result<usize, LatticeError> {
        if self.index.contains_key(name) {
            return Err(LatticeError::Precondition(format!("duplicate curve {name}")));
        }
        let i = self.names.len();
        self.names.push(name.to_string());
        self.self_intersections.push(self_intersection);
        self.index.insert(name.to_string(), i);
        Ok(i)
    }

    pub fn add_edge(&mut self, a: usize, b: usize, mult: i64) -> Result<(), LatticeError> {
        if a == b {
            return Err(LatticeError::Precondition(format!("self-loop on {}", self.names[a])));
        }
        if mult < 1 {
            return Err(LatticeError::Precondition(format!("edge multiplicity {mult} < 1")));
        }
        let n = self.names.len();
        if a >= n || b >= n {
            return Err(LatticeError::DimensionMismatch {
                expected: n,
                got: a.max(b) + 1,
            });
        }
        let (a, b) = (a.min(b), a.max(b));
        match self.edges.iter_mut().find(|(x, y, _)| (*x, *y) == (a, b)) {
            Some(e) => e.2 += mult,
            None => self.edges.push((a, b, mult)),
        }
        Ok(())
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn self_intersections(&self) -> &[i64] {
        &self.self_intersections
    }

    pub fn edges(&self) -> &[(usize, usize, i64)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn to_lattice(&self) -> IntegralLattice {
        gram_from_graph(self)
    }
}

/// A lattice given by a symmetric integer Gram matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegralLattice {
    gram: Vec<Vec<i64>>,
    names: Vec<String>,
}

impl IntegralLattice {
    pub fn new(gram: Vec<Vec<i64>>, names: Vec<String>) -> Result<Self, LatticeError> {
        let n = gram.len();
        if names.len() != n {
            return Err(LatticeError::DimensionMismatch {
                expected: n,
                got: names.len(),
            });
        }
        for (i, row) in gram.iter().enumerate() {
            if row.len() != n {
                return Err(LatticeError::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::Precondition(format!("Gram not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(IntegralLattice { gram, names })
    }

    /// Lattice with default basis names `e1, e2, …`.
    pub fn from_gram(gram: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        let names = (1..=gram.len()).map(|i| format!("e{i}")).collect();
        Self::new(gram, names)
    }

    pub fn empty() -> Self {
        IntegralLattice {
            gram: Vec::new(),
            names: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_even(&self) -> bool {
        self.gram.iter().enumerate().all(|(i, r)| r[i] % 2 == 0)
    }

    /// `Gram·v`, checked.
    pub fn apply(&self, v: &[i64]) -> Result<Vec<i128>, LatticeError> {
        self.check_len(v)?;
        self.gram
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .try_fold(0i128, |acc, (&g, &c)| {
                        acc.checked_add((g as i128).checked_mul(c as i128)?)
                    })
                    .ok_or(LatticeError::Overflow)
            })
            .collect()
    }

    pub fn product(&self, a: &[i64], b: &[i64]) -> Result<i128, LatticeError> {
        let ga = self.apply(a)?;
        self.check_len(b)?;
        ga.iter()
            .zip(b)
            .try_fold(0i128, |acc, (&x, &c)| acc.checked_add(x.checked_mul(c as i128)?))
            .ok_or(LatticeError::Overflow)
    }

    pub fn norm(&self, v: &[i64]) -> Result<i128, LatticeError> {
        self.product(v, v)
    }

    pub(crate) fn check_len(&self, v: &[i64]) -> Result<(), LatticeError> {
        if v.len() != self.rank() {
            return Err(LatticeError::DimensionMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for IntegralLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegralLattice {:?}", self.names)?;
        for row in &self.gram {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// Gram matrix of a curve graph: self-intersections on the diagonal, edge multiplicities off it.
pub fn gram_from_graph(g: &CurveGraph) -> IntegralLattice {
    let n = g.len();
    let mut gram = vec![vec![0i64; n]; n];
    for (i, s) in g.self_intersections().iter().enumerate() {
        gram[i][i] = *s;
    }
    for &(a, b, m) in g.edges() {
        gram[a][b] += m;
        gram[b][a] += m;
    }
    IntegralLattice {
        gram,
        names: g.names().to_vec(),
    }
}

/// Edges of the Dynkin diagram on nodes `0..n`.
pub fn dynkin_edges(t: AdeType) -> Vec<(usize, usize)> {
    let n = t.index;
    match t.kind {
        AdeKind::A => (1..n).map(|i| (i - 1, i)).collect(),
        AdeKind::D => {
            let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
            e.push((n - 3, n - 1));
            e
        }
        AdeKind::E => {
            let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
            e.push((2, n - 1));
            e
        }
    }
}

/// Negative definite root lattice of the given type.
pub fn ade_lattice(t: AdeType) -> IntegralLattice {
    let mut g = CurveGraph::new();
    for i in 0..t.index {
        g.add_curve(&format!("{t}_{}", i + 1), -2).expect("fresh names");
    }
    for (a, b) in dynkin_edges(t) {
        g.add_edge(a, b, 1).expect("valid edge");
    }
    gram_from_graph(&g)
}

pub fn direct_sum(a: &IntegralLattice, b: &IntegralLattice) -> IntegralLattice {
    let (n, m) = (a.rank(), b.rank());
    let mut gram = vec![vec![0i64; n + m]; n + m];
    for i in 0..n {
        gram[i][..n].copy_from_slice(&a.gram[i]);
    }
    for i in 0..m {
        gram[n + i][n..].copy_from_slice(&b.gram[i]);
    }
    let mut names = a.names.clone();
    for name in &b.names {
        let mut fresh = name.clone();
        while names.contains(&fresh) {
            fresh.push('\'');
        }
        names.push(fresh);
    }
    IntegralLattice { gram, names }
}

/// Direct sum of `mult` copies of each listed type.
pub fn ade_sum(parts: &[(usize, AdeType)]) -> IntegralLattice {
    let mut acc = IntegralLattice::empty();
    for &(m, t) in parts {
        for _ in 0..m {
            acc = direct_sum(&acc, &ade_lattice(t));
        }
    }
    acc
}

/// Signed determinant of an integer matrix by fraction-free elimination.
pub fn determinant(m: &[Vec<i64>]) -> Result<i128, LatticeError> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return Ok(0);
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[k][k]
                    .checked_mul(a[i][j])
                    .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                    .ok_or(LatticeError::Overflow)?;
                a[i][j] = t / prev;
            }
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Signed discriminant `det(Gram)`.
pub fn discriminant(l: &IntegralLattice) -> Result<i128, LatticeError> {
    determinant(&l.gram)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ade_determinants() {
        let cases = [
            (AdeType::a(1), -2),
            (AdeType::a(2), 3),
            (AdeType::a(3), -4),
            (AdeType::d(4), 4),
            (AdeType::d(5), -4),
            (AdeType::e(6), 3),
            (AdeType::e(7), -2),
            (AdeType::e(8), 1),
        ];
        for (t, d) in cases {
            assert_eq!(discriminant(&ade_lattice(t)).unwrap(), d, "{t}");
        }
        assert_eq!(discriminant(&IntegralLattice::empty()).unwrap(), 1);
    }

    #[test]
    fn six_disjoint_a2() {
        let l = ade_sum(&[(6, AdeType::a(2))]);
        assert_eq!(discriminant(&l).unwrap(), 729);
        assert_eq!(discriminant(&ade_sum(&[(3, AdeType::a(1))])).unwrap(), -8);
    }

    #[test]
    fn graph_gram() {
        let mut g = CurveGraph::new();
        let a = g.add_curve("L1", -2).unwrap();
        let b = g.add_curve("L2", -2).unwrap();
        g.add_edge(a, b, 1).unwrap();
        assert_eq!(g.to_lattice().gram(), &[vec![-2, 1], vec![1, -2]]);
        assert!(g.add_edge(a, a, 1).is_err());
        assert!(g.add_curve("L1", -2).is_err());
    }

    #[test]
    fn asymmetric_gram_rejected() {
        assert!(IntegralLattice::from_gram(vec![vec![-2, 1], vec![0, -2]]).is_err());
    }

    #[test]
    fn determinant_with_pivoting() {
        let m = vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 5]];
        assert_eq!(determinant(&m).unwrap(), -5);
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]).unwrap(), 0);
    }
}
