//! Points and lines of P³ in canonical form.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::algebra::linalg::{kernel, normalize, rank, span};
use crate::algebra::{AlgebraicScalar as S, Matrix4, Vector};
use crate::error::GeometryError;

/// Plücker index pairs in key order.
pub const PLUECKER_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineType {
    M,
    N,
    R,
}

impl LineType {
    /// Type of a line fixed pointwise by an element of the given projective order.
    pub fn from_order(order: usize) -> Option<LineType> {
        match order {
            2 => Some(LineType::M),
            3 => Some(LineType::N),
            4 => Some(LineType::R),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LineType::M => "M",
            LineType::N => "N",
            LineType::R => "R",
        }
    }
}

/// A point of P³ with first nonzero coordinate 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: Vector,
}

impl ProjectivePoint {
    pub fn new(v: &[S]) -> Option<Self> {
        assert_eq!(v.len(), 4);
        normalize(v).map(|coords| ProjectivePoint { coords })
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn transform(&self, g: &Matrix4) -> ProjectivePoint {
        ProjectivePoint::new(&g.mul_vec(&self.coords)).expect("invertible map")
    }

    pub fn is_fixed_by(&self, g: &Matrix4) -> bool {
        let w = g.mul_vec(&self.coords);
        let lead = self.coords.iter().position(|x| !x.is_zero()).expect("nonzero");
        let c = &w[lead];
        w.iter().zip(&self.coords).all(|(a, b)| *a == c * b)
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", cells.join(" : "))
    }
}

/// A line of P³: a reduced echelon basis plus its normalized Plücker vector.
#[derive(Clone)]
pub struct ProjectiveLine {
    basis: [Vector; 2],
    pivots: [usize; 2],
    pluecker: [S; 6],
    pub type_tag: Option<LineType>,
}

impl ProjectiveLine {
    /// The span of two vectors; fails unless they are independent.
    pub fn from_vectors(a: &[S], b: &[S]) -> Result<Self, GeometryError> {
        let basis = span(&[a.to_vec(), b.to_vec()]);
        if basis.len() != 2 || basis[0].len() != 4 {
            return Err(GeometryError::NotALine);
        }
        Ok(Self::from_echelon(basis[0].clone(), basis[1].clone()))
    }

    fn from_echelon(u: Vector, v: Vector) -> Self {
        let p0 = u.iter().position(|x| !x.is_zero()).expect("echelon row");
        let p1 = v.iter().position(|x| !x.is_zero()).expect("echelon row");
        let raw = raw_pluecker(&u, &v);
        let pluecker = normalize(&raw)
            .expect("independent rows")
            .try_into()
            .expect("six entries");
        ProjectiveLine {
            basis: [u, v],
            pivots: [p0, p1],
            pluecker,
            type_tag: None,
        }
    }

    pub fn with_type(mut self, t: Option<LineType>) -> Self {
        self.type_tag = t;
        self
    }

    pub fn basis(&self) -> &[Vector; 2] {
        &self.basis
    }

    pub fn pluecker(&self) -> &[S; 6] {
        &self.pluecker
    }

    /// The image `g·L`.
    pub fn transform(&self, g: &Matrix4) -> ProjectiveLine {
        let u = g.mul_vec(&self.basis[0]);
        let v = g.mul_vec(&self.basis[1]);
        let mut rows = vec![u, v];
        crate::algebra::linalg::rref(&mut rows, 4);
        let v = rows.pop().expect("rank 2");
        let u = rows.pop().expect("rank 2");
        Self::from_echelon(u, v).with_type(self.type_tag)
    }

    /// Whether `w` lies in the span of the line.
    pub fn contains_vector(&self, w: &[S]) -> bool {
        let [p0, p1] = self.pivots;
        (0..4).all(|k| {
            let expect = &(&w[p0] * &self.basis[0][k]) + &(&w[p1] * &self.basis[1][k]);
            expect == w[k]
        })
    }

    pub fn contains_point(&self, p: &ProjectivePoint) -> bool {
        self.contains_vector(p.coords())
    }

    /// `g·L = L`.
    pub fn is_stabilized_by(&self, g: &Matrix4) -> bool {
        self.basis.iter().all(|b| self.contains_vector(&g.mul_vec(b)))
    }

    /// `g` fixes every point of `L`.
    pub fn is_fixed_pointwise_by(&self, g: &Matrix4) -> bool {
        let [p0, _] = self.pivots;
        let gu = g.mul_vec(&self.basis[0]);
        let c = gu[p0].clone();
        let gv = g.mul_vec(&self.basis[1]);
        (0..4).all(|k| gu[k] == &c * &self.basis[0][k] && gv[k] == &c * &self.basis[1][k])
    }

    /// The common point of two lines, if they meet in exactly one point.
    pub fn intersection(&self, other: &ProjectiveLine) -> Option<ProjectivePoint> {
        let cols = [&self.basis[0], &self.basis[1], &other.basis[0], &other.basis[1]];
        let rows: Vec<Vector> = (0..4).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let k = kernel(&rows, 4);
        if k.len() != 1 {
            return None;
        }
        let c = &k[0];
        let point: Vector = (0..4)
            .map(|r| &(&c[0] * &self.basis[0][r]) + &(&c[1] * &self.basis[1][r]))
            .collect();
        ProjectivePoint::new(&point)
    }

    pub fn meets(&self, other: &ProjectiveLine) -> bool {
        let all = [
            self.basis[0].clone(),
            self.basis[1].clone(),
            other.basis[0].clone(),
            other.basis[1].clone(),
        ];
        rank(&all) < 4
    }

    /// Plücker relation `p01·p23 − p02·p13 + p03·p12 = 0`.
    pub fn pluecker_relation(&self) -> S {
        let p = &self.pluecker;
        &(&(&p[0] * &p[5]) - &(&p[1] * &p[4])) + &(&p[2] * &p[3])
    }
}

fn raw_pluecker(u: &[S], v: &[S]) -> Vec<S> {
    PLUECKER_PAIRS
        .iter()
        .map(|&(i, j)| &(&u[i] * &v[j]) - &(&u[j] * &v[i]))
        .collect()
}

impl PartialEq for ProjectiveLine {
    fn eq(&self, other: &Self) -> bool {
        self.pluecker == other.pluecker
    }
}

impl Eq for ProjectiveLine {}

impl Hash for ProjectiveLine {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.pluecker.hash(state);
    }
}

impl PartialOrd for ProjectiveLine {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjectiveLine {
    fn cmp(&self, other: &Self) -> Ordering {
        self.pluecker.cmp(&other.pluecker)
    }
}

impl fmt::Debug for ProjectiveLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.pluecker.iter().map(|x| x.to_string()).collect();
        write!(f, "Line[{}]", cells.join(", "))?;
        if let Some(t) = self.type_tag {
            write!(f, "<{}>", t.as_str())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: [i64; 4]) -> Vector {
        xs.iter().map(|&x| S::from(x)).collect()
    }

    #[test]
    fn key_is_basis_independent() {
        let a = ProjectiveLine::from_vectors(&v([1, 0, 1, 0]), &v([0, 1, 0, 1])).unwrap();
        let b = ProjectiveLine::from_vectors(&v([1, 1, 1, 1]), &v([2, -1, 2, -1])).unwrap();
        assert_eq!(a, b);
        assert!(a.pluecker_relation().is_zero());
    }

    #[test]
    fn dependent_vectors_are_not_a_line() {
        assert!(ProjectiveLine::from_vectors(&v([1, 2, 0, 0]), &v([2, 4, 0, 0])).is_err());
    }

    #[test]
    fn intersection_of_coordinate_lines() {
        let a = ProjectiveLine::from_vectors(&v([1, 0, 0, 0]), &v([0, 1, 0, 0])).unwrap();
        let b = ProjectiveLine::from_vectors(&v([0, 1, 0, 0]), &v([0, 0, 1, 0])).unwrap();
        let c = ProjectiveLine::from_vectors(&v([0, 0, 1, 0]), &v([0, 0, 0, 1])).unwrap();
        assert_eq!(a.intersection(&b), ProjectivePoint::new(&v([0, 1, 0, 0])));
        assert!(a.intersection(&c).is_none());
        assert!(!a.meets(&c));
        assert!(a.intersection(&a).is_none());
    }

    #[test]
    fn stabilizer_and_pointwise_tests() {
        let l = ProjectiveLine::from_vectors(&v([1, 0, 0, 0]), &v([0, 1, 0, 0])).unwrap();
        let swap = Matrix4::from_ints([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], &S::one());
        assert!(l.is_stabilized_by(&swap));
        assert!(!l.is_fixed_pointwise_by(&swap));
        let diag = Matrix4::from_ints([[3, 0, 0, 0], [0, 3, 0, 0], [0, 0, 1, 0], [0, 0, 0, 2]], &S::one());
        assert!(l.is_fixed_pointwise_by(&diag));
        assert_eq!(l.transform(&swap), l);
    }
}
