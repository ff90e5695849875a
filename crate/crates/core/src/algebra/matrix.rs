//! 4×4 matrices over the cyclotomic field.

use std::fmt;
use std::ops::Mul;

use super::linalg::{kernel, Vector};
use super::scalar::{AlgebraicScalar, Rational, ROOT_ORDER};
use super::AlgebraError;

type S = AlgebraicScalar;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix4 {
    entries: [[S; 4]; 4],
}

impl Matrix4 {
    pub fn new(entries: [[S; 4]; 4]) -> Self {
        Matrix4 { entries }
    }

    pub fn identity() -> Self {
        Self::scalar(S::one())
    }

    pub fn zero() -> Self {
        Self::scalar(S::zero())
    }

    pub fn scalar(s: S) -> Self {
        let mut m = Matrix4 {
            entries: Default::default(),
        };
        for i in 0..4 {
            m.entries[i][i] = s.clone();
        }
        m
    }

    /// Integer matrix times a rational factor, the shape of the displayed generators.
    pub fn from_ints(rows: [[i64; 4]; 4], factor: &S) -> Self {
        let mut m = Matrix4::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = factor * &S::from(rows[i][j]);
            }
        }
        m
    }

    pub fn from_columns(cols: [[S; 4]; 4]) -> Self {
        let mut m = Matrix4::zero();
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                m.entries[i][j] = v;
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[[S; 4]; 4] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> Vector {
        self.entries[i].to_vec()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..4).map(|i| self.entries[i][j].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Matrix4::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = self.entries[j][i].clone();
            }
        }
        m
    }

    pub fn neg(&self) -> Self {
        let mut m = self.clone();
        for row in m.entries.iter_mut() {
            for e in row.iter_mut() {
                *e = -&*e;
            }
        }
        m
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut m = self.clone();
        for row in m.entries.iter_mut() {
            for e in row.iter_mut() {
                *e = &*e * s;
            }
        }
        m
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut m = self.clone();
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = &self.entries[i][j] - &other.entries[i][j];
            }
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Scalar multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        let d = &self.entries[0][0];
        (0..4).all(|i| {
            (0..4).all(|j| {
                if i == j {
                    self.entries[i][j] == *d
                } else {
                    self.entries[i][j].is_zero()
                }
            })
        })
    }

    pub fn mul_vec(&self, v: &[S]) -> Vector {
        assert_eq!(v.len(), 4);
        (0..4)
            .map(|i| {
                let mut acc = S::zero();
                for j in 0..4 {
                    if !self.entries[i][j].is_zero() && !v[j].is_zero() {
                        acc += &(&self.entries[i][j] * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn det(&self) -> S {
        // Laplace expansion along 2×2 minors of the first two rows.
        let e = &self.entries;
        let minor =
            |r0: usize, r1: usize, a: usize, b: usize| -> S { &(&e[r0][a] * &e[r1][b]) - &(&e[r0][b] * &e[r1][a]) };
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut acc = S::zero();
        for &(a, b) in &pairs {
            let (c, d) = complement(a, b);
            let sign = if (a + b) % 2 == 1 { 1 } else { -1 };
            let term = &minor(0, 1, a, b) * &minor(2, 3, c, d);
            if sign < 0 {
                acc = &acc - &term;
            } else {
                acc = &acc + &term;
            }
        }
        acc
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let det = self.det();
        if det.is_zero() {
            return Err(AlgebraError::Singular);
        }
        let inv_det = det.inv()?;
        let mut m = Matrix4::zero();
        for i in 0..4 {
            for j in 0..4 {
                let sign = if (i + j) % 2 == 0 { S::one() } else { S::from(-1) };
                // adjugate: transpose of the cofactor matrix
                m.entries[j][i] = &(&sign * &self.minor3(i, j)) * &inv_det;
            }
        }
        Ok(m)
    }

    fn minor3(&self, skip_r: usize, skip_c: usize) -> S {
        let rows: Vec<usize> = (0..4).filter(|&r| r != skip_r).collect();
        let cols: Vec<usize> = (0..4).filter(|&c| c != skip_c).collect();
        let a = |r: usize, c: usize| &self.entries[rows[r]][cols[c]];
        let t0 = a(0, 0) * &(&(a(1, 1) * a(2, 2)) - &(a(1, 2) * a(2, 1)));
        let t1 = a(0, 1) * &(&(a(1, 0) * a(2, 2)) - &(a(1, 2) * a(2, 0)));
        let t2 = a(0, 2) * &(&(a(1, 0) * a(2, 1)) - &(a(1, 1) * a(2, 0)));
        &(&t0 - &t1) + &t2
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Multiplicative order, if it divides `bound`-ish small limits.
    pub fn order(&self, limit: u32) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=limit {
            if acc.is_identity() {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }

    /// Eigenvalues among the 24th roots of unity with their eigenspaces.
    ///
    /// Each basis is in reduced echelon form. Fails when the eigenspace
    /// dimensions do not add up to 4, which happens exactly when some
    /// eigenvalue is not a 24th root of unity or the matrix is not diagonalizable.
    pub fn eigenspaces(&self) -> Result<Vec<(S, Vec<Vector>)>, AlgebraError> {
        let candidates: Vec<usize> = match self.order(ROOT_ORDER as u32) {
            Some(n) => (0..ROOT_ORDER)
                .filter(|k| (k * n as usize).is_multiple_of(ROOT_ORDER))
                .collect(),
            None => (0..ROOT_ORDER).collect(),
        };
        let mut out = Vec::new();
        let mut total = 0;
        for k in candidates {
            let lambda = S::zeta_pow(k as i64);
            let shifted = self.sub(&Matrix4::scalar(lambda.clone()));
            let rows: Vec<Vector> = (0..4).map(|i| shifted.row(i)).collect();
            let basis = kernel(&rows, 4);
            if !basis.is_empty() {
                total += basis.len();
                out.push((lambda, basis));
            }
        }
        if total != 4 {
            return Err(AlgebraError::EigenvalueOutsideRoots);
        }
        Ok(out)
    }

    /// Coordinates of every entry in the power basis, row-major.
    pub fn canonical_key(&self) -> Vec<[Rational; 8]> {
        self.entries.iter().flat_map(|r| r.iter().map(|e| e.coeffs())).collect()
    }
}

fn complement(a: usize, b: usize) -> (usize, usize) {
    let rest: Vec<usize> = (0..4).filter(|&k| k != a && k != b).collect();
    (rest[0], rest[1])
}

impl<'a> Mul<&'a Matrix4> for &'a Matrix4 {
    type Output = Matrix4;

    fn mul(self, rhs: &Matrix4) -> Matrix4 {
        let mut m = Matrix4::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = S::zero();
                for k in 0..4 {
                    let (a, b) = (&self.entries[i][k], &rhs.entries[k][j]);
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                m.entries[i][j] = acc;
            }
        }
        m
    }
}

impl Mul<Matrix4> for Matrix4 {
    type Output = Matrix4;

    fn mul(self, rhs: Matrix4) -> Matrix4 {
        &self * &rhs
    }
}

impl fmt::Debug for Matrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q1_left() -> Matrix4 {
        Matrix4::from_ints([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]], &S::one())
    }

    #[test]
    fn det_and_inverse() {
        let m = Matrix4::from_ints([[2, 1, 0, 0], [1, 3, 1, 0], [0, 1, 4, 1], [0, 0, 1, 5]], &S::one());
        // tridiagonal recurrence: 2, 5, 18, 85
        assert_eq!(m.det(), S::from(85));
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!((&inv * &m).is_identity());
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = Matrix4::from_ints([[1, 2, 3, 4], [2, 4, 6, 8], [0, 0, 1, 0], [0, 0, 0, 1]], &S::one());
        assert_eq!(m.inverse(), Err(AlgebraError::Singular));
    }

    #[test]
    fn identity_eigenspace() {
        let es = Matrix4::identity().eigenspaces().unwrap();
        assert_eq!(es.len(), 1);
        assert!(es[0].0.is_one());
        assert_eq!(es[0].1.len(), 4);
    }

    #[test]
    fn q1_eigenvalues_are_plus_minus_i() {
        let es = q1_left().eigenspaces().unwrap();
        assert_eq!(es.len(), 2);
        let mut vals: Vec<S> = es.iter().map(|(l, _)| l.clone()).collect();
        vals.sort();
        let mut expected = vec![S::i(), -S::i()];
        expected.sort();
        assert_eq!(vals, expected);
        assert!(es.iter().all(|(_, b)| b.len() == 2));
        for (lambda, basis) in &es {
            for v in basis {
                let mv = q1_left().mul_vec(v);
                let lv: Vec<S> = v.iter().map(|x| x * lambda).collect();
                assert_eq!(mv, lv);
            }
        }
    }

    #[test]
    fn non_diagonalizable_is_rejected() {
        let m = Matrix4::from_ints([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], &S::one());
        assert_eq!(m.eigenspaces(), Err(AlgebraError::EigenvalueOutsideRoots));
        let m = Matrix4::scalar(S::from(2));
        assert_eq!(m.eigenspaces(), Err(AlgebraError::EigenvalueOutsideRoots));
    }
}
