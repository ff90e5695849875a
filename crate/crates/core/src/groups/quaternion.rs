//! Quaternions over the field and the map `σ(a, b): x ↦ a·x·b̄` into 4×4 matrices.
//!
//! Coordinates are `(x₀, x₁, x₂, x₃) ↔ x₀ + x₁i + x₂j + x₃k`.

use std::ops::Mul;

use crate::algebra::{AlgebraicScalar as S, Matrix4, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion(pub [S; 4]);

impl Quaternion {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Quaternion([a, b, c, d])
    }

    pub fn from_ints(v: [i64; 4]) -> Self {
        Quaternion(v.map(S::from))
    }

    pub fn one() -> Self {
        Self::from_ints([1, 0, 0, 0])
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.0;
        Quaternion([a.clone(), -b, -c, -d])
    }

    pub fn neg(&self) -> Self {
        Quaternion(self.0.clone().map(|x| -x))
    }

    pub fn scale(&self, s: &S) -> Self {
        Quaternion(self.0.clone().map(|x| &x * s))
    }

    pub fn norm(&self) -> S {
        self.0.iter().fold(S::zero(), |acc, x| &acc + &(x * x))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Matrix of `x ↦ self·x`.
    pub fn left_matrix(&self) -> Matrix4 {
        let basis = unit_basis();
        Matrix4::from_columns(basis.map(|e| (self * &e).0))
    }

    /// Matrix of `x ↦ x·self`.
    pub fn right_matrix(&self) -> Matrix4 {
        let basis = unit_basis();
        Matrix4::from_columns(basis.map(|e| (&e * self).0))
    }
}

fn unit_basis() -> [Quaternion; 4] {
    [
        Quaternion::from_ints([1, 0, 0, 0]),
        Quaternion::from_ints([0, 1, 0, 0]),
        Quaternion::from_ints([0, 0, 1, 0]),
        Quaternion::from_ints([0, 0, 0, 1]),
    ]
}

impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;

    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let [a0, a1, a2, a3] = &self.0;
        let [b0, b1, b2, b3] = &rhs.0;
        let m = |x: &S, y: &S| x * y;
        Quaternion([
            &(&(&m(a0, b0) - &m(a1, b1)) - &m(a2, b2)) - &m(a3, b3),
            &(&(&m(a0, b1) + &m(a1, b0)) + &m(a2, b3)) - &m(a3, b2),
            &(&(&m(a0, b2) - &m(a1, b3)) + &m(a2, b0)) + &m(a3, b1),
            &(&(&m(a0, b3) + &m(a1, b2)) - &m(a2, b1)) + &m(a3, b0),
        ])
    }
}

/// `σ(a, b)`: the matrix of `x ↦ a·x·b̄`.
pub fn sigma(a: &Quaternion, b: &Quaternion) -> Matrix4 {
    &a.left_matrix() * &b.conj().right_matrix()
}

/// `q₁ = i`.
pub fn q1() -> Quaternion {
    Quaternion::from_ints([0, 1, 0, 0])
}

/// `q₂ = j`.
pub fn q2() -> Quaternion {
    Quaternion::from_ints([0, 0, 1, 0])
}

/// `q₃ = q₁q₂ = k`.
pub fn q3() -> Quaternion {
    &q1() * &q2()
}

/// `p₃ = (1 + i − j + k)/2`, order 6.
pub fn p3() -> Quaternion {
    Quaternion::from_ints([1, 1, -1, 1]).scale(&S::from_rational(Rational::new(1, 2)))
}

/// `p₄ = (1 + i)/√2`, order 8.
pub fn p4() -> Quaternion {
    let r = S::sqrt2().inv().expect("√2 ≠ 0");
    Quaternion::from_ints([1, 1, 0, 0]).scale(&r)
}

/// Looks up a named unit quaternion: `1`, `-1`, `q1`..`q3`, `p3`, `p4`, or products like `p4q2`, `p3^2`.
pub fn named(name: &str) -> Option<Quaternion> {
    let mut acc = Quaternion::one();
    let mut rest = name.trim();
    if rest == "1" {
        return Some(acc);
    }
    if let Some(r) = rest.strip_prefix('-') {
        acc = acc.neg();
        rest = r;
    }
    while !rest.is_empty() {
        let (base, tail) = match rest.get(..2) {
            Some("q1") => (q1(), &rest[2..]),
            Some("q2") => (q2(), &rest[2..]),
            Some("q3") => (q3(), &rest[2..]),
            Some("p3") => (p3(), &rest[2..]),
            Some("p4") => (p4(), &rest[2..]),
            _ => return None,
        };
        let (exp, tail) = match tail.strip_prefix('^') {
            Some(t) => {
                let digits: String = t.chars().take_while(|c| c.is_ascii_digit()).collect();
                (digits.parse().ok()?, &t[digits.len()..])
            }
            None => (1, tail),
        };
        acc = &acc * &base.pow(exp);
        rest = tail;
    }
    Some(acc)
}

/// Quaternion `M·e₀` of a matrix, the candidate factor of a one-sided element.
pub fn first_column(m: &Matrix4) -> Quaternion {
    let c = m.column(0);
    Quaternion([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()])
}

/// `Some(p)` when `m = σ(p, 1)`.
pub fn as_left(m: &Matrix4) -> Option<Quaternion> {
    let p = first_column(m);
    (p.left_matrix() == *m).then_some(p)
}

/// `Some(p)` when `m = σ(1, p)`.
pub fn as_right(m: &Matrix4) -> Option<Quaternion> {
    let pbar = first_column(m);
    (pbar.right_matrix() == *m).then(|| pbar.conj())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_relations() {
        let minus_one = Quaternion::one().neg();
        assert_eq!(&q1() * &q1(), minus_one);
        assert_eq!(&q2() * &q2(), minus_one);
        assert_eq!(&q3() * &q3(), minus_one);
        assert_eq!(&q2() * &q1(), q3().neg());
    }

    #[test]
    fn orders_of_p3_p4() {
        assert_eq!(p3().pow(6), Quaternion::one());
        assert_ne!(p3().pow(3), Quaternion::one());
        assert_eq!(p4().pow(8), Quaternion::one());
        assert_ne!(p4().pow(4), Quaternion::one());
        assert!(p4().norm().is_one());
    }

    #[test]
    fn sigma_is_a_homomorphism() {
        let (a, b, c, d) = (p3(), p4(), q2(), &p4() * &q1());
        let lhs = &sigma(&a, &b) * &sigma(&c, &d);
        let rhs = sigma(&(&a * &c), &(&b * &d));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn one_sided_detection() {
        let m = sigma(&p3(), &Quaternion::one());
        assert_eq!(as_left(&m), Some(p3()));
        assert_eq!(as_right(&m), None);
        let m = sigma(&Quaternion::one(), &p4());
        assert_eq!(as_right(&m), Some(p4()));
        assert_eq!(as_left(&m), None);
    }

    #[test]
    fn names_parse() {
        assert_eq!(named("p4q2"), Some(&p4() * &q2()));
        assert_eq!(named("p3^2"), Some(&p3() * &p3()));
        assert_eq!(named("-q1"), Some(q1().neg()));
        assert_eq!(named("x7"), None);
    }
}
