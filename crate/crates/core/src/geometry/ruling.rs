//! The two rulings of the quadric `q = x₀² + x₁² + x₂² + x₃²`.
//!
//! A point `x` is sent to the 2×2 matrix
//! `X = [[x₀ + i·x₁, x₂ + i·x₃], [−x₂ + i·x₃, x₀ − i·x₁]]`, so that `det X = q(x)`
//! and quaternion multiplication becomes matrix multiplication. Points of the
//! quadric are the rank-one matrices `u·wᵀ`. The left ruling consists of the
//! lines `{u·wᵀ : w}` for fixed `u`, the right ruling of `{w·vᵀ : w}` for fixed `v`.
//! An element `σ(a, b)` acts as `X ↦ A·X·B′`, hence by `u ↦ A·u` on the left
//! ruling and by `v ↦ B′ᵀ·v` on the right ruling.

use std::fmt;

use once_cell::sync::Lazy;

use super::line::ProjectiveLine;
use crate::algebra::linalg::normalize;
use crate::algebra::{AlgebraicScalar as S, Matrix4, Vector};
use crate::groups::Side;

pub type M2 = [[S; 2]; 2];

/// Matrix taking `x` to `vec(X) = (X₁₁, X₂₁, X₁₂, X₂₂)`.
static TO_VEC: Lazy<Matrix4> = Lazy::new(|| {
    let i = S::i();
    let (o, z) = (S::one(), S::zero());
    Matrix4::new([
        [o.clone(), i.clone(), z.clone(), z.clone()],
        [z.clone(), z.clone(), -&o, i.clone()],
        [z.clone(), z.clone(), o.clone(), i.clone()],
        [o, -&i, z.clone(), z],
    ])
});

static FROM_VEC: Lazy<Matrix4> = Lazy::new(|| TO_VEC.inverse().expect("invertible change of basis"));

pub fn to_m2(x: &[S]) -> M2 {
    let v = TO_VEC.mul_vec(x);
    [[v[0].clone(), v[2].clone()], [v[1].clone(), v[3].clone()]]
}

pub fn from_m2(m: &M2) -> Vector {
    let v = vec![m[0][0].clone(), m[1][0].clone(), m[0][1].clone(), m[1][1].clone()];
    FROM_VEC.mul_vec(&v)
}

/// A point of P¹ labelling a line of one ruling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RulingPoint {
    pub side: Side,
    coord: [S; 2],
}

impl RulingPoint {
    pub fn new(side: Side, a: S, b: S) -> Option<Self> {
        let n = normalize(&[a, b])?;
        Some(RulingPoint {
            side,
            coord: [n[0].clone(), n[1].clone()],
        })
    }

    pub fn coord(&self) -> &[S; 2] {
        &self.coord
    }

    /// The line of the quadric labelled by this point.
    pub fn line(&self) -> ProjectiveLine {
        let [a, b] = &self.coord;
        let z = S::zero;
        let (m1, m2): (M2, M2) = match self.side {
            Side::Left => (
                [[a.clone(), z()], [b.clone(), z()]],
                [[z(), a.clone()], [z(), b.clone()]],
            ),
            Side::Right => (
                [[a.clone(), b.clone()], [z(), z()]],
                [[z(), z()], [a.clone(), b.clone()]],
            ),
        };
        ProjectiveLine::from_vectors(&from_m2(&m1), &from_m2(&m2)).expect("ruling lines are lines")
    }

    /// Image under a Möbius matrix.
    pub fn apply(&self, m: &M2) -> RulingPoint {
        let [a, b] = &self.coord;
        let x = &(&m[0][0] * a) + &(&m[0][1] * b);
        let y = &(&m[1][0] * a) + &(&m[1][1] * b);
        RulingPoint::new(self.side, x, y).expect("invertible Möbius map")
    }
}

impl fmt::Debug for RulingPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({} : {})", self.side.as_str(), self.coord[0], self.coord[1])
    }
}

fn det2(a: &[S; 2], b: &[S; 2]) -> S {
    &(&a[0] * &b[1]) - &(&a[1] * &b[0])
}

/// The ruling containing `line` and its label, or `None` if the line is not on the quadric.
pub fn ruling_point(line: &ProjectiveLine) -> Option<RulingPoint> {
    let ms: Vec<M2> = line.basis().iter().map(|b| to_m2(b)).collect();
    let cols: Vec<[S; 2]> = ms
        .iter()
        .flat_map(|m| (0..2).map(move |j| [m[0][j].clone(), m[1][j].clone()]))
        .collect();
    let rows: Vec<[S; 2]> = ms.iter().flat_map(|m| m.iter().cloned()).collect();
    let common = |vs: &[[S; 2]]| -> Option<[S; 2]> {
        let u = vs.iter().find(|v| !(v[0].is_zero() && v[1].is_zero()))?.clone();
        vs.iter().all(|v| det2(&u, v).is_zero()).then_some(u)
    };
    if let Some([a, b]) = common(&cols) {
        let p = RulingPoint::new(Side::Left, a, b)?;
        return (p.line() == *line).then_some(p);
    }
    if let Some([a, b]) = common(&rows) {
        let p = RulingPoint::new(Side::Right, a, b)?;
        return (p.line() == *line).then_some(p);
    }
    None
}

/// Möbius matrix (up to scalar) by which `g` acts on the given ruling.
pub fn mobius(g: &Matrix4, side: Side) -> M2 {
    let mx = &(&*TO_VEC * g) * &*FROM_VEC;
    // mx = B′ᵀ ⊗ A; block (k, l) is (B′ᵀ)ₖₗ·A
    let block = |k: usize, l: usize| -> M2 {
        [
            [mx.get(2 * k, 2 * l).clone(), mx.get(2 * k, 2 * l + 1).clone()],
            [mx.get(2 * k + 1, 2 * l).clone(), mx.get(2 * k + 1, 2 * l + 1).clone()],
        ]
    };
    let (k0, l0) = [(0, 0), (0, 1), (1, 0), (1, 1)]
        .into_iter()
        .find(|&(k, l)| block(k, l).iter().flatten().any(|x| !x.is_zero()))
        .expect("invertible element");
    let a = block(k0, l0);
    match side {
        Side::Left => a,
        Side::Right => {
            let (r, s) = [(0, 0), (0, 1), (1, 0), (1, 1)]
                .into_iter()
                .find(|&(r, s)| !a[r][s].is_zero())
                .expect("nonzero block");
            let inv = a[r][s].inv().expect("nonzero");
            let entry = |k: usize, l: usize| &mx.get(2 * k + r, 2 * l + s).clone() * &inv;
            [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
        }
    }
}

/// Value of the quadratic form.
pub fn quadric_value(x: &[S]) -> S {
    x.iter().fold(S::zero(), |acc, c| &acc + &(c * c))
}

fn polar(x: &[S], y: &[S]) -> S {
    x.iter().zip(y).fold(S::zero(), |acc, (a, b)| &acc + &(a * b))
}

/// Whether the line lies on the quadric.
pub fn line_in_quadric(line: &ProjectiveLine) -> bool {
    let [u, v] = line.basis();
    quadric_value(u).is_zero() && quadric_value(v).is_zero() && polar(u, v).is_zero()
}
