//! Named groups: the generator matrices of SO(4) and the normal subgroups built from them.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use once_cell::sync::{Lazy, OnceCell};

use super::{FiniteMatrixGroup, GroupError, DEFAULT_CAP};
use crate::algebra::{AlgebraicScalar as S, Matrix4, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// One of the displayed generator matrices `(x, 1)` or `(1, x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Q1Left,
    Q1Right,
    Q2Left,
    Q2Right,
    P3Left,
    P3Right,
    P4Left,
    P4Right,
}

impl Generator {
    pub fn matrix(self) -> Matrix4 {
        GENERATOR_MATRICES[self as usize].clone()
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::Q1Left => "(q1,1)",
            Generator::Q1Right => "(1,q1)",
            Generator::Q2Left => "(q2,1)",
            Generator::Q2Right => "(1,q2)",
            Generator::P3Left => "(p3,1)",
            Generator::P3Right => "(1,p3)",
            Generator::P4Left => "(p4,1)",
            Generator::P4Right => "(1,p4)",
        }
    }
}

static GENERATOR_MATRICES: Lazy<[Matrix4; 8]> = Lazy::new(|| {
    let one = S::one();
    let half = S::from_rational(Rational::new(1, 2));
    let inv_sqrt2 = S::sqrt2().inv().expect("√2 ≠ 0");
    [
        Matrix4::from_ints([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]], &one),
        Matrix4::from_ints([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]], &one),
        Matrix4::from_ints([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]], &one),
        Matrix4::from_ints([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]], &one),
        Matrix4::from_ints([[1, -1, 1, -1], [1, 1, -1, -1], [-1, 1, 1, -1], [1, 1, 1, 1]], &half),
        Matrix4::from_ints([[1, 1, -1, 1], [-1, 1, -1, -1], [1, 1, 1, -1], [-1, 1, 1, 1]], &half),
        Matrix4::from_ints([[1, -1, 0, 0], [1, 1, 0, 0], [0, 0, 1, -1], [0, 0, 1, 1]], &inv_sqrt2),
        Matrix4::from_ints([[1, 1, 0, 0], [-1, 1, 0, 0], [0, 0, 1, -1], [0, 0, 1, 1]], &inv_sqrt2),
    ]
});

/// The matrix `C = diag(1, −1, −1, −1)` swapping the two factors under conjugation.
pub fn swap_matrix() -> Matrix4 {
    Matrix4::from_ints([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]], &S::one())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupLabel {
    TxT,
    TxV,
    TT1,
    VxV,
    OxO,
    OxT,
    OO2,
}

impl GroupLabel {
    pub const ALL: [GroupLabel; 7] = [
        GroupLabel::TxT,
        GroupLabel::TxV,
        GroupLabel::TT1,
        GroupLabel::VxV,
        GroupLabel::OxO,
        GroupLabel::OxT,
        GroupLabel::OO2,
    ];

    /// The six normal subgroups, in table order.
    pub const SUBGROUPS: [GroupLabel; 6] = [
        GroupLabel::TxV,
        GroupLabel::TT1,
        GroupLabel::VxV,
        GroupLabel::OxT,
        GroupLabel::OO2,
        GroupLabel::TxT,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GroupLabel::TxT => "TxT",
            GroupLabel::TxV => "TxV",
            GroupLabel::TT1 => "TT1",
            GroupLabel::VxV => "VxV",
            GroupLabel::OxO => "OxO",
            GroupLabel::OxT => "OxT",
            GroupLabel::OO2 => "OO2",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            GroupLabel::TxT => "T×T",
            GroupLabel::TxV => "T×V",
            GroupLabel::TT1 => "(TT)′",
            GroupLabel::VxV => "V×V",
            GroupLabel::OxO => "O×O",
            GroupLabel::OxT => "O×T",
            GroupLabel::OO2 => "(OO)″",
        }
    }

    /// The ambient group `G` of the normal subgroup; `None` for `O×O`.
    pub fn parent(self) -> Option<GroupLabel> {
        match self {
            GroupLabel::TxV | GroupLabel::TT1 | GroupLabel::VxV => Some(GroupLabel::TxT),
            GroupLabel::OxT | GroupLabel::OO2 | GroupLabel::TxT => Some(GroupLabel::OxO),
            GroupLabel::OxO => None,
        }
    }

    /// Degree of the invariant pencil the subgroup acts on in the quotient tables.
    pub fn degree(self) -> u32 {
        match self {
            GroupLabel::TxV | GroupLabel::TT1 | GroupLabel::VxV => 6,
            _ => 8,
        }
    }

    pub fn generator_names(self) -> Vec<&'static str> {
        let mut names: Vec<&'static str> = self.basic_generators().iter().map(|g| g.name()).collect();
        match self {
            GroupLabel::TT1 => names.push("(p3,p3)"),
            GroupLabel::OO2 => names.push("(p4q2,p4q2)"),
            _ => {}
        }
        names
    }

    fn basic_generators(self) -> Vec<Generator> {
        use Generator::*;
        match self {
            GroupLabel::TxT => vec![Q1Left, Q1Right, P3Left, P3Right],
            GroupLabel::TxV => vec![Q1Left, Q1Right, P3Left, Q2Right],
            GroupLabel::TT1 => vec![Q1Left, Q1Right, Q2Left, Q2Right],
            GroupLabel::VxV => vec![Q1Left, Q1Right, Q2Left, Q2Right],
            GroupLabel::OxO => vec![Q2Left, Q2Right, P3Left, P3Right, P4Left, P4Right],
            GroupLabel::OxT => vec![Q1Left, Q1Right, P3Left, P3Right, P4Left],
            GroupLabel::OO2 => vec![Q1Left, Q1Right, P3Left, P3Right],
        }
    }

    pub fn generators(self) -> Vec<Matrix4> {
        use Generator::*;
        let mut gens: Vec<Matrix4> = self.basic_generators().into_iter().map(Generator::matrix).collect();
        match self {
            GroupLabel::TT1 => gens.push(&P3Left.matrix() * &P3Right.matrix()),
            GroupLabel::OO2 => {
                let left = &P4Left.matrix() * &Q2Left.matrix();
                let right = &P4Right.matrix() * &Q2Right.matrix();
                gens.push(&left * &right);
            }
            _ => {}
        }
        gens
    }

    /// The generated group; built once per process.
    pub fn group(self) -> Arc<FiniteMatrixGroup> {
        static CACHE: [OnceCell<Arc<FiniteMatrixGroup>>; 7] = [
            OnceCell::new(),
            OnceCell::new(),
            OnceCell::new(),
            OnceCell::new(),
            OnceCell::new(),
            OnceCell::new(),
            OnceCell::new(),
        ];
        CACHE[self as usize]
            .get_or_init(|| {
                let g = FiniteMatrixGroup::generate(self.as_str(), self.generators(), DEFAULT_CAP)
                    .expect("registry groups are finite");
                Arc::new(g)
            })
            .clone()
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GroupLabel {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let found = GroupLabel::ALL
            .into_iter()
            .find(|l| l.as_str().eq_ignore_ascii_case(&key) || l.display_name() == key);
        found
            .or(match key.as_str() {
                "T×T" | "TT" => Some(GroupLabel::TxT),
                "(TT)'" => Some(GroupLabel::TT1),
                "(OO)''" => Some(GroupLabel::OO2),
                _ => None,
            })
            .ok_or(GroupError::UnknownLabel(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::super::quaternion::{p3, p4, q1, q2, sigma, Quaternion};
    use super::*;

    #[test]
    fn displayed_matrices_match_quaternion_model() {
        let one = Quaternion::one();
        let cases = [
            (Generator::Q1Left, sigma(&q1(), &one)),
            (Generator::Q1Right, sigma(&one, &q1())),
            (Generator::Q2Left, sigma(&q2(), &one)),
            (Generator::Q2Right, sigma(&one, &q2())),
            (Generator::P3Left, sigma(&p3(), &one)),
            (Generator::P3Right, sigma(&one, &p3())),
            (Generator::P4Left, sigma(&p4(), &one)),
            (Generator::P4Right, sigma(&one, &p4())),
        ];
        for (g, m) in cases {
            assert_eq!(g.matrix(), m, "{}", g.name());
        }
    }

    #[test]
    fn generators_lie_in_so4() {
        for g in GENERATOR_MATRICES.iter() {
            assert!((&g.transpose() * g).is_identity());
            assert!(g.det().is_one());
        }
    }

    #[test]
    fn swap_exchanges_factors() {
        let c = swap_matrix();
        let cinv = c.inverse().unwrap();
        let m = sigma(&p3(), &p4());
        assert_eq!(&(&cinv * &m) * &c, sigma(&p4(), &p3()));
    }

    #[test]
    fn q2_squared_is_minus_identity() {
        let m = Generator::Q2Left.matrix();
        assert_eq!(&m * &m, Matrix4::scalar(S::from(-1)));
        assert_eq!(
            &Matrix4::identity() * &Generator::P3Left.matrix(),
            Generator::P3Left.matrix()
        );
        assert!(Generator::P4Left.matrix().pow(8).is_identity());
    }

    #[test]
    fn labels_parse() {
        assert_eq!("TT1".parse::<GroupLabel>().unwrap(), GroupLabel::TT1);
        assert_eq!("(OO)''".parse::<GroupLabel>().unwrap(), GroupLabel::OO2);
        assert_eq!("oxt".parse::<GroupLabel>().unwrap(), GroupLabel::OxT);
        assert!("IxI".parse::<GroupLabel>().is_err());
    }

    #[test]
    fn subgroup_orders_and_indices() {
        let expected = [
            (GroupLabel::TxV, 96, 3),
            (GroupLabel::TT1, 96, 3),
            (GroupLabel::VxV, 32, 9),
            (GroupLabel::OxT, 576, 2),
            (GroupLabel::OO2, 576, 2),
            (GroupLabel::TxT, 288, 4),
        ];
        for (label, order, index) in expected {
            let h = label.group();
            let g = label.parent().unwrap().group();
            assert_eq!(h.order(), order, "{label}");
            assert!(h.is_normal_in(&g), "{label}");
            assert_eq!(h.index_in(&g).unwrap(), index, "{label}");
        }
        assert_eq!(GroupLabel::OxO.group().order(), 1152);
    }
}
