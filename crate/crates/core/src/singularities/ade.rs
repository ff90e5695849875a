//! A-D-E types, binary polyhedral groups and singularity reports.

use std::fmt;
use std::str::FromStr;

use crate::error::SingularityError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdeKind {
    A,
    D,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdeType {
    pub kind: AdeKind,
    pub index: usize,
}

impl AdeType {
    pub fn new(kind: AdeKind, index: usize) -> Option<Self> {
        let ok = match kind {
            AdeKind::A => index >= 1,
            AdeKind::D => index >= 4,
            AdeKind::E => (6..=8).contains(&index),
        };
        ok.then_some(AdeType { kind, index })
    }

    pub fn a(n: usize) -> Self {
        Self::new(AdeKind::A, n).expect("A_n needs n ≥ 1")
    }

    pub fn d(n: usize) -> Self {
        Self::new(AdeKind::D, n).expect("D_n needs n ≥ 4")
    }

    pub fn e(n: usize) -> Self {
        Self::new(AdeKind::E, n).expect("E_n needs n ∈ {6,7,8}")
    }

    pub fn rank(&self) -> usize {
        self.index
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            AdeKind::A => 'A',
            AdeKind::D => 'D',
            AdeKind::E => 'E',
        };
        write!(f, "{k}{}", self.index)
    }
}

impl FromStr for AdeType {
    type Err = SingularityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().replace('_', "");
        let bad = || SingularityError::BadAnnotation(s.clone());
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('A') => AdeKind::A,
            Some('D') => AdeKind::D,
            Some('E') => AdeKind::E,
            _ => return Err(bad()),
        };
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        AdeType::new(kind, n).ok_or_else(bad)
    }
}

/// Finite subgroups of SO(3), named as in the node tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinaryGroupClass {
    Trivial,
    Cyclic(usize),
    /// Dihedral of order `2n`; `Dihedral(2)` is `Z₂×Z₂`.
    Dihedral(usize),
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl BinaryGroupClass {
    /// Order of the group in SO(3).
    pub fn order(&self) -> usize {
        match *self {
            BinaryGroupClass::Trivial => 1,
            BinaryGroupClass::Cyclic(n) => n,
            BinaryGroupClass::Dihedral(n) => 2 * n,
            BinaryGroupClass::Tetrahedral => 12,
            BinaryGroupClass::Octahedral => 24,
            BinaryGroupClass::Icosahedral => 60,
        }
    }
}

impl fmt::Display for BinaryGroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BinaryGroupClass::Trivial => write!(f, "id"),
            BinaryGroupClass::Cyclic(n) => write!(f, "Z{n}"),
            BinaryGroupClass::Dihedral(2) => write!(f, "Z2xZ2"),
            BinaryGroupClass::Dihedral(n) => write!(f, "D{n}"),
            BinaryGroupClass::Tetrahedral => write!(f, "T"),
            BinaryGroupClass::Octahedral => write!(f, "O"),
            BinaryGroupClass::Icosahedral => write!(f, "I"),
        }
    }
}

impl FromStr for BinaryGroupClass {
    type Err = SingularityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s.chars().filter(|c| !c.is_whitespace() && *c != '_').collect();
        let bad = || SingularityError::UnknownFixGroup(s.to_string());
        let num = |t: &str| t.parse::<usize>().ok().filter(|&n| n >= 1);
        Ok(match key.as_str() {
            "id" | "1" | "Z1" => BinaryGroupClass::Trivial,
            "Z2xZ2" | "Z2×Z2" | "V" | "D2" => BinaryGroupClass::Dihedral(2),
            "T" => BinaryGroupClass::Tetrahedral,
            "O" => BinaryGroupClass::Octahedral,
            "I" => BinaryGroupClass::Icosahedral,
            k if k.starts_with('Z') => BinaryGroupClass::Cyclic(num(&k[1..]).ok_or_else(bad)?),
            k if k.starts_with('D') => BinaryGroupClass::Dihedral(num(&k[1..]).filter(|&n| n >= 2).ok_or_else(bad)?),
            _ => return Err(bad()),
        })
    }
}

/// Singularity of `C²/F̃` at the image of a node with fix-group `F`.
///
/// A node with trivial fix-group stays an `A₁`; otherwise the binary group
/// of order `2|F|` gives `A_{2n−1}`, `D_{n+2}`, `E₆`, `E₇`, `E₈`.
pub fn binary_quotient_type(f: BinaryGroupClass) -> AdeType {
    match f {
        BinaryGroupClass::Trivial => AdeType::a(1),
        BinaryGroupClass::Cyclic(n) => AdeType::a(2 * n - 1),
        BinaryGroupClass::Dihedral(n) => AdeType::d(n + 2),
        BinaryGroupClass::Tetrahedral => AdeType::e(6),
        BinaryGroupClass::Octahedral => AdeType::e(7),
        BinaryGroupClass::Icosahedral => AdeType::e(8),
    }
}

/// Singularity at a quadric point whose fixer is `Z_a × Z_b`, with `Z_a` acting
/// transversally to the base-locus line.
pub fn quadric_point_singularity(transversal: usize, _line_fixing: usize) -> Option<AdeType> {
    (transversal >= 2).then(|| AdeType::a(transversal - 1))
}

/// Each orbit of points on a line with cyclic fix-group of order `o` gives an `A_{o−1}`.
pub fn off_quadric_singularities(o: usize, orbits: usize) -> SingularityReport {
    let mut r = SingularityReport::default();
    if o >= 2 {
        r.add(orbits, AdeType::a(o - 1));
    }
    r
}

/// A multiset of A-D-E singularities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SingularityReport {
    entries: Vec<(usize, AdeType)>,
}

impl SingularityReport {
    pub fn single(mult: usize, t: AdeType) -> Self {
        let mut r = Self::default();
        r.add(mult, t);
        r
    }

    pub fn add(&mut self, mult: usize, t: AdeType) {
        if mult == 0 {
            return;
        }
        match self.entries.iter_mut().find(|(_, u)| *u == t) {
            Some(e) => e.0 += mult,
            None => {
                self.entries.push((mult, t));
                self.entries.sort_by_key(|a| a.1);
            }
        }
    }

    pub fn extend(&mut self, other: &SingularityReport) {
        for &(m, t) in &other.entries {
            self.add(m, t);
        }
    }

    pub fn entries(&self) -> &[(usize, AdeType)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total number of exceptional curves.
    pub fn rank(&self) -> usize {
        self.entries.iter().map(|(m, t)| m * t.rank()).sum()
    }
}

impl fmt::Display for SingularityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(m, t)| if *m == 1 { t.to_string() } else { format!("{m}{t}") })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for SingularityReport {
    type Err = SingularityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut r = SingularityReport::default();
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(r);
        }
        for part in s.split('+') {
            let part = part.trim();
            let digits: String = part.chars().take_while(|c| c.is_ascii_digit()).collect();
            let mult = if digits.is_empty() {
                1
            } else {
                digits.parse().expect("digits")
            };
            r.add(mult, part[digits.len()..].parse()?);
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_types() {
        let cases = [
            ("T", "E6"),
            ("Z4", "A7"),
            ("D3", "D5"),
            ("id", "A1"),
            ("Z2xZ2", "D4"),
            ("O", "E7"),
            ("I", "E8"),
            ("Z_3", "A5"),
        ];
        for (f, t) in cases {
            let f: BinaryGroupClass = f.parse().unwrap();
            assert_eq!(binary_quotient_type(f).to_string(), t);
        }
        assert!("Q8".parse::<BinaryGroupClass>().is_err());
    }

    #[test]
    fn binary_order_matches_rank_for_cyclic() {
        // |Z̃_n| = 2n and C²/Z_{2n} is A_{2n−1}
        for n in 1..8 {
            let t = binary_quotient_type(BinaryGroupClass::Cyclic(n));
            assert_eq!(t.rank() + 1, 2 * BinaryGroupClass::Cyclic(n).order());
        }
    }

    #[test]
    fn quadric_points() {
        assert_eq!(quadric_point_singularity(3, 2), Some(AdeType::a(2)));
        assert_eq!(quadric_point_singularity(4, 3), Some(AdeType::a(3)));
        assert_eq!(quadric_point_singularity(2, 3), Some(AdeType::a(1)));
    }

    #[test]
    fn off_quadric() {
        assert_eq!(off_quadric_singularities(3, 6).to_string(), "6A2");
        assert_eq!(off_quadric_singularities(4, 2).to_string(), "2A3");
        assert!(off_quadric_singularities(2, 0).is_empty());
    }

    #[test]
    fn report_round_trip() {
        let r: SingularityReport = "2E7".parse().unwrap();
        assert_eq!(r.rank(), 14);
        let r: SingularityReport = "A_1+2A_3".parse().unwrap();
        assert_eq!(r.to_string(), "A1+2A3");
        assert!("2F4".parse::<SingularityReport>().is_err());
        assert!(AdeType::new(AdeKind::D, 3).is_none());
    }
}
