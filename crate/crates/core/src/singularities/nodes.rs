//! Node orbits on the singular members of the pencils.

use std::fmt;
use std::str::FromStr;

use once_cell::sync::Lazy;

use super::ade::{binary_quotient_type, BinaryGroupClass, SingularityReport};
use crate::config::parse_config;
use crate::error::SingularityError;
use crate::groups::GroupLabel;

/// A member of the pencil: the smooth one or one of the four nodal ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fiber {
    Smooth,
    Lambda(u8),
}

impl Fiber {
    pub const ALL: [Fiber; 5] = [
        Fiber::Smooth,
        Fiber::Lambda(1),
        Fiber::Lambda(2),
        Fiber::Lambda(3),
        Fiber::Lambda(4),
    ];
    pub const SINGULAR: [Fiber; 4] = [Fiber::Lambda(1), Fiber::Lambda(2), Fiber::Lambda(3), Fiber::Lambda(4)];
}

impl fmt::Display for Fiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fiber::Smooth => write!(f, "smooth"),
            Fiber::Lambda(k) => write!(f, "λ{k}"),
        }
    }
}

impl FromStr for Fiber {
    type Err = SingularityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("smooth") || t == "0" {
            return Ok(Fiber::Smooth);
        }
        let digits = t.trim_start_matches(['l', 'L', 'λ']);
        match digits.parse::<u8>() {
            Ok(k @ 1..=4) => Ok(Fiber::Lambda(k)),
            _ => Err(SingularityError::UnknownFiber(s.to_string())),
        }
    }
}

/// Node count on `X_λk` for the degree-6 or degree-8 pencil.
pub fn expected_node_count(degree: u32, fiber: u8) -> Option<usize> {
    let counts = match degree {
        6 => [12, 48, 48, 12],
        8 => [24, 72, 144, 96],
        _ => return None,
    };
    counts.get(usize::from(fiber).checked_sub(1)?).copied()
}

/// `<count><family>`: a node lies on `count` fix-lines of the family.
///
/// Families are a class label (`M`, `M'`, `N`, `R`, `M_1`, …), `M_i` for the three
/// classes `M_1, M_2, M_3`, `M_ij` for the nine `M_ij`, or `N(N')` for `N` and `N'` together.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MeetingToken {
    pub count: usize,
    pub family: String,
}

impl MeetingToken {
    /// Whether the class with this label belongs to the family.
    pub fn matches(&self, label: &str) -> bool {
        match self.family.as_str() {
            "M_i" => matches!(label, "M_1" | "M_2" | "M_3"),
            "M_ij" => {
                let b = label.as_bytes();
                b.len() == 4 && label.starts_with("M_") && b[2].is_ascii_digit() && b[3].is_ascii_digit()
            }
            "N(N')" => matches!(label, "N" | "N'"),
            f => f == label,
        }
    }
}

impl fmt::Display for MeetingToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.count, self.family)
    }
}

impl FromStr for MeetingToken {
    type Err = SingularityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SingularityError::BadAnnotation(s.to_string());
        let digits: String = s.chars().take_while(char::is_ascii_digit).collect();
        let family = &s[digits.len()..];
        let count = digits.parse().map_err(|_| bad())?;
        let valid = family.starts_with(['M', 'N', 'R'])
            && family.chars().all(|c| c.is_ascii_alphanumeric() || "_'()".contains(c));
        if count == 0 || !valid {
            return Err(bad());
        }
        Ok(MeetingToken {
            count,
            family: family.to_string(),
        })
    }
}

/// Nodes of one singular member, as seen by one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeOrbitRecord {
    pub group: GroupLabel,
    pub fiber: u8,
    pub node_count: usize,
    pub orbit_count: usize,
    pub fix_group: BinaryGroupClass,
    pub meeting_lines: Vec<MeetingToken>,
}

impl NodeOrbitRecord {
    pub fn orbit_length(&self) -> usize {
        self.node_count / self.orbit_count
    }

    /// One singularity per orbit of nodes.
    pub fn singularities(&self) -> SingularityReport {
        SingularityReport::single(self.orbit_count, binary_quotient_type(self.fix_group))
    }

    pub fn to_config_line(&self) -> String {
        let lines = if self.meeting_lines.is_empty() {
            "-".to_string()
        } else {
            self.meeting_lines
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "node {} {} count={} orbits={} fix={} lines={}",
            self.group.as_str(),
            self.fiber,
            self.node_count,
            self.orbit_count,
            self.fix_group,
            lines
        )
    }

    /// Node count agrees with the pencil and the orbit length with `|PH| / |F|`.
    pub fn check(&self) -> Result<(), SingularityError> {
        let inconsistent = |msg: String| Err(SingularityError::Inconsistent(msg));
        let expected = expected_node_count(self.group.degree(), self.fiber);
        if expected != Some(self.node_count) {
            return inconsistent(format!(
                "{} λ{}: {} nodes, expected {:?}",
                self.group, self.fiber, self.node_count, expected
            ));
        }
        let ph = self.group.group().projective().order();
        if self.orbit_length() * self.fix_group.order() != ph {
            return inconsistent(format!(
                "{} λ{}: orbit length {} times |F| = {} is not |PH| = {ph}",
                self.group,
                self.fiber,
                self.orbit_length(),
                self.fix_group.order()
            ));
        }
        Ok(())
    }
}

static BUILTIN: Lazy<Vec<NodeOrbitRecord>> = Lazy::new(|| {
    parse_config(include_str!("../../data/nodes.txt"))
        .expect("built-in node data parses")
        .nodes
});

/// The built-in node dataset: four records per subgroup.
pub fn builtin_nodes() -> &'static [NodeOrbitRecord] {
    &BUILTIN
}

pub fn find_record(data: &[NodeOrbitRecord], group: GroupLabel, fiber: u8) -> Option<&NodeOrbitRecord> {
    data.iter().find(|r| r.group == group && r.fiber == fiber)
}

/// Records from `overrides` replace built-in ones with the same group and fiber.
pub fn merge_nodes(overrides: &[NodeOrbitRecord]) -> Vec<NodeOrbitRecord> {
    let mut out: Vec<NodeOrbitRecord> = builtin_nodes()
        .iter()
        .filter(|b| find_record(overrides, b.group, b.fiber).is_none())
        .cloned()
        .collect();
    out.extend(overrides.iter().cloned());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_is_complete_and_consistent() {
        let data = builtin_nodes();
        assert_eq!(data.len(), 24);
        for g in GroupLabel::SUBGROUPS {
            for k in 1..=4 {
                let r = find_record(data, g, k).expect("record");
                r.check().unwrap();
            }
        }
    }

    #[test]
    fn orbit_length_times_fix_order() {
        // 12 nodes in 3 orbits of 4 under a group of order 48 with F = T (order 12)
        let r = find_record(builtin_nodes(), GroupLabel::TT1, 1).unwrap();
        assert_eq!(r.orbit_length(), 4);
        assert_eq!(r.singularities().to_string(), "3E6");
    }

    #[test]
    fn tokens() {
        let t: MeetingToken = "4N(N')".parse().unwrap();
        assert_eq!(t.count, 4);
        assert!(t.matches("N") && t.matches("N'") && !t.matches("M"));
        let t: MeetingToken = "3M_ij".parse().unwrap();
        assert!(t.matches("M_12") && !t.matches("M_1"));
        let t: MeetingToken = "2M'".parse().unwrap();
        assert!(t.matches("M'") && !t.matches("M"));
        assert!("M".parse::<MeetingToken>().is_err());
        assert!("0M".parse::<MeetingToken>().is_err());
        assert!("3X".parse::<MeetingToken>().is_err());
    }

    #[test]
    fn fibers() {
        assert_eq!("smooth".parse::<Fiber>().unwrap(), Fiber::Smooth);
        assert_eq!("3".parse::<Fiber>().unwrap(), Fiber::Lambda(3));
        assert_eq!("λ2".parse::<Fiber>().unwrap(), Fiber::Lambda(2));
        assert!("5".parse::<Fiber>().is_err());
    }

    #[test]
    fn merge_replaces() {
        let mut r = find_record(builtin_nodes(), GroupLabel::TxV, 2).unwrap().clone();
        r.orbit_count = 2;
        let merged = merge_nodes(std::slice::from_ref(&r));
        assert_eq!(merged.len(), 24);
        assert_eq!(find_record(&merged, GroupLabel::TxV, 2).unwrap().orbit_count, 2);
    }
}
