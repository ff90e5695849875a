//! Line-based data files for curve graphs, divisor classes and node records.
//!
//! ```text
//! # comment
//! curve <name> [self=<int>]
//! edge <a> <b> [mult=<int>]
//! class <name> = [±][<int>*]<curve> [±][<int>*]<curve> …
//! node <group> <fiber> count=<int> orbits=<int> fix=<name> [lines=<token>,<token>…]
//! ```
//!
//! Curves default to self-intersection −2 and edges to multiplicity 1. Fibers are
//! `1`..`4`. A `lines=` token is a count followed by a fix-line family, e.g. `3M_i`,
//! `4N(N')`, `1M'`; `lines=-` means no fix-line passes through the nodes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::ConfigError;
use crate::groups::GroupLabel;
use crate::lattices::{CurveGraph, DivisorClass};
use crate::singularities::nodes::{MeetingToken, NodeOrbitRecord};
use crate::singularities::BinaryGroupClass;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConfigFile {
    pub graph: CurveGraph,
    /// Classes in file order.
    pub classes: Vec<(String, DivisorClass)>,
    pub nodes: Vec<NodeOrbitRecord>,
}

impl ConfigFile {
    pub fn class(&self, name: &str) -> Option<&DivisorClass> {
        self.classes.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }

    /// Serializes back into the file format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let g = &self.graph;
        for (name, s) in g.names().iter().zip(g.self_intersections()) {
            if *s == -2 {
                let _ = writeln!(out, "curve {name}");
            } else {
                let _ = writeln!(out, "curve {name} self={s}");
            }
        }
        for &(a, b, m) in g.edges() {
            let (a, b) = (&g.names()[a], &g.names()[b]);
            if m == 1 {
                let _ = writeln!(out, "edge {a} {b}");
            } else {
                let _ = writeln!(out, "edge {a} {b} mult={m}");
            }
        }
        for (name, class) in &self.classes {
            let terms: Vec<String> = class
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| {
                    let sign = if c < 0 { '-' } else { '+' };
                    let mag = c.abs();
                    if mag == 1 {
                        format!("{sign}{}", g.names()[i])
                    } else {
                        format!("{sign}{mag}*{}", g.names()[i])
                    }
                })
                .collect();
            let _ = writeln!(out, "class {name} = {}", terms.join(" "));
        }
        for n in &self.nodes {
            let _ = writeln!(out, "{}", n.to_config_line());
        }
        out
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> ConfigError {
    ConfigError::Syntax { line, msg: msg.into() }
}

fn key_value<'a>(line: usize, tok: &'a str, key: &str) -> Result<Option<&'a str>, ConfigError> {
    match tok.split_once('=') {
        Some((k, v)) if k == key => Ok(Some(v)),
        Some((k, _)) => Err(syntax(line, format!("unexpected option {k:?}"))),
        None => Ok(None),
    }
}

fn parse_int<T: FromStr>(line: usize, s: &str, what: &str) -> Result<T, ConfigError> {
    s.parse().map_err(|_| syntax(line, format!("bad {what} {s:?}")))
}

pub fn parse_config(text: &str) -> Result<ConfigFile, ConfigError> {
    let mut cfg = ConfigFile::default();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks[0] {
            "curve" => parse_curve(&mut cfg, line, &toks)?,
            "edge" => parse_edge(&mut cfg, line, &toks)?,
            "class" => parse_class(&mut cfg, line, content)?,
            "node" => cfg.nodes.push(parse_node(line, &toks)?),
            other => return Err(syntax(line, format!("unknown directive {other:?}"))),
        }
    }
    Ok(cfg)
}

fn parse_curve(cfg: &mut ConfigFile, line: usize, toks: &[&str]) -> Result<(), ConfigError> {
    let (name, rest) = match toks {
        [_, name, rest @ ..] if rest.len() <= 1 => (*name, rest),
        _ => return Err(syntax(line, "expected: curve <name> [self=<int>]")),
    };
    let mut s = -2;
    if let Some(tok) = rest.first() {
        let v = key_value(line, tok, "self")?.ok_or_else(|| syntax(line, format!("unexpected token {tok:?}")))?;
        s = parse_int(line, v, "self-intersection")?;
    }
    if cfg.graph.index_of(name).is_some() {
        return Err(ConfigError::Duplicate {
            line,
            what: "curve",
            name: name.to_string(),
        });
    }
    cfg.graph.add_curve(name, s).map_err(|e| syntax(line, e.to_string()))?;
    Ok(())
}

fn curve_index(cfg: &ConfigFile, line: usize, name: &str) -> Result<usize, ConfigError> {
    cfg.graph.index_of(name).ok_or_else(|| ConfigError::UnknownCurve {
        line,
        name: name.to_string(),
    })
}

fn parse_edge(cfg: &mut ConfigFile, line: usize, toks: &[&str]) -> Result<(), ConfigError> {
    let (a, b, rest) = match toks {
        [_, a, b, rest @ ..] if rest.len() <= 1 => (*a, *b, rest),
        _ => return Err(syntax(line, "expected: edge <a> <b> [mult=<int>]")),
    };
    let mut m = 1;
    if let Some(tok) = rest.first() {
        let v = key_value(line, tok, "mult")?.ok_or_else(|| syntax(line, format!("unexpected token {tok:?}")))?;
        m = parse_int(line, v, "multiplicity")?;
    }
    let (ia, ib) = (curve_index(cfg, line, a)?, curve_index(cfg, line, b)?);
    cfg.graph.add_edge(ia, ib, m).map_err(|e| syntax(line, e.to_string()))
}

fn parse_class(cfg: &mut ConfigFile, line: usize, content: &str) -> Result<(), ConfigError> {
    let rest = content["class".len()..].trim();
    let (name, body) = rest
        .split_once('=')
        .ok_or_else(|| syntax(line, "expected: class <name> = ±<curve> …"))?;
    let name = name.trim();
    if name.is_empty() || name.contains(char::is_whitespace) {
        return Err(syntax(line, format!("bad class name {name:?}")));
    }
    if cfg.class(name).is_some() {
        return Err(ConfigError::Duplicate {
            line,
            what: "class",
            name: name.to_string(),
        });
    }
    let mut coeffs = vec![0i64; cfg.graph.len()];
    // allow "- L2" as well as "-L2"
    let mut pending_sign: Option<i64> = None;
    let mut terms = 0;
    for tok in body.split_whitespace() {
        if tok == "+" || tok == "-" {
            if pending_sign.is_some() {
                return Err(syntax(line, "dangling sign"));
            }
            pending_sign = Some(if tok == "-" { -1 } else { 1 });
            continue;
        }
        let (mut sign, mut t) = match tok.as_bytes()[0] {
            b'+' => (1, &tok[1..]),
            b'-' => (-1, &tok[1..]),
            _ => (1, tok),
        };
        if let Some(s) = pending_sign.take() {
            if t.len() != tok.len() {
                return Err(syntax(line, "double sign"));
            }
            sign = s;
        }
        let mut mult = 1i64;
        if let Some((c, curve)) = t.split_once('*') {
            mult = parse_int(line, c, "coefficient")?;
            t = curve;
        }
        let i = curve_index(cfg, line, t)?;
        coeffs[i] += sign * mult;
        terms += 1;
    }
    if pending_sign.is_some() {
        return Err(syntax(line, "dangling sign"));
    }
    if terms == 0 {
        return Err(syntax(line, "empty class"));
    }
    cfg.classes.push((name.to_string(), DivisorClass::new(coeffs)));
    Ok(())
}

fn parse_node(line: usize, toks: &[&str]) -> Result<NodeOrbitRecord, ConfigError> {
    if toks.len() < 6 {
        return Err(syntax(
            line,
            "expected: node <group> <fiber> count=<int> orbits=<int> fix=<name> [lines=…]",
        ));
    }
    let group: GroupLabel = toks[1]
        .parse()
        .map_err(|e: crate::error::GroupError| syntax(line, e.to_string()))?;
    let fiber: u8 = parse_int(line, toks[2], "fiber")?;
    if !(1..=4).contains(&fiber) {
        return Err(syntax(line, format!("fiber {fiber} outside 1..4")));
    }
    let mut fields: BTreeMap<&str, &str> = BTreeMap::new();
    for tok in &toks[3..] {
        let (k, v) = tok
            .split_once('=')
            .ok_or_else(|| syntax(line, format!("expected key=value, got {tok:?}")))?;
        if !matches!(k, "count" | "orbits" | "fix" | "lines") {
            return Err(syntax(line, format!("unexpected option {k:?}")));
        }
        if fields.insert(k, v).is_some() {
            return Err(syntax(line, format!("repeated option {k:?}")));
        }
    }
    let get = |k: &str| {
        fields
            .get(k)
            .copied()
            .ok_or_else(|| syntax(line, format!("missing {k}=")))
    };
    let node_count: usize = parse_int(line, get("count")?, "count")?;
    let orbit_count: usize = parse_int(line, get("orbits")?, "orbits")?;
    if orbit_count == 0 || !node_count.is_multiple_of(orbit_count) {
        return Err(syntax(
            line,
            format!("{orbit_count} orbits do not split {node_count} nodes evenly"),
        ));
    }
    let fix_group: BinaryGroupClass = get("fix")?
        .parse()
        .map_err(|e: crate::error::SingularityError| syntax(line, e.to_string()))?;
    let meeting_lines = match fields.get("lines") {
        None | Some(&"-") => Vec::new(),
        Some(list) => list
            .split(',')
            .map(|t| t.parse::<MeetingToken>().map_err(|e| syntax(line, e.to_string())))
            .collect::<Result<_, _>>()?,
    };
    Ok(NodeOrbitRecord {
        group,
        fiber,
        node_count,
        orbit_count,
        fix_group,
        meeting_lines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_graph() {
        let cfg = parse_config("curve L1\ncurve L2\nedge L1 L2").unwrap();
        assert_eq!(cfg.graph.to_lattice().gram(), &[vec![-2, 1], vec![1, -2]]);
    }

    #[test]
    fn class_coefficients() {
        let cfg = parse_config("curve L1\ncurve L2\nedge L1 L2\nclass k1 = +L1 -L2").unwrap();
        assert_eq!(cfg.class("k1").unwrap().coeffs, vec![1, -1]);
        let cfg = parse_config("curve A\ncurve B\nclass w = 3*A - 2*B + A").unwrap();
        assert_eq!(cfg.class("w").unwrap().coeffs, vec![4, -2]);
    }

    #[test]
    fn unknown_curve() {
        let err = parse_config("curve L1\ncurve L2\nedge L1 L9").unwrap_err();
        assert_eq!(
            err,
            ConfigError::UnknownCurve {
                line: 3,
                name: "L9".into()
            }
        );
        assert_eq!(err.to_string(), "line 3: unknown curve L9");
        let err = parse_config("curve L1\n\nclass k = +L1 +X").unwrap_err();
        assert_eq!(
            err,
            ConfigError::UnknownCurve {
                line: 3,
                name: "X".into()
            }
        );
    }

    #[test]
    fn syntax_errors_have_line_numbers() {
        let err = parse_config("# header\ncurve\n").unwrap_err();
        assert!(matches!(err, ConfigError::Syntax { line: 2, .. }));
        let err = parse_config("curve A self=x").unwrap_err();
        assert!(matches!(err, ConfigError::Syntax { line: 1, .. }));
        let err = parse_config("curve A\ncurve A").unwrap_err();
        assert!(matches!(err, ConfigError::Duplicate { line: 2, .. }));
        let err = parse_config("bogus").unwrap_err();
        assert!(matches!(err, ConfigError::Syntax { line: 1, .. }));
    }

    #[test]
    fn node_lines() {
        let cfg = parse_config("node TT1 1 count=12 orbits=3 fix=T lines=3M_i,4N").unwrap();
        let n = &cfg.nodes[0];
        assert_eq!(n.group, GroupLabel::TT1);
        assert_eq!(n.fix_group, BinaryGroupClass::Tetrahedral);
        assert_eq!(n.meeting_lines.len(), 2);
        assert!(parse_config("node TT1 5 count=12 orbits=3 fix=T").is_err());
        assert!(parse_config("node TT1 1 count=12 orbits=5 fix=T").is_err());
    }

    #[test]
    fn round_trip() {
        let text = "curve A\ncurve B self=-1\ncurve C\nedge A B mult=2\nedge B C\nclass v = +A -2*C\n\
                    node OO2 4 count=96 orbits=2 fix=D3 lines=1N(N'),3M\n";
        let cfg = parse_config(text).unwrap();
        let again = parse_config(&cfg.to_text()).unwrap();
        assert_eq!(cfg, again);
    }
}
