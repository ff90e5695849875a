//! Recomputes every expected cell and diffs it against the printed value.

use std::collections::BTreeMap;

use super::expected::{expected_table, expected_tables, TABLE_IDS};
use super::factor::{format_factored, parse_factored};
use super::report::Table;
use crate::error::Error;
use crate::geometry::orbits_on_ruling;
use crate::groups::{GroupLabel, Side};
use crate::lattices::{
    ade_sum, cover_self_intersection, discriminant, find_entry, is_p_divisible, nikulin_count_check, CatalogEntry,
    DIVISIBLE_CLASSES,
};
use crate::singularities::{
    analyze, expected_node_count, find_record, nu_totals, quadric_point_singularity, Fiber, GroupAnalysis,
    NodeOrbitRecord, SingularityReport,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    Table(String),
}

impl Scope {
    pub fn parse(s: Option<&str>) -> Scope {
        match s {
            None | Some("all") => Scope::All,
            Some(id) => Scope::Table(id.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellResult {
    pub table: &'static str,
    pub key: String,
    pub expected: String,
    pub computed: String,
    pub citation: String,
    pub erratum: Option<String>,
}

impl CellResult {
    pub fn passed(&self) -> bool {
        normalize(&self.expected) == normalize(&self.computed)
    }
}

/// A printed "-" in a numeric column means zero.
fn normalize(s: &str) -> String {
    let t = s.trim();
    if t == "-" {
        "0".into()
    } else {
        t.to_string()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub cells: Vec<CellResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> usize {
        self.cells.iter().filter(|c| c.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.cells.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CellResult> {
        self.cells.iter().filter(|c| !c.passed())
    }

    pub fn cell(&self, table: &str, key: &str) -> Option<&CellResult> {
        self.cells.iter().find(|c| c.table == table && c.key == key)
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(["table", "key", "expected", "computed", "status", "source", "note"]);
        for c in &self.cells {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            t.push([
                c.table,
                &c.key,
                &c.expected,
                &c.computed,
                status,
                &c.citation,
                c.erratum.as_deref().unwrap_or(""),
            ]);
        }
        t
    }

    /// Pass and fail counts per table, in table order.
    pub fn summary(&self) -> Table {
        let mut t = Table::new(["table", "cells", "pass", "fail"]);
        for id in TABLE_IDS {
            let cells: Vec<&CellResult> = self.cells.iter().filter(|c| c.table == id).collect();
            if cells.is_empty() {
                continue;
            }
            let pass = cells.iter().filter(|c| c.passed()).count();
            t.push([
                id.to_string(),
                cells.len().to_string(),
                pass.to_string(),
                (cells.len() - pass).to_string(),
            ]);
        }
        t
    }
}

/// Recomputes the selected tables; `node_data` supplies the node orbits of the singular members.
pub fn run_verification(scope: &Scope, node_data: &[NodeOrbitRecord]) -> Result<VerificationReport, Error> {
    let ids: Vec<&'static str> = match scope {
        Scope::All => TABLE_IDS.to_vec(),
        Scope::Table(id) => vec![
            expected_table(id)
                .ok_or_else(|| Error::UnknownTable(id.clone()))?
                .table_id,
        ],
    };
    let mut report = VerificationReport::default();
    for id in ids {
        let expected = expected_tables()
            .iter()
            .find(|t| t.table_id == id)
            .expect("listed table");
        let computed = compute_table(id, node_data)?;
        for cell in &expected.cells {
            report.cells.push(CellResult {
                table: id,
                key: cell.key.clone(),
                expected: cell.expected.clone(),
                computed: computed.get(&cell.key).cloned().unwrap_or_else(|| "missing".into()),
                citation: cell.citation.clone(),
                erratum: cell.erratum.clone(),
            });
        }
    }
    Ok(report)
}

type Cells = BTreeMap<String, String>;

/// All values of one table as computed, keyed like the expected dataset.
pub fn compute_table(id: &str, node_data: &[NodeOrbitRecord]) -> Result<Cells, Error> {
    let mut c = Cells::new();
    match id {
        "sec3.subgroups" => subgroups(&mut c)?,
        "sec4.rulings" => rulings(&mut c),
        "sec4.meeting" => each_group(&mut c, meeting),
        "sec4.fixlines" => each_group(&mut c, fixlines),
        "sec5.quadric" => each_group(&mut c, quadric),
        "sec5.offquadric" => each_group(&mut c, offquadric),
        "sec5.sing" => sing(&mut c, node_data),
        "sec6.nu" => nu(&mut c, node_data),
        "sec7.cover" => cover(&mut c, node_data),
        "sec7.components" => each_group(&mut c, components),
        "sec8.discs" => discs(&mut c),
        "sec8.classes" => classes(&mut c),
        "sec9.cover" => second_cover(&mut c, node_data),
        other => return Err(Error::UnknownTable(other.to_string())),
    }
    Ok(c)
}

fn put(c: &mut Cells, key: impl Into<String>, value: impl ToString) {
    c.insert(key.into(), value.to_string());
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn subgroups(c: &mut Cells) -> Result<(), Error> {
    for g in GroupLabel::SUBGROUPS {
        let parent = g.parent().expect("subgroups have a parent");
        let (h, big) = (g.group(), parent.group());
        put(c, format!("{g}.order"), h.order());
        put(c, format!("{g}.parent"), parent.as_str());
        put(c, format!("{g}.index"), h.index_in(&big)?);
        put(
            c,
            format!("{g}.normal"),
            if h.is_normal_in(&big) { "yes" } else { "no" },
        );
    }
    Ok(())
}

fn rulings(c: &mut Cells) {
    for g in GroupLabel::SUBGROUPS {
        let pg = g.group().projective();
        for side in [Side::Left, Side::Right] {
            let table = orbits_on_ruling(&pg, side);
            for k in [2, 3, 4] {
                let v = table.get(&k).map(|v| join(v)).unwrap_or_else(|| "-".into());
                put(c, format!("{g}.{}.{k}", side.as_str()), v);
            }
        }
    }
}

/// Runs `f` on the analysis of each subgroup; a failed analysis leaves its cells missing.
fn each_group(c: &mut Cells, f: fn(&mut Cells, &GroupAnalysis)) {
    for g in GroupLabel::SUBGROUPS {
        match analyze(g) {
            Ok(a) => f(c, a),
            Err(e) => put(c, format!("{g}.error"), e),
        }
    }
}

fn meeting(c: &mut Cells, a: &GroupAnalysis) {
    let g = a.label;
    let mut per_pair: Vec<usize> = a.base_point_orbits.iter().map(Vec::len).collect();
    per_pair.dedup();
    put(c, format!("{g}.orbits_per_pair"), join(&per_pair));
    let mut lengths: Vec<usize> = a.base_point_orbits.iter().flatten().copied().collect();
    lengths.sort_unstable();
    put(c, format!("{g}.lengths"), join(&lengths));
}

fn fixlines(c: &mut Cells, a: &GroupAnalysis) {
    let g = a.label;
    put(c, format!("{g}.classes"), a.classes.len());
    for l in &a.classes {
        put(c, format!("{g}.{}.F", l.label), format!("Z{}", l.fix_order()));
        put(c, format!("{g}.{}.length", l.label), l.class.length());
        put(c, format!("{g}.{}.ratio", l.label), l.class.ratio());
    }
}

fn quadric(c: &mut Cells, a: &GroupAnalysis) {
    let g = a.label;
    put(c, format!("{g}.rows"), a.quadric_rows.len());
    for r in &a.quadric_rows {
        let key = format!("{g}.Z{}xZ{}", r.left_fix, r.right_fix);
        put(c, format!("{key}.length"), r.length);
        put(c, format!("{key}.number"), r.number);
        let mut s = SingularityReport::default();
        if let Some(t) = quadric_point_singularity(r.transversal_order(), 0) {
            s.add(r.number, t);
        }
        put(c, format!("{key}.sing"), s);
    }
}

fn offquadric(c: &mut Cells, a: &GroupAnalysis) {
    let g = a.label;
    let mut points: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for l in &a.classes {
        points.entry(l.fix_order()).or_default().push(l.points_off_quadric);
        put(c, format!("{g}.{}.length", l.label), l.class.ratio());
        match l.orbit_count().and_then(|n| Ok((n, l.singularities()?))) {
            Ok((n, s)) => {
                put(c, format!("{g}.{}.number", l.label), n);
                put(c, format!("{g}.{}.sing", l.label), s);
            }
            Err(e) => put(c, format!("{g}.{}.number", l.label), format!("error: {e}")),
        }
    }
    for (o, mut v) in points {
        v.sort_unstable();
        v.dedup();
        put(c, format!("{g}.o{o}.points"), join(&v));
    }
}

fn fiber_key(f: Fiber) -> String {
    match f {
        Fiber::Smooth => "smooth".into(),
        Fiber::Lambda(k) => format!("l{k}"),
    }
}

fn sing(c: &mut Cells, node_data: &[NodeOrbitRecord]) {
    for g in GroupLabel::SUBGROUPS {
        for k in 1..=4u8 {
            let key = format!("{g}.l{k}");
            if let Some(n) = expected_node_count(g.degree(), k) {
                put(c, format!("{key}.ns"), n);
            }
            if let Some(r) = find_record(node_data, g, k) {
                put(c, format!("{key}.orbits"), r.orbit_count);
                put(c, format!("{key}.F"), r.fix_group);
                put(c, format!("{key}.sing"), r.singularities());
            }
        }
    }
}

fn nu(c: &mut Cells, node_data: &[NodeOrbitRecord]) {
    for g in GroupLabel::SUBGROUPS {
        for f in Fiber::ALL {
            let key = format!("{g}.{}", fiber_key(f));
            match nu_totals(g, g.degree(), f, node_data) {
                Ok(n) => {
                    put(c, format!("{key}.nu1"), n.nu1);
                    put(c, format!("{key}.nu2"), n.nu2);
                    put(c, format!("{key}.nu3"), n.nu3);
                    put(c, format!("{key}.nu4"), n.nu4);
                    put(c, format!("{key}.nu"), n.nu());
                    // The curves span a hyperbolic lattice of rank ν + 1 after adding a polarization.
                    put(c, format!("{key}.d_sign"), if n.nu() % 2 == 1 { "+" } else { "-" });
                }
                Err(e) => put(c, format!("{key}.nu"), format!("error: {e}")),
            }
        }
    }
}

fn curve_count(g: GroupLabel, f: Fiber, node_data: &[NodeOrbitRecord]) -> String {
    match nu_totals(g, g.degree(), f, node_data) {
        Ok(n) => n.nu().to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// Covering surface name and the subgroup whose quotient it covers.
const COVERS: [(&str, GroupLabel); 4] = [
    ("T_L", GroupLabel::TxV),
    ("T_M", GroupLabel::TT1),
    ("O_L", GroupLabel::OxT),
    ("O_M", GroupLabel::OO2),
];

const SECOND_COVERS: [(&str, GroupLabel); 2] = [("T_Lbar'", GroupLabel::VxV), ("O_Lbar'", GroupLabel::TxT)];

fn cover_counts(c: &mut Cells, covers: &[(&str, GroupLabel)], node_data: &[NodeOrbitRecord]) {
    for &(name, g) in covers {
        put(c, format!("{name}.curves"), curve_count(g, Fiber::Smooth, node_data));
        for k in 1..=4u8 {
            put(
                c,
                format!("{name}({},{k}).curves", g.degree()),
                curve_count(g, Fiber::Lambda(k), node_data),
            );
        }
    }
}

fn cover(c: &mut Cells, node_data: &[NodeOrbitRecord]) {
    let show = |r: Result<i64, _>| {
        r.map(|v: i64| v.to_string())
            .unwrap_or_else(|e: crate::error::LatticeError| e.to_string())
    };
    put(c, "ramified(-3,3)", show(cover_self_intersection(-3, true, 3)));
    put(c, "unramified(-1,3)", show(cover_self_intersection(-1, false, 3)));
    put(c, "ramified(-2,2)", show(cover_self_intersection(-2, true, 2)));
    cover_counts(c, &COVERS, node_data);
}

fn second_cover(c: &mut Cells, node_data: &[NodeOrbitRecord]) {
    cover_counts(c, &SECOND_COVERS, node_data);
}

/// Component `X` of a covering surface and the fix-line classes whose points give its curves.
fn component_classes(g: GroupLabel) -> Vec<(&'static str, &'static str, Vec<&'static str>)> {
    match g {
        GroupLabel::TxV => vec![("T_L", "M", vec!["M_1", "M_2", "M_3"])],
        GroupLabel::TT1 => vec![("T_M", "M", vec!["M_1", "M_2", "M_3"]), ("T_M", "N", vec!["N"])],
        GroupLabel::OxT => vec![
            ("O_L", "M", vec!["M'"]),
            ("O_L", "N", vec!["N"]),
            ("O_L", "R", vec!["M"]),
        ],
        GroupLabel::OO2 => vec![
            ("O_M", "M", vec!["M"]),
            ("O_M", "N", vec!["N", "N'"]),
            ("O_M", "R", vec!["R"]),
        ],
        GroupLabel::VxV => vec![(
            "T_Lbar'",
            "M",
            vec!["M_11", "M_12", "M_13", "M_21", "M_22", "M_23", "M_31", "M_32", "M_33"],
        )],
        GroupLabel::TxT => vec![("O_Lbar'", "M", vec!["M"]), ("O_Lbar'", "N", vec!["N", "N'"])],
        GroupLabel::OxO => Vec::new(),
    }
}

fn components(c: &mut Cells, a: &GroupAnalysis) {
    for (surface, comp, labels) in component_classes(a.label) {
        let key = format!("{surface}.d({comp})");
        let mut s = SingularityReport::default();
        for l in labels {
            match a.class(l).map(|x| x.singularities()) {
                Some(Ok(r)) => s.extend(&r),
                _ => {
                    put(c, &key, format!("error: class {l}"));
                    continue;
                }
            }
        }
        let v = discriminant(&ade_sum(s.entries()))
            .map(format_factored)
            .unwrap_or_else(|e| e.to_string());
        c.entry(key).or_insert(v);
    }
}

/// Index-formula cases: surface, `d(W)` of the curve lattice, and the catalog classes glued on.
pub const DISC_CASES: [(&str, &str, &[(&str, &str)]); 16] = [
    ("T_L", "2^5*3^3*5", &[("T_L", "Lbar'"), ("T_L", "h1"), ("T_L", "h2")]),
    ("O_L", "2^5*3^3*7", &[("O_L", "Lbar'"), ("O_L", "k1")]),
    (
        "T_L(6,1)",
        "-2^4*3^3*5",
        &[("T_L", "Lbar'"), ("T_L", "h1"), ("T_L", "h2")],
    ),
    (
        "T_L(6,2)",
        "-2^6*3^3*5",
        &[("T_L", "Lbar'"), ("T_L", "h1"), ("T_L", "h2")],
    ),
    (
        "T_L(6,3)",
        "-2^6*3^3*5",
        &[("T_L", "Lbar'"), ("T_L", "h1"), ("T_L", "h2")],
    ),
    (
        "T_L(6,4)",
        "-2^4*3^3*5",
        &[("T_L", "Lbar'"), ("T_L", "h1"), ("T_L", "h2")],
    ),
    ("T_M(6,1)", "-3^3*5", &[("T_M(6,1)", "Lbar")]),
    (
        "T_M(6,2)",
        "-2^6*3^3*5",
        &[("T_M(6,1)", "Lbar"), ("T_M(6,2)", "u1"), ("T_M(6,2)", "u2")],
    ),
    ("O_L(8,1)", "-2^4*3^2*7", &[("O_L", "Lbar'"), ("O_L", "k1")]),
    ("O_L(8,2)", "-2^4*3^3*7", &[("O_L", "Lbar'"), ("O_L", "k1")]),
    ("O_L(8,3)", "-2^5*3^3*7", &[("O_L", "Lbar'"), ("O_L", "k1")]),
    (
        "O_L(8,4)",
        "-2^6*3^2*7",
        &[("O_L", "Lbar'"), ("O_L", "k1"), ("O_L(8,4)", "v84")],
    ),
    ("O_M(8,1)", "-2^4*7", &[("O_M(8,4)", "Lbar")]),
    ("O_M(8,4)", "-2^8*7", &[("O_M(8,4)", "W")]),
    (
        "O_Lbar'(8,1)",
        "-3^4*7",
        &[("O_Lbar'(8,1)", "k1'"), ("O_Lbar'(8,1)", "k1''")],
    ),
    (
        "O_Lbar'(8,4)",
        "-2^4*3^4*7",
        &[
            ("O_Lbar'(8,1)", "k1'"),
            ("O_Lbar'(8,1)", "k1''"),
            ("O_Lbar'(8,4)", "kappa"),
        ],
    ),
];

/// Divisibility degrees of the glue classes of one case, each checked on its support lattice.
pub fn glue_degrees(classes: &[(&str, &str)]) -> Result<Vec<i64>, String> {
    classes
        .iter()
        .map(|&(s, k)| {
            let e = find_entry(s, k).ok_or_else(|| format!("no class {s}:{k}"))?;
            match is_p_divisible(&e.lattice(), &e.divisor(), e.p) {
                Ok(true) => Ok(e.p),
                Ok(false) => Err(format!("{s}:{k} not {}-divisible", e.p)),
                Err(err) => Err(err.to_string()),
            }
        })
        .collect()
}

fn discs(c: &mut Cells) {
    for (case, dw, classes) in DISC_CASES {
        let ps = match glue_degrees(classes) {
            Ok(ps) => ps,
            Err(e) => {
                put(c, format!("{case}.glue"), format!("error: {e}"));
                continue;
            }
        };
        put(
            c,
            format!("{case}.glue"),
            ps.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
        );
        let d = parse_factored(dw).expect("well-formed constant");
        let index: i128 = ps.iter().map(|&p| i128::from(p)).product();
        let sq = index * index;
        let v = if d % sq == 0 {
            format_factored(d / sq)
        } else {
            format!("{dw} not divisible by {sq}")
        };
        put(c, format!("{case}.dW'"), v);
    }
}

fn class_cells(c: &mut Cells, e: &CatalogEntry) {
    let key = e.key();
    let (l, v) = (e.lattice(), e.divisor());
    put(c, format!("{key}.p"), e.p);
    put(c, format!("{key}.curves"), v.support().len());
    let yes = |r: Result<bool, _>| match r {
        Ok(true) => "yes".to_string(),
        Ok(false) => "no".to_string(),
        Err(e) => format!("error: {e}"),
    };
    put(c, format!("{key}.divisible"), yes(is_p_divisible(&l, &v, e.p)));
    let nik = match nikulin_count_check(&l, &v, e.p) {
        Ok(true) => "pass".to_string(),
        Ok(false) => "fail".to_string(),
        Err(e) => format!("error: {e}"),
    };
    put(c, format!("{key}.nikulin"), nik);
}

fn classes(c: &mut Cells) {
    for e in DIVISIBLE_CLASSES {
        class_cells(c, e);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::singularities::builtin_nodes;

    #[test]
    fn subgroups_all_pass() {
        let r = run_verification(&Scope::Table("sec3.subgroups".into()), builtin_nodes()).unwrap();
        assert_eq!(r.cells.len(), 24);
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn unknown_table() {
        let err = run_verification(&Scope::Table("sec99.none".into()), builtin_nodes()).unwrap_err();
        assert!(err.to_string().contains("unknown table"));
    }

    #[test]
    fn dash_means_zero() {
        assert_eq!(normalize("-"), "0");
        assert_eq!(normalize(" 3 "), "3");
    }

    #[test]
    fn discs_arithmetic() {
        let mut c = Cells::new();
        discs(&mut c);
        assert_eq!(c["T_L.dW'"], "2*3*5");
        assert_eq!(c["O_M(8,4).glue"], "4");
        assert_eq!(c["O_Lbar'(8,4).dW'"], "-2^2*7");
    }
}
