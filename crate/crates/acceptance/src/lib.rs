//! The acceptance criteria, each recomputed from scratch and judged exactly.

use bipoly_k3::config::parse_config;
use bipoly_k3::geometry::{fix_lines, meeting_point_orbits, orbit, ruling_orbits, stabilizer, ProjectiveLine};
use bipoly_k3::groups::{GroupLabel, Side};
use bipoly_k3::lattices::{
    ade_lattice, ade_sum, adjoin_class, cover_self_intersection, discriminant, discriminant_group, find_entry,
    in_glue_span, index_formula_check, is_p_divisible, nikulin_count_check, smith_normal_form, DivisorClass,
};
use bipoly_k3::singularities::{builtin_nodes, AdeType};
use bipoly_k3::tables::verify::DISC_CASES;
use bipoly_k3::tables::{parse_factored, run_verification, CellResult, Scope, VerificationReport};

#[path = "../../core/tests/common/mod.rs"]
pub mod oracles;
use oracles as common;

/// Tolerance for every criterion: values are integers or exact field elements.
pub const TOLERANCE: &str = "exact";

pub struct Outcome {
    pub pass: bool,
    pub detail: String,
    /// Mismatched cells and recorded side results.
    pub notes: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
            notes: Vec::new(),
        }
    }
}

fn verify(table: &str) -> VerificationReport {
    run_verification(&Scope::Table(table.into()), builtin_nodes()).expect("known table")
}

/// Cells selected by `keep`, with a line per mismatch.
fn judge(reports: &[VerificationReport], keep: impl Fn(&CellResult) -> bool) -> Outcome {
    let cells: Vec<&CellResult> = reports.iter().flat_map(|r| &r.cells).filter(|c| keep(c)).collect();
    let failed: Vec<&&CellResult> = cells.iter().filter(|c| !c.passed()).collect();
    let mut o = Outcome::new(
        failed.is_empty(),
        format!("{}/{} cells match", cells.len() - failed.len(), cells.len()),
    );
    for c in failed {
        let mut line = format!("{} {}: printed {}, computed {}", c.table, c.key, c.expected, c.computed);
        if let Some(e) = &c.erratum {
            line.push_str(&format!(" ({e})"));
        }
        o.notes.push(line);
    }
    o
}

fn group_table() -> Outcome {
    let mut ok = true;
    let mut orders = Vec::new();
    let mut indices = Vec::new();
    for g in GroupLabel::SUBGROUPS {
        let parent = g.parent().unwrap().group();
        let h = g.group();
        orders.push(h.order());
        indices.push(h.index_in(&parent).unwrap());
        ok &= h.is_normal_in(&parent);
        // normality again by conjugating every element with every generator of the parent
        ok &= parent.generators().iter().all(|x| {
            let xi = x.inverse().unwrap();
            h.elements().iter().all(|e| h.contains(&(&(x * e) * &xi)))
        });
    }
    ok &= orders == [96, 96, 32, 576, 576, 288] && indices == [3, 3, 9, 2, 2, 4];
    let mut o = Outcome::new(ok, format!("orders {orders:?}, indices {indices:?}, all normal"));
    let table = judge(&[verify("sec3.subgroups")], |_| true);
    o.pass &= table.pass;
    o.notes.extend(table.notes);
    o
}

fn meeting_points() -> Outcome {
    let mut o = judge(&[verify("sec4.meeting")], |_| true);
    // Lines of the two rulings fixed by order-3 one-sided elements of T×T, under (TT)′.
    let txt = GroupLabel::TxT.group().projective();
    let tt1 = GroupLabel::TT1.group().projective();
    let fixed3 = |side: Side| -> Vec<ProjectiveLine> {
        ruling_orbits(&txt, side)
            .into_iter()
            .filter(|r| r.fixing_order == 3)
            .flat_map(|r| r.lines)
            .collect()
    };
    let (left, right) = (fixed3(Side::Left), fixed3(Side::Right));
    let lengths = meeting_point_orbits(&tt1, &left, &right);
    o.notes.push(format!(
        "(TT)′ on the meeting points of the {}+{} order-3 ruling fix-lines of T×T: orbit lengths {:?} (|PH| = {})",
        left.len(),
        right.len(),
        lengths,
        tt1.order()
    ));
    o
}

fn index_formula() -> Outcome {
    let t = verify("sec8.discs");
    let mut ok = true;
    let mut notes = Vec::new();
    for (case, dw, _) in DISC_CASES {
        let printed = |k: &str| t.cell("sec8.discs", &format!("{case}.{k}")).unwrap().expected.clone();
        let ps: Vec<i64> = printed("glue").split(',').map(|p| p.parse().unwrap()).collect();
        let d2 = parse_factored(&printed("dW'")).unwrap();
        let d = parse_factored(dw).unwrap();
        if !index_formula_check(d, d2, &ps) {
            ok = false;
            notes.push(format!("{case}: {dw} -> {} via {ps:?} fails", printed("dW'")));
        }
    }
    let table = judge(&[t], |_| true);
    notes.extend(table.notes);
    Outcome {
        pass: ok && table.pass,
        detail: format!("{} printed pairs; {}", DISC_CASES.len(), table.detail),
        notes,
    }
}

fn divisible_classes() -> Outcome {
    let mut o = judge(&[verify("sec8.classes")], |_| true);
    let e = find_entry("O_M(8,4)", "W").unwrap();
    let cfg = e.config();
    let w = cfg.class("W").unwrap().clone();
    let lbar = cfg.class("Lbar").unwrap();
    let dependent = in_glue_span(&[(w, 4)], lbar, 2).unwrap();
    o.notes.push(format!(
        "on O_M(8,4), Lbar/2 lies in the span of the curves and W/4: {dependent}"
    ));
    o
}

fn ade_determinants() -> Outcome {
    let mut types: Vec<AdeType> = (1..=8).map(AdeType::a).collect();
    types.extend((4..=8).map(AdeType::d));
    types.extend((6..=8).map(AdeType::e));
    let mut bad = Vec::new();
    for t in &types {
        let n = t.rank();
        let expected_abs = match t.to_string().chars().next().unwrap() {
            'A' => n as i128 + 1,
            'D' => 4,
            _ => 9 - n as i128,
        };
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let direct = discriminant(&ade_lattice(*t)).unwrap();
        let summed = discriminant(&ade_sum(&[(1, *t)])).unwrap();
        let snf = discriminant_group(&ade_lattice(*t)).unwrap().order();
        let oracle = common::rational_det(ade_lattice(*t).gram());
        if [direct, summed, oracle] != [sign * expected_abs; 3] || snf != expected_abs {
            bad.push(format!("{t}: {direct} {summed} {oracle} |{snf}|"));
        }
    }
    // A_n as a chain read from the text format
    for n in 1..=8 {
        let mut text: String = (1..=n).map(|i| format!("curve C{i}\n")).collect();
        text.extend((1..n).map(|i| format!("edge C{i} C{}\n", i + 1)));
        let d = discriminant(&parse_config(&text).unwrap().graph.to_lattice()).unwrap();
        if d != if n % 2 == 0 { 1 } else { -1 } * (n as i128 + 1) {
            bad.push(format!("chain of {n}: {d}"));
        }
    }
    let components = judge(&[verify("sec7.components")], |_| true);
    let mut o = Outcome::new(
        bad.is_empty() && components.pass,
        format!(
            "{} root lattices, 8 chains; components {}",
            types.len(),
            components.detail
        ),
    );
    o.notes = bad;
    o.notes.extend(components.notes);
    o
}

fn property_suite() -> Outcome {
    use rand::{Rng, SeedableRng};
    let mut notes = Vec::new();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20);

    // (a) orbit-stabilizer
    let mut a_ok = true;
    let groups: Vec<_> = GroupLabel::ALL.iter().map(|g| g.group().projective()).collect();
    for _ in 0..1000 {
        let pg = &groups[rng.gen_range(0..groups.len())];
        let e = pg.element(rng.gen_range(0..pg.order()));
        let line = match fix_lines(e) {
            Ok(ls) if !ls.is_empty() && rng.gen_bool(0.5) => ls[rng.gen_range(0..ls.len())].clone(),
            _ => common::random_line(&mut rng),
        };
        if orbit(pg, &line).len() * stabilizer(pg, &line).len() != pg.order() {
            a_ok = false;
        }
    }
    notes.push(format!("(a) orbit-stabilizer on 1000 pairs: {}", verdict(a_ok)));

    // (b) divisibility against the overlattice definition, every class with coefficients in [0, p)
    let mut b_ok = true;
    let mut checked = 0;
    for sum in common::ade_sums(6) {
        let l = ade_sum(&sum.iter().map(|&t| (1, t)).collect::<Vec<_>>());
        let n = l.rank();
        for p in [2i64, 3, 4] {
            for code in 1..(p as usize).pow(n as u32) {
                let v: Vec<i64> = (0..n)
                    .map(|i| ((code / (p as usize).pow(i as u32)) % p as usize) as i64)
                    .collect();
                let class = DivisorClass::new(v.clone());
                let fast = is_p_divisible(&l, &class, p).unwrap();
                b_ok &= fast == common::overlattice_is_even(&l, &v, p);
                if fast {
                    b_ok &= adjoin_class(&l, &class, p).is_ok();
                }
                checked += 1;
            }
        }
    }
    notes.push(format!(
        "(b) is_p_divisible on {checked} classes over 37 A-D-E sums: {}",
        verdict(b_ok)
    ));

    // (c) SNF against a rational determinant
    let mut c_ok = true;
    for _ in 0..300 {
        let n = rng.gen_range(1..=10);
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i..n {
                m[i][j] = rng.gen_range(-4..=4);
                m[j][i] = m[i][j];
            }
        }
        let d = smith_normal_form(&m).unwrap();
        let product: i128 = if d.len() < n { 0 } else { d.iter().product() };
        c_ok &= product == common::rational_det(&m).abs();
    }
    notes.push(format!(
        "(c) SNF product = |det| on 300 symmetric matrices: {}",
        verdict(c_ok)
    ));

    // (d) covering self-intersections
    let d_ok = cover_self_intersection(-3, true, 3) == Ok(-1)
        && cover_self_intersection(-1, false, 3) == Ok(-3)
        && cover_self_intersection(-2, true, 2) == Ok(-1);
    notes.push(format!("(d) cover values -1, -3, -1: {}", verdict(d_ok)));

    Outcome {
        pass: a_ok && b_ok && c_ok && d_ok,
        detail: "four properties".into(),
        notes,
    }
}

fn nikulin_shapes_hold() -> bool {
    bipoly_k3::lattices::DIVISIBLE_CLASSES
        .iter()
        .all(|e| nikulin_count_check(&e.lattice(), &e.divisor(), e.p) == Ok(true))
}

pub fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// The ten criteria in order.
pub fn criteria() -> Vec<(&'static str, Box<dyn Fn() -> Outcome>)> {
    vec![
        ("group table", Box::new(group_table)),
        (
            "ruling orbit tables",
            Box::new(|| judge(&[verify("sec4.rulings")], |_| true)),
        ),
        ("meeting-point orbits", Box::new(meeting_points)),
        (
            "fix-line tables",
            Box::new(|| judge(&[verify("sec4.fixlines")], |_| true)),
        ),
        (
            "quotient-singularity tables",
            Box::new(|| {
                let r = [verify("sec5.quadric"), verify("sec5.offquadric"), verify("sec5.sing")];
                judge(&r, |c| c.key.ends_with(".sing"))
            }),
        ),
        (
            "curve counts",
            Box::new(|| judge(&[verify("sec6.nu")], |c| !c.key.ends_with(".d_sign"))),
        ),
        ("discriminant arithmetic", Box::new(index_formula)),
        (
            "divisible-class suite",
            Box::new(|| {
                let mut o = divisible_classes();
                o.pass &= nikulin_shapes_hold();
                o
            }),
        ),
        ("A-D-E determinants", Box::new(ade_determinants)),
        ("property-based", Box::new(property_suite)),
    ]
}
