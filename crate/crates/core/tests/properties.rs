use bipoly_k3::algebra::AlgebraicScalar as S;
use bipoly_k3::config::parse_config;
use bipoly_k3::geometry::{fix_lines, orbit, stabilizer};
use bipoly_k3::groups::GroupLabel;
use bipoly_k3::lattices::{
    ade_sum, adjoin_class, cover_self_intersection, discriminant, is_p_divisible, smith_normal_form, DivisorClass,
};
use bipoly_k3::singularities::AdeType;
use proptest::prelude::*;

mod common;
use common::{ade_sums, overlattice_is_even, random_line, rational_det};

fn scalar(parts: [i8; 8], den: u8) -> S {
    S::from_parts(parts.map(i128::from), i128::from(den.max(1)))
}

fn arb_scalar() -> impl Strategy<Value = S> {
    (prop::array::uniform8(-6i8..=6), 1u8..=5).prop_map(|(p, d)| scalar(p, d))
}

proptest! {
    #[test]
    fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!((&a * &inv).is_one());
        }
    }
}

/// `|PH| = |orbit|·|stabilizer|` for lines in general position and for images of fix-lines.
#[test]
fn orbit_stabilizer_on_random_lines() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x0b17);
    let groups: Vec<_> = GroupLabel::ALL.iter().map(|g| (g, g.group().projective())).collect();
    let mut special = 0;
    for _ in 0..1000 {
        let (label, pg) = &groups[rng.gen_range(0..groups.len())];
        let line = if rng.gen_bool(0.5) {
            let e = pg.element(rng.gen_range(0..pg.order()));
            match fix_lines(e) {
                Ok(ls) if !ls.is_empty() => {
                    special += 1;
                    let g = pg.element(rng.gen_range(0..pg.order()));
                    ls[rng.gen_range(0..ls.len())].transform(g)
                }
                _ => random_line(&mut rng),
            }
        } else {
            random_line(&mut rng)
        };
        let o = orbit(pg, &line).len();
        let s = stabilizer(pg, &line).len();
        assert_eq!(o * s, pg.order(), "{label}: orbit {o} stabilizer {s}");
    }
    assert!(special > 300);
}

#[test]
fn divisibility_matches_overlattice_search() {
    let sums = ade_sums(6);
    assert_eq!(sums.len(), 37);
    let mut divisible = 0;
    for sum in &sums {
        let parts: Vec<(usize, AdeType)> = sum.iter().map(|&t| (1, t)).collect();
        let l = ade_sum(&parts);
        let n = l.rank();
        let d = discriminant(&l).unwrap();
        for p in [2i64, 3, 4] {
            let total = (p as usize).pow(n as u32);
            for code in 1..total {
                let v: Vec<i64> = (0..n)
                    .map(|i| ((code / (p as usize).pow(i as u32)) % p as usize) as i64)
                    .collect();
                let class = DivisorClass::new(v.clone());
                let fast = is_p_divisible(&l, &class, p).unwrap();
                assert_eq!(fast, overlattice_is_even(&l, &v, p), "{sum:?} p={p} v={v:?}");
                if fast {
                    divisible += 1;
                    let w = adjoin_class(&l, &class, p).unwrap();
                    // the index of L in L + Z·v/p is the order of v/p modulo L
                    let order = (1..=p).find(|k| v.iter().all(|c| (k * c) % p == 0)).unwrap() as i128;
                    assert_eq!(discriminant(&w).unwrap() * order * order, d, "{sum:?} p={p} v={v:?}");
                }
            }
        }
    }
    assert!(divisible > 0);
}

fn arb_symmetric() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=10).prop_flat_map(|n| {
        prop::collection::vec(-4i64..=4, n * (n + 1) / 2).prop_map(move |upper| {
            let mut m = vec![vec![0; n]; n];
            let mut k = 0;
            for i in 0..n {
                for j in i..n {
                    m[i][j] = upper[k];
                    m[j][i] = upper[k];
                    k += 1;
                }
            }
            m
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn snf_product_is_abs_det(m in arb_symmetric()) {
        let d = smith_normal_form(&m).unwrap();
        let product: i128 = if d.len() < m.len() { 0 } else { d.iter().product() };
        prop_assert_eq!(product, rational_det(&m).abs());
        for w in d.windows(2) {
            prop_assert!(w[1] == 0 || (w[0] != 0 && w[1] % w[0] == 0));
        }
    }
}

#[test]
fn cover_values() {
    assert_eq!(cover_self_intersection(-3, true, 3), Ok(-1));
    assert_eq!(cover_self_intersection(-1, false, 3), Ok(-3));
    assert_eq!(cover_self_intersection(-2, true, 2), Ok(-1));
}

proptest! {
    #[test]
    fn cover_round_trip(s in -40i64..=-1, p in 2i64..=4) {
        let up = cover_self_intersection(s, false, p).unwrap();
        prop_assert_eq!(cover_self_intersection(up, true, p).unwrap(), s);
    }
}

fn arb_config_text() -> impl Strategy<Value = String> {
    (2usize..8).prop_flat_map(|n| {
        (
            prop::collection::vec(prop::sample::select(vec![-2i64, -1, -3, -4]), n),
            prop::collection::btree_set((0..n, 0..n), 0..n * 2),
            prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..3),
        )
            .prop_map(move |(selfs, edges, classes)| {
                let mut t = String::new();
                for (i, s) in selfs.iter().enumerate() {
                    t.push_str(&format!("curve C{i} self={s}\n"));
                }
                for (a, b) in edges.into_iter().filter(|(a, b)| a < b) {
                    t.push_str(&format!("edge C{a} C{b} mult={}\n", 1 + (a + b) % 2));
                }
                for (k, c) in classes.iter().enumerate() {
                    let terms: Vec<String> = c
                        .iter()
                        .enumerate()
                        .filter(|(_, &x)| x != 0)
                        .map(|(i, &x)| format!("{}{}*C{i}", if x < 0 { "-" } else { "+" }, x.abs()))
                        .collect();
                    if !terms.is_empty() {
                        t.push_str(&format!("class v{k} = {}\n", terms.join(" ")));
                    }
                }
                t
            })
    })
}

proptest! {
    #[test]
    fn config_round_trip(text in arb_config_text()) {
        let a = parse_config(&text).unwrap();
        let b = parse_config(&a.to_text()).unwrap();
        prop_assert_eq!(a, b);
    }
}
