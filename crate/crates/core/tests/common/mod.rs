//! Independent oracles shared by the property and acceptance tests.

use bipoly_k3::algebra::AlgebraicScalar as S;
use bipoly_k3::geometry::ProjectiveLine;
use bipoly_k3::lattices::IntegralLattice;
use bipoly_k3::singularities::AdeType;
use num_rational::Ratio;

pub fn random_line(rng: &mut impl rand::Rng) -> ProjectiveLine {
    loop {
        let mut v = || -> Vec<S> { (0..4).map(|_| S::from_int(rng.gen_range(-3..=3))).collect() };
        let (a, b) = (v(), v());
        if let Ok(l) = ProjectiveLine::from_vectors(&a, &b) {
            return l;
        }
    }
}

/// A-D-E sums of total rank at most `max`, components in nondecreasing order.
pub fn ade_sums(max: usize) -> Vec<Vec<AdeType>> {
    let mut types = Vec::new();
    for n in 1..=max {
        types.push(AdeType::a(n));
    }
    for n in 4..=max {
        types.push(AdeType::d(n));
    }
    if max >= 6 {
        types.push(AdeType::e(6));
    }
    fn go(types: &[AdeType], start: usize, left: usize, cur: &mut Vec<AdeType>, out: &mut Vec<Vec<AdeType>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for i in start..types.len() {
            if types[i].rank() <= left {
                cur.push(types[i]);
                go(types, i, left - types[i].rank(), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&types, 0, max, &mut Vec::new(), &mut out);
    out
}

/// Whether `L + Z·v/p` is an even integral lattice, from its rational Gram matrix.
pub fn overlattice_is_even(l: &IntegralLattice, v: &[i64], p: i64) -> bool {
    let n = l.rank();
    let g = l.gram();
    let mut gens: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| (0..n).map(|j| Ratio::from_integer(i64::from(i == j))).collect())
        .collect();
    gens.push(v.iter().map(|&c| Ratio::new(c, p)).collect());
    for a in &gens {
        for b in &gens {
            let mut s = Ratio::from_integer(0);
            for i in 0..n {
                for j in 0..n {
                    s += a[i] * b[j] * g[i][j];
                }
            }
            if !s.is_integer() {
                return false;
            }
            if a == b && s.to_integer() % 2 != 0 {
                return false;
            }
        }
    }
    true
}

pub fn rational_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i128>>> = m
        .iter()
        .map(|r| r.iter().map(|&x| Ratio::from_integer(i128::from(x))).collect())
        .collect();
    let mut det = Ratio::from_integer(1);
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| a[r][c] != Ratio::from_integer(0)) else {
            return 0;
        };
        if r != c {
            a.swap(r, c);
            det = -det;
        }
        det *= a[c][c];
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            for k in c..n {
                let t = a[c][k];
                a[r][k] -= f * t;
            }
        }
    }
    det.to_integer()
}
