//! Divisible classes, overlattices and the index formula.

use std::collections::BTreeSet;

use super::gram::IntegralLattice;
use super::snf::row_echelon_basis;
use crate::error::LatticeError;

/// Integer coefficients of a divisor in the basis of a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub coeffs: Vec<i64>,
}

impl DivisorClass {
    pub fn new(coeffs: Vec<i64>) -> Self {
        DivisorClass { coeffs }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| self.coeffs[i] != 0).collect()
    }
}

/// `v/p` generates an even integral overlattice: `Gram·v ≡ 0 (mod p)` and `v² ≡ 0 (mod 2p²)`.
pub fn is_p_divisible(l: &IntegralLattice, v: &DivisorClass, p: i64) -> Result<bool, LatticeError> {
    if p < 1 {
        return Err(LatticeError::Precondition(format!("p = {p} must be positive")));
    }
    let p = p as i128;
    let gv = l.apply(&v.coeffs)?;
    if gv.iter().any(|x| x % p != 0) {
        return Ok(false);
    }
    let n = l.norm(&v.coeffs)?;
    Ok(n % (2 * p * p) == 0)
}

/// The overlattice `L + Z·v/p`.
pub fn adjoin_class(l: &IntegralLattice, v: &DivisorClass, p: i64) -> Result<IntegralLattice, LatticeError> {
    if !is_p_divisible(l, v, p)? {
        return Err(LatticeError::NotDivisible { p });
    }
    let n = l.rank();
    let p128 = p as i128;
    // generators of p·L′ in the basis of L
    let mut gens: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { p128 } else { 0 }).collect())
        .collect();
    gens.push(v.coeffs.iter().map(|&c| c as i128).collect());
    let basis = row_echelon_basis(&gens)?;
    debug_assert_eq!(basis.len(), n);
    let g: Vec<Vec<i128>> = l
        .gram()
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let bg: Vec<Vec<i128>> = basis
        .iter()
        .map(|b| {
            (0..n)
                .map(|j| (0..n).try_fold(0i128, |acc, k| acc.checked_add(b[k].checked_mul(g[k][j])?)))
                .collect::<Option<Vec<i128>>>()
        })
        .collect::<Option<_>>()
        .ok_or(LatticeError::Overflow)?;
    let mut gram = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let x = (0..n)
                .try_fold(0i128, |acc, k| acc.checked_add(bg[i][k].checked_mul(basis[j][k])?))
                .ok_or(LatticeError::Overflow)?;
            if x % (p128 * p128) != 0 {
                return Err(LatticeError::Precondition("overlattice is not integral".into()));
            }
            gram[i][j] = i64::try_from(x / (p128 * p128)).map_err(|_| LatticeError::Overflow)?;
        }
    }
    let names = basis
        .iter()
        .map(|b| {
            let nz: Vec<usize> = (0..n).filter(|&k| b[k] != 0).collect();
            match nz.as_slice() {
                [k] if b[*k] == p128 => l.names()[*k].clone(),
                _ => {
                    let terms: Vec<String> = nz.iter().map(|&k| format!("{}{}", b[k], l.names()[k])).collect();
                    format!("({})/{p}", terms.join("+"))
                }
            }
        })
        .collect();
    IntegralLattice::new(gram, names)
}

/// `d(W) = d(W′)·(Π ps)²`.
pub fn index_formula_check(d_w: i128, d_w2: i128, ps: &[i64]) -> bool {
    let index: Option<i128> = ps.iter().try_fold(1i128, |acc, &p| acc.checked_mul(p as i128));
    index
        .and_then(|i| i.checked_mul(i))
        .and_then(|sq| d_w2.checked_mul(sq))
        .is_some_and(|rhs| rhs == d_w)
}

/// Whether `target/p` lies in `L + Σ Z·gᵢ/pᵢ` for the glue classes `(gᵢ, pᵢ)`.
pub fn in_glue_span(glue: &[(DivisorClass, i64)], target: &DivisorClass, p: i64) -> Result<bool, LatticeError> {
    if p < 1 || glue.iter().any(|(_, q)| *q < 1) {
        return Err(LatticeError::Precondition("denominators must be positive".into()));
    }
    let n = target.coeffs.len();
    if let Some((g, _)) = glue.iter().find(|(g, _)| g.coeffs.len() != n) {
        return Err(LatticeError::DimensionMismatch {
            expected: n,
            got: g.coeffs.len(),
        });
    }
    let common = glue.iter().fold(p, |acc, (_, q)| num_integer::lcm(acc, *q));
    let mut k = vec![0i64; glue.len()];
    loop {
        let ok = (0..n).all(|c| {
            let mut x = target.coeffs[c] * (common / p);
            for ((g, q), &ki) in glue.iter().zip(&k) {
                x -= ki * g.coeffs[c] * (common / q);
            }
            x % common == 0
        });
        if ok {
            return Ok(true);
        }
        // next coefficient vector in the box Π [0, pᵢ)
        let mut i = 0;
        loop {
            if i == k.len() {
                return Ok(false);
            }
            k[i] += 1;
            if k[i] < glue[i].1 {
                break;
            }
            k[i] = 0;
            i += 1;
        }
    }
}

fn require_disjoint_nodal(l: &IntegralLattice, curves: &[usize]) -> Result<(), LatticeError> {
    let g = l.gram();
    for (a, &i) in curves.iter().enumerate() {
        if g[i][i] != -2 {
            return Err(LatticeError::Precondition(format!(
                "{} is not a (-2)-curve",
                l.names()[i]
            )));
        }
        for &j in &curves[a + 1..] {
            if g[i][j] != 0 {
                return Err(LatticeError::Precondition(format!(
                    "{} and {} meet",
                    l.names()[i],
                    l.names()[j]
                )));
            }
        }
    }
    Ok(())
}

/// Geometric criterion for divisible classes supported on (−2)-curves.
///
/// * `p = 2`: the curves with odd coefficient are disjoint and there are 8 or 16 of them.
/// * `p = 4`: the same test applied to the odd-coefficient curves (`v/4` divisible implies `v/2` divisible).
/// * `p = 3`: the support is six disjoint `A₂` pairs, coefficients `±1` with opposite signs in each pair.
///
/// Supports violating the shape preconditions are reported as errors.
pub fn nikulin_count_check(l: &IntegralLattice, v: &DivisorClass, p: i64) -> Result<bool, LatticeError> {
    l.check_len(&v.coeffs)?;
    match p {
        2 | 4 => {
            let odd: Vec<usize> = (0..v.coeffs.len()).filter(|&i| v.coeffs[i] % 2 != 0).collect();
            if p == 2 && odd.len() != v.support().len() {
                return Err(LatticeError::Precondition(
                    "2-divisible class with even coefficients".into(),
                ));
            }
            require_disjoint_nodal(l, &odd)?;
            Ok(odd.len() == 8 || odd.len() == 16)
        }
        3 => {
            let g = l.gram();
            let support = v.support();
            let mut seen = BTreeSet::new();
            let mut pairs = 0;
            for &i in &support {
                if seen.contains(&i) {
                    continue;
                }
                let partners: Vec<usize> = support.iter().copied().filter(|&j| j != i && g[i][j] != 0).collect();
                let [j] = partners.as_slice() else {
                    return Err(LatticeError::Precondition(format!(
                        "{} does not lie in an A2 pair of the support",
                        l.names()[i]
                    )));
                };
                let j = *j;
                let others_of_j = support.iter().filter(|&&k| k != j && g[j][k] != 0).count();
                if g[i][i] != -2 || g[j][j] != -2 || g[i][j] != 1 || others_of_j != 1 {
                    return Err(LatticeError::Precondition(format!(
                        "{} and {} do not form a disjoint A2",
                        l.names()[i],
                        l.names()[j]
                    )));
                }
                let (a, b) = (v.coeffs[i], v.coeffs[j]);
                if a.abs() != 1 || a != -b {
                    return Ok(false);
                }
                seen.insert(i);
                seen.insert(j);
                pairs += 1;
            }
            Ok(pairs == 6)
        }
        _ => Err(LatticeError::Precondition(format!(
            "no geometric criterion for p = {p}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::gram::{ade_sum, discriminant};
    use crate::singularities::ade::AdeType;

    fn alternating(pairs: usize) -> DivisorClass {
        DivisorClass::new((0..2 * pairs).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect())
    }

    #[test]
    fn six_a2_alternating_is_3_divisible() {
        let l = ade_sum(&[(6, AdeType::a(2))]);
        let v = alternating(6);
        assert_eq!(l.norm(&v.coeffs).unwrap(), -36);
        assert!(is_p_divisible(&l, &v, 3).unwrap());
        assert!(nikulin_count_check(&l, &v, 3).unwrap());
        let l2 = adjoin_class(&l, &v, 3).unwrap();
        assert_eq!(discriminant(&l2).unwrap(), 81);
        assert!(l2.is_even());
    }

    #[test]
    fn eight_a1_sum_is_2_divisible() {
        let l = ade_sum(&[(8, AdeType::a(1))]);
        let v = DivisorClass::new(vec![1; 8]);
        assert!(is_p_divisible(&l, &v, 2).unwrap());
        assert!(nikulin_count_check(&l, &v, 2).unwrap());
        let l2 = adjoin_class(&l, &v, 2).unwrap();
        assert_eq!(discriminant(&l2).unwrap(), 64);
        let single = DivisorClass::new([1, 0, 0, 0, 0, 0, 0, 0].to_vec());
        assert!(!is_p_divisible(&l, &single, 2).unwrap());
        assert!(matches!(
            adjoin_class(&l, &single, 2),
            Err(LatticeError::NotDivisible { p: 2 })
        ));
    }

    #[test]
    fn four_curves_fail_nikulin() {
        let l = ade_sum(&[(4, AdeType::a(1))]);
        let v = DivisorClass::new(vec![1; 4]);
        assert!(is_p_divisible(&l, &v, 2).unwrap());
        assert!(!nikulin_count_check(&l, &v, 2).unwrap());
    }

    #[test]
    fn adjoin_nothing() {
        let l = ade_sum(&[(2, AdeType::a(2))]);
        let v = DivisorClass::new(vec![1, 0, 0, 0]);
        assert_eq!(adjoin_class(&l, &v, 1).unwrap().gram(), l.gram());
    }

    #[test]
    fn meeting_support_is_rejected() {
        let l = ade_sum(&[(1, AdeType::a(2))]);
        let v = DivisorClass::new(vec![1, 1]);
        assert!(nikulin_count_check(&l, &v, 2).is_err());
    }

    #[test]
    fn glue_span() {
        let v = DivisorClass::new(vec![2, 2, 0]);
        let w = DivisorClass::new(vec![1, 1, 4]);
        // w/2 = v/4 + (0, 0, 2)
        assert!(in_glue_span(&[(v.clone(), 4)], &w, 2).unwrap());
        assert!(!in_glue_span(&[(v, 4)], &DivisorClass::new(vec![1, 0, 0]), 2).unwrap());
        assert!(in_glue_span(&[], &DivisorClass::new(vec![2, 4, 0]), 2).unwrap());
    }

    #[test]
    fn index_formula() {
        assert!(index_formula_check(2i128.pow(5) * 27 * 5, 2 * 3 * 5, &[3, 2, 2]));
        assert!(index_formula_check(2i128.pow(5) * 27 * 7, 8 * 3 * 7, &[2, 3]));
        assert!(index_formula_check(17, 17, &[]));
        assert!(!index_formula_check(17, 17, &[2]));
    }
}
