//! Smith and Hermite normal forms over the integers.

use std::fmt;

use super::gram::IntegralLattice;
use crate::error::LatticeError;

fn checked_row_op(a: &mut [Vec<i128>], target: usize, source: usize, factor: i128) -> Result<(), LatticeError> {
    if factor == 0 {
        return Ok(());
    }
    for j in 0..a[target].len() {
        let t = a[source][j]
            .checked_mul(factor)
            .and_then(|x| a[target][j].checked_sub(x))
            .ok_or(LatticeError::Overflow)?;
        a[target][j] = t;
    }
    Ok(())
}

fn checked_col_op(a: &mut [Vec<i128>], target: usize, source: usize, factor: i128) -> Result<(), LatticeError> {
    if factor == 0 {
        return Ok(());
    }
    for row in a.iter_mut() {
        let t = row[source]
            .checked_mul(factor)
            .and_then(|x| row[target].checked_sub(x))
            .ok_or(LatticeError::Overflow)?;
        row[target] = t;
    }
    Ok(())
}

/// Diagonal of the Smith normal form: `d₁ | d₂ | … ` (nonnegative, zeros last).
///
/// Pivots are chosen by minimal absolute value among the remaining entries.
pub fn smith_normal_form(m: &[Vec<i64>]) -> Result<Vec<i128>, LatticeError> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].unsigned_abs());
            let Some((pi, pj)) = pivot else {
                break;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_euclid(p);
                checked_row_op(&mut a, i, t, q)?;
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j].div_euclid(p);
                checked_col_op(&mut a, j, t, q)?;
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // enforce divisibility of the remaining block by the pivot
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => checked_row_op(&mut a, t, i, -1)?,
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    Ok(diag)
}

/// Finite abelian group `⊕ Z/dᵢ` with `d₁ | d₂ | …`, each `dᵢ > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantGroup {
    pub invariant_factors: Vec<i128>,
}

impl DiscriminantGroup {
    pub fn order(&self) -> i128 {
        self.invariant_factors.iter().product()
    }

    /// Number of cyclic factors of order divisible by `p`.
    pub fn p_rank(&self, p: i128) -> usize {
        self.invariant_factors.iter().filter(|&&d| d % p == 0).count()
    }
}

impl fmt::Display for DiscriminantGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn discriminant_group(l: &IntegralLattice) -> Result<DiscriminantGroup, LatticeError> {
    let diag = smith_normal_form(l.gram())?;
    if diag.len() < l.rank() || diag.contains(&0) {
        return Err(LatticeError::Degenerate);
    }
    Ok(DiscriminantGroup {
        invariant_factors: diag.into_iter().filter(|&d| d > 1).collect(),
    })
}

/// A row-echelon basis of the integer row space of `m` (Hermite normal form without reduction above pivots).
pub fn row_echelon_basis(m: &[Vec<i128>]) -> Result<Vec<Vec<i128>>, LatticeError> {
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        loop {
            let nz: Vec<usize> = (r..a.len()).filter(|&i| a[i][c] != 0).collect();
            if nz.len() <= 1 {
                if let Some(&i) = nz.first() {
                    a.swap(r, i);
                    if a[r][c] < 0 {
                        for x in a[r].iter_mut() {
                            *x = -*x;
                        }
                    }
                    r += 1;
                }
                break;
            }
            let &best = nz.iter().min_by_key(|&&i| a[i][c].unsigned_abs()).expect("nonempty");
            a.swap(r, best);
            for i in r + 1..a.len() {
                let q = a[i][c].div_euclid(a[r][c]);
                checked_row_op(&mut a, i, r, q)?;
            }
        }
    }
    a.truncate(r);
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::gram::{ade_lattice, ade_sum};
    use crate::singularities::ade::AdeType;

    #[test]
    fn snf_small() {
        assert_eq!(smith_normal_form(&[vec![2, 4], vec![6, 8]]).unwrap(), vec![2, 4]);
        assert_eq!(smith_normal_form(&[vec![2, 0], vec![0, 3]]).unwrap(), vec![1, 6]);
        assert_eq!(smith_normal_form(&[vec![0, 0], vec![0, 0]]).unwrap(), vec![0, 0]);
    }

    #[test]
    fn ade_discriminant_groups() {
        let a3 = discriminant_group(&ade_lattice(AdeType::a(3))).unwrap();
        assert_eq!(a3.invariant_factors, vec![4]);
        let d4 = discriminant_group(&ade_lattice(AdeType::d(4))).unwrap();
        assert_eq!(d4.invariant_factors, vec![2, 2]);
        let a1x8 = discriminant_group(&ade_sum(&[(8, AdeType::a(1))])).unwrap();
        assert_eq!(a1x8.invariant_factors, vec![2; 8]);
        assert_eq!(a1x8.p_rank(2), 8);
    }

    #[test]
    fn degenerate_lattice_errors() {
        let l = IntegralLattice::from_gram(vec![vec![2, 2], vec![2, 2]]).unwrap();
        assert_eq!(discriminant_group(&l), Err(LatticeError::Degenerate));
    }

    #[test]
    fn echelon_basis() {
        let m = vec![vec![2, 0], vec![0, 2], vec![1, 1]];
        let b = row_echelon_basis(&m).unwrap();
        assert_eq!(b.len(), 2);
        // index of the row lattice in Z² is |det| = 2
        assert_eq!((b[0][0] * b[1][1] - b[0][1] * b[1][0]).abs(), 2);
    }
}
