//! Row reduction, kernels and spans for small matrices over the field.

use super::scalar::AlgebraicScalar;

pub type Vector = Vec<AlgebraicScalar>;

/// Reduces `rows` in place to reduced row echelon form and returns the pivot columns.
/// Zero rows are dropped.
pub fn rref(rows: &mut Vec<Vector>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in 0..ncols {
                if !rows[r][j].is_zero() {
                    let t = &f * &rows[r][j];
                    rows[i][j] = &rows[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of the null space `{x : rows·x = 0}` in reduced echelon form.
pub fn kernel(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Vec<Vector> = free
        .iter()
        .map(|&f| {
            let mut v = vec![AlgebraicScalar::zero(); ncols];
            v[f] = AlgebraicScalar::one();
            for (row, &pc) in m.iter().zip(pivots.iter()) {
                v[pc] = -&row[f];
            }
            v
        })
        .collect();
    rref(&mut basis, ncols);
    basis
}

/// Reduced echelon basis of the span of `vectors`.
pub fn span(vectors: &[Vector]) -> Vec<Vector> {
    let Some(first) = vectors.first() else {
        return Vec::new();
    };
    let n = first.len();
    let mut m = vectors.to_vec();
    rref(&mut m, n);
    m
}

pub fn rank(vectors: &[Vector]) -> usize {
    span(vectors).len()
}

/// Scales a nonzero vector so its first nonzero coordinate is 1.
pub fn normalize(v: &[AlgebraicScalar]) -> Option<Vector> {
    let lead = v.iter().find(|x| !x.is_zero())?;
    if lead.is_one() {
        return Some(v.to_vec());
    }
    let inv = lead.inv().ok()?;
    Some(v.iter().map(|x| x * &inv).collect())
}

pub fn dot(a: &[AlgebraicScalar], b: &[AlgebraicScalar]) -> AlgebraicScalar {
    let mut acc = AlgebraicScalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| AlgebraicScalar::from(x)).collect()
    }

    #[test]
    fn kernel_of_rank_two() {
        let rows = vec![v(&[1, 0, 1, 0]), v(&[0, 1, 0, 1]), v(&[1, 1, 1, 1])];
        let k = kernel(&rows, 4);
        assert_eq!(k, vec![v(&[1, 0, -1, 0]), v(&[0, 1, 0, -1])]);
        for b in &k {
            for r in &rows {
                assert!(dot(r, b).is_zero());
            }
        }
    }

    #[test]
    fn span_is_canonical() {
        let a = span(&[v(&[2, 4, 0, 0]), v(&[0, 0, 3, 3])]);
        let b = span(&[v(&[1, 2, 1, 1]), v(&[1, 2, -1, -1])]);
        assert_eq!(a, b);
        assert_eq!(rank(&[v(&[1, 1, 0, 0]), v(&[2, 2, 0, 0])]), 1);
    }

    #[test]
    fn normalize_leading_one() {
        assert_eq!(normalize(&v(&[0, 3, 6, 0])), Some(v(&[0, 1, 2, 0])));
        assert_eq!(normalize(&v(&[0, 0, 0, 0])), None);
    }
}
