//! Self-intersections under cyclic coverings and the p-rank bound.

use super::gram::IntegralLattice;
use super::snf::discriminant_group;
use crate::error::LatticeError;

/// Self-intersection of the curve over a curve of self-intersection `s` in a cyclic cover of degree `p`.
///
/// A branch curve `E` pulls back to `p·Ẽ`, so `Ẽ² = s/p`; an invariant curve away from
/// the branch locus pulls back to a single curve with `Ẽ² = p·s`.
pub fn cover_self_intersection(s: i64, ramified: bool, p: i64) -> Result<i64, LatticeError> {
    if p < 2 {
        return Err(LatticeError::Precondition(format!("cover degree {p} < 2")));
    }
    if ramified {
        if s % p != 0 {
            return Err(LatticeError::NotRamifiable { s, p });
        }
        Ok(s / p)
    } else {
        s.checked_mul(p).ok_or(LatticeError::Overflow)
    }
}

/// The `p`-rank of the discriminant group is at most the rank `22 − ρ` of the transcendental lattice.
pub fn p_rank_bound_check(l: &IntegralLattice, p: i64, picard_rank: usize) -> Result<bool, LatticeError> {
    let rank = discriminant_group(l)?.p_rank(p as i128);
    Ok(rank + picard_rank <= 22)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::gram::ade_sum;
    use crate::singularities::ade::AdeType;

    #[test]
    fn cover_values() {
        assert_eq!(cover_self_intersection(-3, true, 3), Ok(-1));
        assert_eq!(cover_self_intersection(-1, false, 3), Ok(-3));
        assert_eq!(cover_self_intersection(-2, true, 2), Ok(-1));
        assert_eq!(
            cover_self_intersection(-2, true, 3),
            Err(LatticeError::NotRamifiable { s: -2, p: 3 })
        );
    }

    #[test]
    fn rank_bound() {
        // 3-rank 2 at Picard rank 20
        let l = ade_sum(&[(2, AdeType::a(2)), (16, AdeType::a(1))]);
        assert!(p_rank_bound_check(&l, 3, 20).unwrap());
        // 2-rank 5 at Picard rank 19
        let l = ade_sum(&[(5, AdeType::a(1)), (7, AdeType::a(2))]);
        assert!(!p_rank_bound_check(&l, 2, 19).unwrap());
        assert!(p_rank_bound_check(&ade_sum(&[(1, AdeType::e(8))]), 2, 22).unwrap());
    }
}
