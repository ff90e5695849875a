//! Exact arithmetic in the cyclotomic field `Q(ζ)`, `ζ = exp(2πi/24)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ⁷` modulo the
//! 24th cyclotomic polynomial `x⁸ − x⁴ + 1`, as eight integer numerators
//! over one positive common denominator. The representation is reduced
//! (`gcd(den, num…) = 1`), so structural equality is field equality and the
//! derived `Hash` is a canonical key.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use once_cell::sync::Lazy;

use super::AlgebraError;

/// Rational numbers used for coordinates in the power basis.
pub type Rational = Ratio<i128>;

/// Degree of the field over `Q`.
pub const DEGREE: usize = 8;

/// Order of the root of unity generating the field.
pub const ROOT_ORDER: usize = 24;

/// Exponents `k` with `gcd(k, 24) = 1`, the Galois group of `Q(ζ)/Q`.
const GALOIS_EXPONENTS: [usize; 8] = [1, 5, 7, 11, 13, 17, 19, 23];

/// Power-basis coordinates of `ζ^m` for `m = 0..24`.
static POWERS: Lazy<[[i128; DEGREE]; ROOT_ORDER]> = Lazy::new(|| {
    let mut table = [[0i128; DEGREE]; ROOT_ORDER];
    let mut current = [0i128; DEGREE];
    current[0] = 1;
    for entry in table.iter_mut() {
        *entry = current;
        // multiply by ζ: shift up, then fold ζ⁸ = ζ⁴ − 1
        let top = current[DEGREE - 1];
        for i in (1..DEGREE).rev() {
            current[i] = current[i - 1];
        }
        current[0] = -top;
        current[4] += top;
    }
    table
});

#[inline]
fn checked_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("cyclotomic coefficient overflow")
}

#[inline]
fn checked_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("cyclotomic coefficient overflow")
}

/// An element of `Q(ζ₂₄)` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraicScalar {
    num: [i128; DEGREE],
    den: i128,
}

impl AlgebraicScalar {
    pub fn zero() -> Self {
        AlgebraicScalar {
            num: [0; DEGREE],
            den: 1,
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i128) -> Self {
        let mut num = [0; DEGREE];
        num[0] = n;
        AlgebraicScalar { num, den: 1 }
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut num = [0; DEGREE];
        num[0] = *r.numer();
        Self::from_parts(num, *r.denom())
    }

    /// Builds `Σ coeffs[k]·ζᵏ`.
    pub fn from_coeffs(coeffs: [Rational; DEGREE]) -> Self {
        let den = coeffs.iter().fold(1i128, |acc, c| acc.lcm(c.denom()));
        let mut num = [0i128; DEGREE];
        for (slot, c) in num.iter_mut().zip(coeffs.iter()) {
            *slot = checked_mul(*c.numer(), den / c.denom());
        }
        Self::from_parts(num, den)
    }

    /// Integer numerators over a common denominator; reduced on construction.
    pub fn from_parts(num: [i128; DEGREE], den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let mut s = AlgebraicScalar { num, den };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.num.iter().all(|&c| c == 0) {
            self.den = 1;
            return;
        }
        let mut g = self.den.abs();
        for &c in &self.num {
            if g == 1 {
                break;
            }
            g = g.gcd(&c);
        }
        if self.den < 0 {
            g = -g;
        }
        if g != 1 {
            for c in self.num.iter_mut() {
                *c /= g;
            }
            self.den /= g;
        }
    }

    /// The power-basis coordinates as rationals.
    pub fn coeffs(&self) -> [Rational; DEGREE] {
        let mut out = [Rational::from_integer(0); DEGREE];
        for (o, &n) in out.iter_mut().zip(self.num.iter()) {
            *o = Rational::new(n, self.den);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.den == 1 && self.num[0] == 1 && self.num[1..].iter().all(|&c| c == 0)
    }

    /// Returns the value as a rational if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(|&c| c == 0) {
            Some(Rational::new(self.num[0], self.den))
        } else {
            None
        }
    }

    /// `ζᵏ` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let m = k.rem_euclid(ROOT_ORDER as i64) as usize;
        AlgebraicScalar { num: POWERS[m], den: 1 }
    }

    /// √2 = ζ³ − ζ⁹ (= ζ₈ + ζ₈⁻¹).
    pub fn sqrt2() -> Self {
        &Self::zeta_pow(3) - &Self::zeta_pow(9)
    }

    /// √3 = ζ² + ζ⁻².
    pub fn sqrt3() -> Self {
        &Self::zeta_pow(2) + &Self::zeta_pow(-2)
    }

    /// The imaginary unit ζ⁶.
    pub fn i() -> Self {
        Self::zeta_pow(6)
    }

    /// Primitive cube root of unity ζ⁸.
    pub fn omega() -> Self {
        Self::zeta_pow(8)
    }

    /// Image under the field automorphism `ζ ↦ ζᵏ`, `gcd(k, 24) = 1`.
    pub fn galois(&self, k: usize) -> Self {
        debug_assert!(k.gcd(&ROOT_ORDER) == 1);
        let mut num = [0i128; DEGREE];
        for (j, &c) in self.num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let p = &POWERS[(j * k) % ROOT_ORDER];
            for (slot, &b) in num.iter_mut().zip(p.iter()) {
                *slot = checked_add(*slot, checked_mul(c, b));
            }
        }
        AlgebraicScalar { num, den: self.den }
    }

    /// Complex conjugation, `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        self.galois(23)
    }

    /// Field norm to `Q`: product of all eight conjugates.
    pub fn norm(&self) -> Rational {
        let mut acc = self.clone();
        for &k in &GALOIS_EXPONENTS[1..] {
            acc = &acc * &self.galois(k);
        }
        acc.as_rational().expect("norm lies in Q")
    }

    /// Multiplicative inverse via `a⁻¹ = (Π_{σ≠1} σ(a)) / N(a)`.
    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut cofactor = Self::one();
        for &k in &GALOIS_EXPONENTS[1..] {
            cofactor = &cofactor * &self.galois(k);
        }
        let norm = (self * &cofactor).as_rational().expect("norm lies in Q");
        Ok(cofactor.scale(Rational::new(*norm.denom(), *norm.numer())))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self * &rhs.inv()?)
    }

    /// Multiplication by a rational.
    pub fn scale(&self, r: Rational) -> Self {
        let mut num = self.num;
        for c in num.iter_mut() {
            *c = checked_mul(*c, *r.numer());
        }
        Self::from_parts(num, checked_mul(self.den, *r.denom()))
    }

    /// Smallest `k ≥ 1` with `ζᵏ = self`, if `self` is a 24th root of unity.
    pub fn root_of_unity_exponent(&self) -> Option<usize> {
        if self.den != 1 {
            return None;
        }
        POWERS.iter().position(|p| *p == self.num)
    }
}

impl Default for AlgebraicScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for AlgebraicScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n as i128)
    }
}

impl From<Rational> for AlgebraicScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a AlgebraicScalar> for &'a AlgebraicScalar {
    type Output = AlgebraicScalar;

    fn add(self, rhs: &AlgebraicScalar) -> AlgebraicScalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let mut num = [0i128; DEGREE];
        if self.den == rhs.den {
            for (k, slot) in num.iter_mut().enumerate() {
                *slot = checked_add(self.num[k], rhs.num[k]);
            }
            return AlgebraicScalar::from_parts(num, self.den);
        }
        let g = self.den.gcd(&rhs.den);
        let (fa, fb) = (rhs.den / g, self.den / g);
        for (k, slot) in num.iter_mut().enumerate() {
            *slot = checked_add(checked_mul(self.num[k], fa), checked_mul(rhs.num[k], fb));
        }
        AlgebraicScalar::from_parts(num, checked_mul(self.den, fa))
    }
}

impl<'a> Sub<&'a AlgebraicScalar> for &'a AlgebraicScalar {
    type Output = AlgebraicScalar;

    fn sub(self, rhs: &AlgebraicScalar) -> AlgebraicScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a AlgebraicScalar> for &'a AlgebraicScalar {
    type Output = AlgebraicScalar;

    fn mul(self, rhs: &AlgebraicScalar) -> AlgebraicScalar {
        if self.is_zero() || rhs.is_zero() {
            return AlgebraicScalar::zero();
        }
        let mut wide = [0i128; 2 * DEGREE - 1];
        for (i, &a) in self.num.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.num.iter().enumerate() {
                if b != 0 {
                    wide[i + j] = checked_add(wide[i + j], checked_mul(a, b));
                }
            }
        }
        // x⁸ = x⁴ − 1
        for m in (DEGREE..2 * DEGREE - 1).rev() {
            let c = wide[m];
            if c != 0 {
                wide[m - 4] = checked_add(wide[m - 4], c);
                wide[m - 8] = checked_add(wide[m - 8], -c);
            }
        }
        let mut num = [0i128; DEGREE];
        num.copy_from_slice(&wide[..DEGREE]);
        AlgebraicScalar::from_parts(num, checked_mul(self.den, rhs.den))
    }
}

impl Neg for &AlgebraicScalar {
    type Output = AlgebraicScalar;

    fn neg(self) -> AlgebraicScalar {
        let mut num = self.num;
        for c in num.iter_mut() {
            *c = -*c;
        }
        AlgebraicScalar { num, den: self.den }
    }
}

impl Neg for AlgebraicScalar {
    type Output = AlgebraicScalar;

    fn neg(self) -> AlgebraicScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<AlgebraicScalar> for AlgebraicScalar {
            type Output = AlgebraicScalar;
            fn $m(self, rhs: AlgebraicScalar) -> AlgebraicScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a AlgebraicScalar> for AlgebraicScalar {
            type Output = AlgebraicScalar;
            fn $m(self, rhs: &AlgebraicScalar) -> AlgebraicScalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&AlgebraicScalar> for AlgebraicScalar {
    fn add_assign(&mut self, rhs: &AlgebraicScalar) {
        *self = &*self + rhs;
    }
}

impl fmt::Debug for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let open = self.den != 1 && self.num.iter().filter(|&&c| c != 0).count() > 1;
        if open {
            write!(f, "(")?;
        }
        for (k, &c) in self.num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            match (k, mag) {
                (0, _) => write!(f, "{sign}{mag}")?,
                (1, 1) => write!(f, "{sign}z")?,
                (1, _) => write!(f, "{sign}{mag}z")?,
                (_, 1) => write!(f, "{sign}z^{k}")?,
                _ => write!(f, "{sign}{mag}z^{k}")?,
            }
            first = false;
        }
        if open {
            write!(f, ")")?;
        }
        if self.den != 1 {
            write!(f, "/{}", self.den)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        let two = AlgebraicScalar::from_int(2);
        assert_eq!(AlgebraicScalar::sqrt2() * AlgebraicScalar::sqrt2(), two);
        assert_eq!(
            AlgebraicScalar::i() * AlgebraicScalar::i(),
            AlgebraicScalar::from_int(-1)
        );
        assert_eq!(
            AlgebraicScalar::sqrt3() * AlgebraicScalar::sqrt3(),
            AlgebraicScalar::from_int(3)
        );
        let w = AlgebraicScalar::omega();
        let s = &(&(&w * &w) + &w) + &AlgebraicScalar::one();
        assert!(s.is_zero());
    }

    #[test]
    fn zeta_has_order_24() {
        for k in 1..24 {
            assert!(!AlgebraicScalar::zeta_pow(k).is_one(), "ζ^{k} = 1");
        }
        assert!(AlgebraicScalar::zeta_pow(24).is_one());
        assert_eq!(AlgebraicScalar::zeta_pow(12), AlgebraicScalar::from_int(-1));
    }

    #[test]
    fn inverse_of_sqrt2() {
        let r2 = AlgebraicScalar::sqrt2();
        let inv = r2.inv().unwrap();
        assert!((&inv * &r2).is_one());
        // 1/√2 = √2/2
        assert_eq!(inv, r2.scale(Rational::new(1, 2)));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            AlgebraicScalar::one().checked_div(&AlgebraicScalar::zero()),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = AlgebraicScalar::from_parts([2, 4, 0, 0, 0, 0, 0, 6], 4);
        let b = AlgebraicScalar::from_parts([-1, -2, 0, 0, 0, 0, 0, -3], -2);
        assert_eq!(a, b);
        assert_eq!(a.coeffs()[7], Rational::new(3, 2));
    }

    #[test]
    fn root_of_unity_lookup() {
        assert_eq!(AlgebraicScalar::i().root_of_unity_exponent(), Some(6));
        assert_eq!(AlgebraicScalar::sqrt2().root_of_unity_exponent(), None);
    }

    #[test]
    fn norm_of_sqrt2_is_16() {
        // each of the four conjugate pairs ±√2 contributes −2 or 2; N(√2) = (√2)^8 up to sign
        assert_eq!(AlgebraicScalar::sqrt2().norm(), Rational::from_integer(16));
    }
}
