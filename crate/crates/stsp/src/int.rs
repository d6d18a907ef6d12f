//! Arbitrary-precision integers with a machine-word fast path.
//!
//! Matrix entries over `ℤ` stay well inside `i128` for ordinary draws, but
//! deeply nested generator words can square products of coordinates a few
//! times over, so every operation promotes to a heap integer instead of
//! overflowing. Values are kept normalized: the big representation is used
//! only when the value does not fit in an `i128`, so structural equality is
//! semantic equality.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed as _, ToPrimitive as _, Zero as _};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i128),
    Big(BigInt),
}

impl Int {
    pub fn zero() -> Int {
        Int::Small(0)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Int::Small(v) => *v == 0,
            Int::Big(_) => false,
        }
    }

    fn from_big(b: BigInt) -> Int {
        match b.to_i128() {
            Some(v) => Int::Small(v),
            None => Int::Big(b),
        }
    }

    fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn as_i128(&self) -> Option<i128> {
        match self {
            Int::Small(v) => Some(*v),
            Int::Big(_) => None,
        }
    }

    pub fn add_ref(&self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_add(*b) {
                return Int::Small(v);
            }
        }
        Int::from_big(self.to_big() + rhs.to_big())
    }

    pub fn sub_ref(&self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_sub(*b) {
                return Int::Small(v);
            }
        }
        Int::from_big(self.to_big() - rhs.to_big())
    }

    pub fn mul_ref(&self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_mul(*b) {
                return Int::Small(v);
            }
        }
        Int::from_big(self.to_big() * rhs.to_big())
    }

    pub fn neg_ref(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-b.clone()),
        }
    }

    pub fn add_assign_ref(&mut self, rhs: &Int) {
        *self = self.add_ref(rhs);
    }

    /// Least non-negative residue modulo `m > 0`.
    pub fn rem_euclid_u64(&self, m: u64) -> i128 {
        match self {
            Int::Small(v) => v.rem_euclid(m as i128),
            Int::Big(b) => b
                .mod_floor(&BigInt::from(m))
                .to_i128()
                .expect("residue fits"),
        }
    }

    /// Does `d` divide this value? `d = 0` means "is zero".
    pub fn divisible_by(&self, d: &Int) -> bool {
        if d.is_zero() {
            return self.is_zero();
        }
        match (self, d) {
            (Int::Small(v), Int::Small(d)) => v.rem_euclid(d.abs()) == 0,
            _ => self.to_big().mod_floor(&d.to_big().abs()).is_zero(),
        }
    }

    pub fn abs(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_abs() {
                Some(a) => Int::Small(a),
                None => Int::from_big(BigInt::from(*v).abs()),
            },
            Int::Big(b) => Int::from_big(b.abs()),
        }
    }

    pub fn gcd(&self, rhs: &Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => {
                let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
                while b != 0 {
                    (a, b) = (b, a % b);
                }
                Int::from_big(BigInt::from(a))
            }
            _ => Int::from_big(self.to_big().gcd(&rhs.to_big())),
        }
    }
}

impl From<i128> for Int {
    fn from(v: i128) -> Int {
        Int::Small(v)
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl FromStr for Int {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Int, Self::Err> {
        if let Ok(v) = s.parse::<i128>() {
            return Ok(Int::Small(v));
        }
        Ok(Int::from_big(s.parse::<BigInt>()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotes_and_normalizes() {
        let big = Int::from(i128::MAX).add_ref(&Int::from(1));
        assert!(matches!(big, Int::Big(_)));
        let back = big.sub_ref(&Int::from(1));
        assert_eq!(back, Int::from(i128::MAX));
        assert!(matches!(back, Int::Small(_)));
    }

    #[test]
    fn huge_products_stay_exact() {
        let x = Int::from(i128::MAX / 3);
        let sq = x.mul_ref(&x);
        let div = sq.divisible_by(&x);
        assert!(div);
        assert_eq!(sq.rem_euclid_u64(7), {
            // (x mod 7)² mod 7
            let r = (i128::MAX / 3).rem_euclid(7);
            (r * r).rem_euclid(7)
        });
        assert_eq!(sq.to_string().parse::<Int>().unwrap(), sq);
    }

    #[test]
    fn gcd_and_divisibility() {
        assert_eq!(Int::from(12).gcd(&Int::from(-8)), Int::from(4));
        assert_eq!(Int::from(0).gcd(&Int::from(0)), Int::from(0));
        assert!(Int::from(0).divisible_by(&Int::from(5)));
        assert!(!Int::from(3).divisible_by(&Int::from(0)));
        assert!(Int::from(-6).divisible_by(&Int::from(3)));
    }
}
