//! Integers with an inline `i128` fast path that promote to `BigInt` on overflow.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i128),
    Big(BigInt),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    fn norm(b: BigInt) -> Int {
        match b.to_i128() {
            Some(v) => Int::Small(v),
            None => Int::Big(b),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn to_rational(&self) -> Rational {
        Rational::from_integer(self.to_bigint())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Int::Small(v) => *v < 0,
            Int::Big(b) => b.is_negative(),
        }
    }

    pub fn add(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => match a.checked_add(*b) {
                Some(v) => Int::Small(v),
                None => Int::Big(BigInt::from(*a) + BigInt::from(*b)),
            },
            _ => Int::norm(self.to_bigint() + o.to_bigint()),
        }
    }

    pub fn sub(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => match a.checked_sub(*b) {
                Some(v) => Int::Small(v),
                None => Int::Big(BigInt::from(*a) - BigInt::from(*b)),
            },
            _ => Int::norm(self.to_bigint() - o.to_bigint()),
        }
    }

    pub fn mul(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => match a.checked_mul(*b) {
                Some(v) => Int::Small(v),
                None => Int::Big(BigInt::from(*a) * BigInt::from(*b)),
            },
            _ => Int::norm(self.to_bigint() * o.to_bigint()),
        }
    }

    pub fn neg(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(w) => Int::Small(w),
                None => Int::Big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::norm(-b),
        }
    }

    pub fn add_assign(&mut self, o: &Int) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, o) {
            if let Some(v) = a.checked_add(*b) {
                *self = Int::Small(v);
                return;
            }
        }
        *self = Int::add(self, o);
    }

    /// `self += a * b`.
    pub fn add_mul(&mut self, a: &Int, b: &Int) {
        if let (Int::Small(s), Int::Small(x), Int::Small(y)) = (&*self, a, b) {
            if let Some(v) = x.checked_mul(*y).and_then(|p| s.checked_add(p)) {
                *self = Int::Small(v);
                return;
            }
        }
        *self = Int::add(self, &Int::mul(a, b));
    }

    /// Exact quotient, or `None` when `o` does not divide `self`.
    pub fn div_exact(&self, o: &Int) -> Option<Int> {
        match (self, o) {
            (_, Int::Small(0)) => None,
            (Int::Small(a), Int::Small(b)) => {
                if *b == -1 {
                    return Some(self.neg());
                }
                (a % b == 0).then(|| Int::Small(a / b))
            }
            _ => {
                let (q, r) = self.to_bigint().div_rem(&o.to_bigint());
                r.is_zero().then(|| Int::norm(q))
            }
        }
    }

    pub fn gcd(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) if *a != i128::MIN && *b != i128::MIN => {
                let (mut x, mut y) = (a.abs(), b.abs());
                while y != 0 {
                    let t = x % y;
                    x = y;
                    y = t;
                }
                Int::Small(x)
            }
            _ => Int::norm(self.to_bigint().gcd(&o.to_bigint())),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Int {
        Int::Small(v as i128)
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Int {
        Int::norm(b)
    }
}

impl From<&BigInt> for Int {
    fn from(b: &BigInt) -> Int {
        Int::norm(b.clone())
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
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

/// Splits a rational into `(numerator, denominator)` as `Int`s.
pub fn split_rational(r: &Rational) -> (Int, Int) {
    (Int::from(r.numer()), Int::from(r.denom()))
}

pub fn lcm_all<'a>(items: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    items.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Int::Small(i128::MAX);
        let s = big.add(&Int::ONE);
        assert!(matches!(s, Int::Big(_)));
        assert_eq!(s.sub(&Int::ONE), Int::Small(i128::MAX));
        let p = big.mul(&Int::Small(4));
        assert_eq!(p.div_exact(&Int::Small(4)), Some(Int::Small(i128::MAX)));
        assert_eq!(Int::Small(7).div_exact(&Int::Small(2)), None);
        let mut acc = Int::Small(i128::MAX - 1);
        acc.add_mul(&Int::Small(2), &Int::Small(3));
        assert_eq!(acc.to_bigint(), BigInt::from(i128::MAX) + 5);
        assert_eq!(Int::Small(12).gcd(&Int::Small(-18)), Int::Small(6));
    }
}
