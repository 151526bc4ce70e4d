//! Binomials, factorials and Pochhammer symbols over exact rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{rat, Rational};

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn factorial_r(n: i64) -> Rational {
    assert!(n >= 0, "factorial of negative {n}");
    Rational::from_integer(factorial(n as u32))
}

/// `C(n, k)`, zero whenever `n < 0`, `k < 0` or `k > n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binom_r(n: i64, k: i64) -> Rational {
    Rational::from_integer(binom(n, k))
}

/// `a(a-1)...(a-b+1)/b!` for any integer `a`; zero for `b < 0`.
///
/// Unlike [`binom`] this keeps negative upper indices, e.g. `gbinom(-1, 1) = -1`.
pub fn gbinom(a: i64, b: i64) -> Rational {
    binom_top(&rat(a), b)
}

/// Generalized binomial `C(top, k)` with rational upper index.
pub fn binom_top(top: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * (top - rat(i)) / rat(i + 1);
    }
    acc
}

/// Rising factorial `(x)_k = x(x+1)...(x+k-1)`.
pub fn rising(x: &Rational, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| acc * (x + rat(i as i64)))
}

/// `(-h)_l = (-1)^l h!/(h-l)!` as an integer product.
pub fn pochhammer_neg(h: i64, l: i64) -> Result<Rational> {
    if h < 0 || l < 0 || l > h {
        return Err(Error::OutOfRange(format!("(-h)_l needs 0 <= l <= h, got h={h}, l={l}")));
    }
    Ok(rising(&rat(-h), l as u32))
}

pub fn pow2(e: i64) -> Rational {
    Rational::from_integer(BigInt::one() << e as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer_neg(2, 0).unwrap(), rat(1));
        assert_eq!(pochhammer_neg(2, 1).unwrap(), rat(-2));
        assert_eq!(pochhammer_neg(2, 2).unwrap(), rat(2));
        assert!(pochhammer_neg(2, 3).is_err());
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(-1, 0), BigInt::zero());
        assert_eq!(binom(3, 4), BigInt::zero());
        assert_eq!(gbinom(-1, 1), rat(-1));
        assert_eq!(gbinom(-1, 0), rat(1));
        assert_eq!(gbinom(4, -1), rat(0));
        assert_eq!(binom_top(&crate::scalar::ratio(3, 2), 1), crate::scalar::ratio(3, 2));
    }
}
