//! Sparse multivariate polynomials with integer coefficients.
//!
//! Monomials pack one byte per variable into a `u128`, `x0` in the most significant
//! byte, so integer comparison is lexicographic order with `x0` leading.

use std::collections::{BTreeMap, HashMap};
use std::hash::{BuildHasherDefault, Hasher};

use crate::scalar::Rational;

use super::int::Int;

pub type Mono = u128;

pub const MAX_VARS: usize = 16;
const GUARD: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;

#[inline]
fn shift(var: usize) -> u32 {
    (8 * (MAX_VARS - 1 - var)) as u32
}

#[inline]
pub fn mono_exp(m: Mono, var: usize) -> u32 {
    ((m >> shift(var)) & 0xff) as u32
}

#[inline]
pub fn mono_var(var: usize, e: u32) -> Mono {
    assert!(e < 128, "exponent {e} too large");
    (e as u128) << shift(var)
}

pub fn mono_from_exps(exps: &[u32]) -> Mono {
    assert!(exps.len() <= MAX_VARS, "too many variables");
    exps.iter().enumerate().fold(0, |m, (i, &e)| m | mono_var(i, e))
}

pub fn mono_to_exps(m: Mono, nvars: usize) -> Vec<u32> {
    (0..nvars).map(|i| mono_exp(m, i)).collect()
}

#[inline]
pub fn mono_mul(a: Mono, b: Mono) -> Mono {
    let s = a + b;
    debug_assert!(s & GUARD == 0, "exponent overflow");
    if s & GUARD != 0 {
        panic!("monomial exponent overflow");
    }
    s
}

/// True when every exponent of `a` is at most the matching exponent of `b`.
#[inline]
pub fn mono_divides(a: Mono, b: Mono) -> bool {
    ((b | GUARD) - a) & GUARD == GUARD
}

pub fn mono_degree(m: Mono) -> u32 {
    (0..MAX_VARS).map(|i| mono_exp(m, i)).sum()
}

/// Multiplicative hasher for packed monomials.
#[derive(Default)]
pub struct MonoHasher(u64);

impl Hasher for MonoHasher {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for b in bytes {
            self.0 = (self.0.rotate_left(5) ^ *b as u64).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95);
        }
    }
    fn write_u128(&mut self, v: u128) {
        let x = (v as u64) ^ ((v >> 64) as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        self.0 = (x ^ (x >> 29)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        self.0 ^= self.0 >> 32;
    }
}

pub type MonoMap<V> = HashMap<Mono, V, BuildHasherDefault<MonoHasher>>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RealPoly {
    /// Sorted by monomial, no zero coefficients.
    terms: Vec<(Mono, Int)>,
}

impl RealPoly {
    pub fn zero() -> Self {
        RealPoly { terms: Vec::new() }
    }

    pub fn constant(c: Int) -> Self {
        Self::monomial(0, c)
    }

    pub fn one() -> Self {
        Self::constant(Int::ONE)
    }

    pub fn monomial(m: Mono, c: Int) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            RealPoly { terms: vec![(m, c)] }
        }
    }

    /// The variable `x_var`.
    pub fn var(var: usize) -> Self {
        Self::monomial(mono_var(var, 1), Int::ONE)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Mono, Int)>) -> Self {
        let mut map: MonoMap<Int> = MonoMap::default();
        for (m, c) in terms {
            map.entry(m).or_insert(Int::ZERO).add_assign(&c);
        }
        Self::from_map(map)
    }

    fn from_map(map: MonoMap<Int>) -> Self {
        let mut terms: Vec<(Mono, Int)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| t.0);
        RealPoly { terms }
    }

    pub fn terms(&self) -> &[(Mono, Int)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Mono, Int)> {
        self.terms.last()
    }

    pub fn neg(&self) -> Self {
        RealPoly { terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn scale(&self, k: &Int) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        RealPoly { terms: self.terms.iter().map(|(m, c)| (*m, c.mul(k))).collect() }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, if negate { b[j].1.neg() } else { b[j].1.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| (*m, if negate { c.neg() } else { c.clone() })));
        RealPoly { terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (big, small) = if self.len() >= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return RealPoly { terms: big.terms.iter().map(|(bm, bc)| (mono_mul(*bm, *m), bc.mul(c))).collect() };
        }
        let mut map: MonoMap<Int> = MonoMap::default();
        map.reserve(big.len() * 2);
        for (sm, sc) in &small.terms {
            for (bm, bc) in &big.terms {
                map.entry(mono_mul(*sm, *bm)).or_insert(Int::ZERO).add_mul(sc, bc);
            }
        }
        Self::from_map(map)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Self {
        let unit = mono_var(var, 1);
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let e = mono_exp(*m, var);
                (e > 0).then(|| (*m - unit, c.mul(&Int::Small(e as i128))))
            })
            .collect();
        RealPoly { terms }
    }

    /// Exact quotient by `d`, or `None` if `d` does not divide `self` over the integers.
    ///
    /// For a primitive divisor this coincides with divisibility over the rationals.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (lm, lc) = d.leading()?.clone();
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut rem: BTreeMap<Mono, Int> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !mono_divides(lm, m) {
                return None;
            }
            let qc = c.div_exact(&lc)?;
            let qm = m - lm;
            for (dm, dc) in d.terms.iter().rev().skip(1) {
                let key = mono_mul(qm, *dm);
                let entry = rem.entry(key).or_insert(Int::ZERO);
                *entry = entry.sub(&qc.mul(dc));
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.push((qm, qc));
        }
        quot.reverse();
        Some(RealPoly { terms: quot })
    }

    /// Greatest common divisor of the coefficients, sign taken from the leading term.
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        match self.leading() {
            Some((_, lc)) if lc.is_negative() => g.neg(),
            _ => g,
        }
    }

    /// Divides out the content so the leading coefficient is positive.
    pub fn primitive(&self) -> (Int, Self) {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return (Int::ONE, self.clone());
        }
        let terms = self.terms.iter().map(|(m, c)| (*m, c.div_exact(&g).expect("content divides"))).collect();
        (g, RealPoly { terms })
    }

    /// Sets the listed variables to zero.
    pub fn kill_vars(&self, vars: &[usize]) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| vars.iter().all(|&v| mono_exp(*m, v) == 0))
            .cloned()
            .collect();
        RealPoly { terms }
    }

    pub fn depends_on(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| mono_exp(*m, var) > 0)
    }

    pub fn max_exp(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| mono_exp(*m, var)).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &PointPowers) -> Rational {
        let mut acc = Rational::from_integer(0.into());
        for (m, c) in &self.terms {
            acc += point.monomial(*m) * c.to_rational();
        }
        acc
    }
}

/// Cached powers of a rational evaluation point.
pub struct PointPowers {
    powers: Vec<Vec<Rational>>,
}

impl PointPowers {
    pub fn new(point: &[Rational], max_exp: u32) -> Self {
        let powers = point
            .iter()
            .map(|x| {
                let mut v = vec![Rational::from_integer(1.into())];
                for k in 1..=max_exp as usize {
                    let next = &v[k - 1] * x;
                    v.push(next);
                }
                v
            })
            .collect();
        PointPowers { powers }
    }

    pub fn monomial(&self, m: Mono) -> Rational {
        let mut acc = Rational::from_integer(1.into());
        for (i, pw) in self.powers.iter().enumerate() {
            let e = mono_exp(m, i) as usize;
            if e > 0 {
                acc *= &pw[e];
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> RealPoly {
        RealPoly::var(i)
    }

    #[test]
    fn monomial_packing_orders_lexicographically() {
        let a = mono_from_exps(&[1, 0, 0]);
        let b = mono_from_exps(&[0, 5, 7]);
        assert!(a > b);
        assert!(mono_divides(b, mono_from_exps(&[2, 5, 9])));
        assert!(!mono_divides(b, mono_from_exps(&[2, 4, 9])));
        assert_eq!(mono_to_exps(mono_mul(a, b), 3), vec![1, 5, 7]);
    }

    #[test]
    fn arithmetic_and_division() {
        let p = x(0).add(&x(1)).add(&RealPoly::constant(Int::from(3)));
        let q = x(0).sub(&x(2).scale(&Int::from(2)));
        let pq = p.mul(&q);
        assert_eq!(pq.div_exact(&p), Some(q.clone()));
        assert_eq!(pq.div_exact(&q), Some(p.clone()));
        assert_eq!(p.div_exact(&q), None);
        assert_eq!(pq.partial(1), q);
        let sq = p.pow(2);
        assert_eq!(sq.div_exact(&p).unwrap(), p);
    }

    #[test]
    fn content_and_primitive_part() {
        let p = x(0).scale(&Int::from(-6)).add(&RealPoly::constant(Int::from(4)));
        let (g, q) = p.primitive();
        assert_eq!(g, Int::from(-2));
        assert_eq!(q, x(0).scale(&Int::from(3)).sub(&RealPoly::constant(Int::from(2))));
    }
}
