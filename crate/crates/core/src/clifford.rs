//! Dense multivectors of the real Clifford algebra with `e_i^2 = -1`.
//!
//! Blade `e_A` is stored at the index whose set bits are `A` (bit `i-1` for `e_i`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar, ScalarKind};

/// Sign of `e_a * e_b` for blade bitmasks: `true` means negative.
///
/// Counts the transpositions needed to sort the concatenated index list and adds one
/// contraction sign per shared unit, since every `e_i^2 = -1`.
#[inline]
pub fn blade_sign_negative(a: usize, b: usize) -> bool {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let i = rest.trailing_zeros();
        swaps += (a >> (i + 1)).count_ones();
        rest &= rest - 1;
    }
    (swaps + (a & b).count_ones()) % 2 == 1
}

#[derive(Clone, PartialEq)]
pub struct Multivector<S> {
    n: usize,
    coeffs: Vec<S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(n: usize) -> Self {
        Multivector { n, coeffs: vec![S::zero(); 1 << n] }
    }

    pub fn scalar(n: usize, v: S) -> Self {
        let mut m = Self::zero(n);
        m.coeffs[0] = v;
        m
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, S::one())
    }

    /// The unit `e_i`, `1 <= i <= n`.
    pub fn unit(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "unit index {i} outside 1..={n}");
        Self::blade(n, 1 << (i - 1), S::one())
    }

    pub fn blade(n: usize, mask: usize, v: S) -> Self {
        let mut m = Self::zero(n);
        m.coeffs[mask] = v;
        m
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.len() != 1 << n {
            return Err(Error::DimensionMismatch(coeffs.len(), 1 << n));
        }
        Ok(Multivector { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, mask: usize) -> &S {
        &self.coeffs[mask]
    }

    pub fn set(&mut self, mask: usize, v: S) {
        self.coeffs[mask] = v;
    }

    pub fn scalar_part(&self) -> &S {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when only the grade-0 coefficient may be nonzero.
    pub fn is_scalar(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn is_paravector(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(b, c)| b.count_ones() <= 1 || c.is_zero())
    }

    pub fn scale(&self, k: &S) -> Self {
        Multivector { n: self.n, coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect() }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Multivector<T> {
        Multivector { n: self.n, coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Euclidean norm of the coefficient vector, in floating point.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.to_f64().powi(2)).sum::<f64>().sqrt()
    }

    pub fn to_f64(&self) -> Multivector<f64> {
        self.map(|c| c.to_f64())
    }

    /// Geometric product, rejecting operands from different algebras.
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let mut out = vec![S::zero(); self.coeffs.len()];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let p = ca.clone() * cb.clone();
                let slot = &mut out[a ^ b];
                if blade_sign_negative(a, b) {
                    *slot = slot.clone() - p;
                } else {
                    *slot = slot.clone() + p;
                }
            }
        }
        Ok(Multivector { n: self.n, coeffs: out })
    }

    /// `e_i * self` without a full product.
    pub fn left_unit_mul(&self, i: usize) -> Self {
        let u = 1usize << (i - 1);
        let mut out = vec![S::zero(); self.coeffs.len()];
        for (b, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out[u ^ b] = if blade_sign_negative(u, b) { -c.clone() } else { c.clone() };
        }
        Multivector { n: self.n, coeffs: out }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Grade-1 part as a coordinate vector `(x_1, ..., x_n)`.
    pub fn vector_part(&self) -> Vec<S> {
        (0..self.n).map(|i| self.coeffs[1 << i].clone()).collect()
    }

    /// Converts to a paravector when all higher grades vanish.
    pub fn to_paravector(&self) -> Option<Paravector<S>> {
        self.is_paravector().then(|| Paravector { x0: self.coeffs[0].clone(), xv: self.vector_part() })
    }

    pub fn to_json(&self) -> Value {
        json!({ "n": self.n, "coeffs": self.coeffs.iter().map(Scalar::to_json).collect::<Vec<_>>() })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let n = v["n"].as_u64().ok_or_else(|| Error::Parse("multivector: missing n".into()))? as usize;
        let arr = v["coeffs"].as_array().ok_or_else(|| Error::Parse("multivector: missing coeffs".into()))?;
        let coeffs = arr
            .iter()
            .map(|c| S::from_json(c).ok_or_else(|| Error::Parse(format!("bad coefficient {c}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(n, coeffs)
    }
}

impl Multivector<f64> {
    /// Sum of absolute coefficient values.
    pub fn norm_l1(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

use num_traits::Zero;

impl<S: Scalar> fmt::Debug for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (b, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if b == 0 {
                write!(f, "{c}")?;
            } else {
                let idx: Vec<String> = (0..self.n).filter(|i| b >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
                write!(f, "({c})e{}", idx.join(""))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<'a, S: Scalar> Mul for &'a Multivector<S> {
    type Output = Multivector<S>;
    fn mul(self, rhs: Self) -> Multivector<S> {
        self.geometric_product(rhs).expect("multivector dimension mismatch")
    }
}

impl<S: Scalar> Mul for Multivector<S> {
    type Output = Multivector<S>;
    fn mul(self, rhs: Self) -> Multivector<S> {
        &self * &rhs
    }
}

impl<'a, S: Scalar> Add for &'a Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: Self) -> Multivector<S> {
        assert_eq!(self.n, rhs.n, "multivector dimension mismatch");
        Multivector {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<S: Scalar> Add for Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: Self) -> Multivector<S> {
        &self + &rhs
    }
}

impl<'a, S: Scalar> Sub for &'a Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: Self) -> Multivector<S> {
        assert_eq!(self.n, rhs.n, "multivector dimension mismatch");
        Multivector {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<S: Scalar> Sub for Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: Self) -> Multivector<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        Multivector { n: self.n, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

/// A multivector of either scalar kind, as read from JSON.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyMultivector {
    Exact(Multivector<Rational>),
    Float(Multivector<f64>),
}

impl AnyMultivector {
    pub fn kind(&self) -> ScalarKind {
        match self {
            AnyMultivector::Exact(_) => ScalarKind::Rational,
            AnyMultivector::Float(_) => ScalarKind::Float,
        }
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (AnyMultivector::Exact(a), AnyMultivector::Exact(b)) => a.geometric_product(b).map(AnyMultivector::Exact),
            (AnyMultivector::Float(a), AnyMultivector::Float(b)) => a.geometric_product(b).map(AnyMultivector::Float),
            _ => Err(Error::KindMismatch),
        }
    }

    /// Exact when every coefficient is a string, float when every one is a number.
    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v["coeffs"].as_array().ok_or_else(|| Error::Parse("multivector: missing coeffs".into()))?;
        if arr.iter().all(Value::is_string) {
            Multivector::from_json(v).map(AnyMultivector::Exact)
        } else if arr.iter().all(Value::is_number) {
            Multivector::from_json(v).map(AnyMultivector::Float)
        } else {
            Err(Error::KindMismatch)
        }
    }
}

/// `x0 + x1 e1 + ... + xn en`.
#[derive(Clone, Debug, PartialEq)]
pub struct Paravector<S> {
    pub x0: S,
    pub xv: Vec<S>,
}

/// Slice coordinates `x = u + I v`; `unit` is `None` on the real axis.
#[derive(Clone, Debug, PartialEq)]
pub struct SliceTriple<S> {
    pub u: S,
    pub v: S,
    pub unit: Option<Vec<S>>,
}

impl<S: Scalar> SliceTriple<S> {
    pub fn reconstruct(&self) -> Paravector<S> {
        match &self.unit {
            Some(i) => Paravector { x0: self.u.clone(), xv: i.iter().map(|c| c.clone() * self.v.clone()).collect() },
            None => panic!("reconstruct needs the dimension on the real axis; use reconstruct_in"),
        }
    }

    pub fn reconstruct_in(&self, n: usize) -> Paravector<S> {
        match &self.unit {
            Some(_) => self.reconstruct(),
            None => Paravector::real(n, self.u.clone()),
        }
    }
}

impl<S: Scalar> Paravector<S> {
    pub fn new(x0: S, xv: Vec<S>) -> Self {
        Paravector { x0, xv }
    }

    pub fn real(n: usize, x0: S) -> Self {
        Paravector { x0, xv: vec![S::zero(); n] }
    }

    /// `x0 + v * e_i`.
    pub fn along(n: usize, x0: S, i: usize, v: S) -> Self {
        let mut p = Self::real(n, x0);
        p.xv[i - 1] = v;
        p
    }

    pub fn n(&self) -> usize {
        self.xv.len()
    }

    pub fn to_mv(&self) -> Multivector<S> {
        let mut m = Multivector::scalar(self.n(), self.x0.clone());
        for (i, c) in self.xv.iter().enumerate() {
            m.coeffs[1 << i] = c.clone();
        }
        m
    }

    pub fn conj(&self) -> Self {
        Paravector { x0: self.x0.clone(), xv: self.xv.iter().map(|c| -c.clone()).collect() }
    }

    pub fn vector_norm_sq(&self) -> S {
        self.xv.iter().fold(S::zero(), |acc, c| acc + c.clone() * c.clone())
    }

    pub fn norm_sq(&self) -> S {
        self.x0.clone() * self.x0.clone() + self.vector_norm_sq()
    }

    pub fn is_real(&self) -> bool {
        self.xv.iter().all(Zero::is_zero)
    }

    pub fn inverse(&self) -> Result<Self> {
        let r = self.norm_sq();
        if r.is_zero() {
            return Err(Error::ZeroParavector);
        }
        let c = self.conj();
        Ok(Paravector { x0: c.x0 / r.clone(), xv: c.xv.into_iter().map(|v| v / r.clone()).collect() })
    }

    pub fn add(&self, o: &Self) -> Self {
        Paravector {
            x0: self.x0.clone() + o.x0.clone(),
            xv: self.xv.iter().zip(&o.xv).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Paravector {
            x0: self.x0.clone() - o.x0.clone(),
            xv: self.xv.iter().zip(&o.xv).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }

    pub fn scale(&self, k: &S) -> Self {
        Paravector { x0: self.x0.clone() * k.clone(), xv: self.xv.iter().map(|c| c.clone() * k.clone()).collect() }
    }

    pub fn mul(&self, o: &Self) -> Multivector<S> {
        &self.to_mv() * &o.to_mv()
    }

    /// `x^k`; stays in `span{1, x_und}`.
    pub fn pow(&self, k: u32) -> Multivector<S> {
        self.to_mv().pow(k)
    }

    /// Slice decomposition `x = u + I v`. On the real axis the unit is left undefined.
    ///
    /// Exact scalars need a rational `|x_und|`; otherwise `IrrationalModulus` is returned.
    pub fn slice_decompose(&self) -> Result<SliceTriple<S>> {
        let vsq = self.vector_norm_sq();
        if vsq.is_zero() {
            return Ok(SliceTriple { u: self.x0.clone(), v: S::zero(), unit: None });
        }
        let v = vsq.sqrt_exact().ok_or_else(|| Error::IrrationalModulus(format!("sqrt({vsq})")))?;
        let unit = self.xv.iter().map(|c| c.clone() / v.clone()).collect();
        Ok(SliceTriple { u: self.x0.clone(), v, unit: Some(unit) })
    }

    pub fn to_f64(&self) -> Paravector<f64> {
        Paravector { x0: self.x0.to_f64(), xv: self.xv.iter().map(Scalar::to_f64).collect() }
    }

    pub fn to_json(&self) -> Value {
        json!({ "x0": self.x0.to_json(), "xv": self.xv.iter().map(Scalar::to_json).collect::<Vec<_>>() })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let x0 = S::from_json(&v["x0"]).ok_or_else(|| Error::Parse("paravector: bad x0".into()))?;
        let xv = v["xv"]
            .as_array()
            .ok_or_else(|| Error::Parse("paravector: missing xv".into()))?
            .iter()
            .map(|c| S::from_json(c).ok_or_else(|| Error::Parse(format!("paravector: bad component {c}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Paravector { x0, xv })
    }
}

/// Parses `"1+2e1-1/2e3"`-style paravector literals over `n` units.
pub fn parse_paravector(src: &str, n: usize) -> Result<Paravector<Rational>> {
    use crate::scalar::parse_rational;
    let mut p = Paravector::real(n, Rational::zero());
    let cleaned: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut cur = String::new();
    for (i, ch) in cleaned.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.is_empty() {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    if !cur.is_empty() {
        terms.push(cur);
    }
    for t in terms {
        let (coef, unit) = match t.find('e') {
            Some(pos) => (&t[..pos], Some(&t[pos + 1..])),
            None => (t.as_str(), None),
        };
        let c = match coef {
            "" | "+" => Rational::from_integer(1.into()),
            "-" => Rational::from_integer((-1).into()),
            s => parse_rational(s.trim_start_matches('+')).ok_or_else(|| Error::Parse(format!("bad term {t}")))?,
        };
        match unit {
            None => p.x0 += c,
            Some(u) => {
                let i: usize = u.parse().map_err(|_| Error::Parse(format!("bad unit in {t}")))?;
                if i == 0 || i > n {
                    return Err(Error::Parse(format!("unit e{i} outside 1..={n}")));
                }
                p.xv[i - 1] += c;
            }
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    fn e(n: usize, i: usize) -> Multivector<Rational> {
        Multivector::unit(n, i)
    }

    #[test]
    fn unit_products() {
        assert_eq!(&e(3, 1) * &e(3, 1), Multivector::scalar(3, rat(-1)));
        let e12 = Multivector::blade(3, 0b11, rat(1));
        assert_eq!(&e(3, 1) * &e(3, 2), e12);
        assert_eq!(&e(3, 2) * &e(3, 1), -e12);
    }

    #[test]
    fn paravector_basics() {
        let x = Paravector::along(2, rat(1), 1, rat(2));
        assert_eq!(x.mul(&x.conj()), Multivector::scalar(2, rat(5)));
        assert_eq!(x.conj(), Paravector::along(2, rat(1), 1, rat(-2)));
        assert_eq!(x.inverse().unwrap(), Paravector::along(2, ratio(1, 5), 1, ratio(-2, 5)));
        assert_eq!(Paravector::along(2, rat(0), 1, rat(1)).inverse().unwrap(), Paravector::along(2, rat(0), 1, rat(-1)));
        assert_eq!(Paravector::real(2, rat(0)).inverse(), Err(Error::ZeroParavector));
        let p = Paravector::along(2, rat(1), 1, rat(1));
        assert_eq!(p.pow(2), Multivector::unit(2, 1).scale(&rat(2)));
        assert_eq!(p.pow(0), Multivector::one(2));
    }

    #[test]
    fn slice_decomposition() {
        let t = Paravector::along(2, rat(1), 1, rat(2)).slice_decompose().unwrap();
        assert_eq!((t.u.clone(), t.v.clone()), (rat(1), rat(2)));
        assert_eq!(t.unit, Some(vec![rat(1), rat(0)]));
        let r = Paravector::real(2, rat(5)).slice_decompose().unwrap();
        assert!(r.unit.is_none() && r.v == rat(0));
        let q = Paravector::new(rat(0), vec![rat(3), rat(4)]);
        let t = q.slice_decompose().unwrap();
        assert_eq!(t.v, rat(5));
        assert_eq!(t.unit.clone().unwrap(), vec![ratio(3, 5), ratio(4, 5)]);
        assert_eq!(t.reconstruct(), q);
        assert!(matches!(
            Paravector::new(rat(0), vec![rat(1), rat(1)]).slice_decompose(),
            Err(Error::IrrationalModulus(_))
        ));
    }

    #[test]
    fn kinds_do_not_mix() {
        let a = AnyMultivector::Exact(Multivector::one(2));
        let b = AnyMultivector::Float(Multivector::one(2));
        assert_eq!(a.geometric_product(&b), Err(Error::KindMismatch));
        let c = AnyMultivector::Exact(Multivector::one(3));
        assert_eq!(a.geometric_product(&c), Err(Error::DimensionMismatch(2, 3)));
    }

    #[test]
    fn json_round_trip() {
        let m = Paravector::along(3, ratio(1, 2), 2, rat(-3)).to_mv();
        let v = m.to_json();
        assert_eq!(v["coeffs"][0], "1/2");
        assert_eq!(Multivector::<Rational>::from_json(&v).unwrap(), m);
        let f = m.to_f64();
        assert_eq!(Multivector::<f64>::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn literal_parsing() {
        let p = parse_paravector("1/2+e1-2e3", 3).unwrap();
        assert_eq!(p, Paravector::new(ratio(1, 2), vec![rat(1), rat(0), rat(-2)]));
        assert!(parse_paravector("e4", 3).is_err());
    }
}
