//! Arithmetic in the commutative plane `span{1, w}` spanned by a fixed 1-vector `w`.
//!
//! With `w^2 = -|w|^2` every element is `re + im * w`; products never leave the plane, so
//! no square root of `|w|^2` is needed and the exact kind stays exact.

use crate::clifford::{Multivector, Paravector};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The plane generated by `w` with `w^2 = -wsq`.
#[derive(Clone, Debug, PartialEq)]
pub struct Plane<S> {
    pub w: Vec<S>,
    pub wsq: S,
}

/// `re + im * w`.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneElt<S> {
    pub re: S,
    pub im: S,
}

impl<S: Scalar> PlaneElt<S> {
    pub fn new(re: S, im: S) -> Self {
        PlaneElt { re, im }
    }

    pub fn real(re: S) -> Self {
        PlaneElt { re, im: S::zero() }
    }

    pub fn zero() -> Self {
        Self::real(S::zero())
    }

    pub fn one() -> Self {
        Self::real(S::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        PlaneElt { re: self.re.clone() + o.re.clone(), im: self.im.clone() + o.im.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        PlaneElt { re: self.re.clone() - o.re.clone(), im: self.im.clone() - o.im.clone() }
    }

    pub fn neg(&self) -> Self {
        PlaneElt { re: -self.re.clone(), im: -self.im.clone() }
    }

    pub fn scale(&self, k: &S) -> Self {
        PlaneElt { re: self.re.clone() * k.clone(), im: self.im.clone() * k.clone() }
    }

    pub fn conj(&self) -> Self {
        PlaneElt { re: self.re.clone(), im: -self.im.clone() }
    }
}

impl<S: Scalar> Plane<S> {
    pub fn new(w: Vec<S>) -> Self {
        let wsq = w.iter().fold(S::zero(), |acc, c| acc + c.clone() * c.clone());
        Plane { w, wsq }
    }

    /// The plane through a paravector's vector part, with the paravector as an element.
    pub fn of(x: &Paravector<S>) -> (Self, PlaneElt<S>) {
        (Plane::new(x.xv.clone()), PlaneElt::new(x.x0.clone(), S::one()))
    }

    pub fn n(&self) -> usize {
        self.w.len()
    }

    pub fn mul(&self, a: &PlaneElt<S>, b: &PlaneElt<S>) -> PlaneElt<S> {
        PlaneElt {
            re: a.re.clone() * b.re.clone() - self.wsq.clone() * a.im.clone() * b.im.clone(),
            im: a.re.clone() * b.im.clone() + a.im.clone() * b.re.clone(),
        }
    }

    /// `a * conj(a)`, a real number.
    pub fn norm_sq(&self, a: &PlaneElt<S>) -> S {
        a.re.clone() * a.re.clone() + self.wsq.clone() * a.im.clone() * a.im.clone()
    }

    pub fn inv(&self, a: &PlaneElt<S>) -> Result<PlaneElt<S>> {
        let d = self.norm_sq(a);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(PlaneElt { re: a.re.clone() / d.clone(), im: -a.im.clone() / d })
    }

    pub fn pow(&self, a: &PlaneElt<S>, k: u32) -> PlaneElt<S> {
        let mut acc = PlaneElt::one();
        let mut base = a.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Integer power; negative exponents invert first.
    pub fn powi(&self, a: &PlaneElt<S>, k: i64) -> Result<PlaneElt<S>> {
        if k >= 0 {
            Ok(self.pow(a, k as u32))
        } else {
            Ok(self.pow(&self.inv(a)?, (-k) as u32))
        }
    }

    pub fn to_mv(&self, a: &PlaneElt<S>) -> Multivector<S> {
        let mut m = Multivector::scalar(self.n(), a.re.clone());
        for (i, c) in self.w.iter().enumerate() {
            m.set(1 << i, a.im.clone() * c.clone());
        }
        m
    }

    pub fn to_paravector(&self, a: &PlaneElt<S>) -> Paravector<S> {
        Paravector::new(a.re.clone(), self.w.iter().map(|c| a.im.clone() * c.clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn matches_geometric_product() {
        let x = Paravector::new(rat(1), vec![rat(2), rat(-1), rat(3)]);
        let (pl, z) = Plane::of(&x);
        for k in 0..6 {
            assert_eq!(pl.to_mv(&pl.pow(&z, k)), x.pow(k));
        }
        let zi = pl.inv(&z).unwrap();
        assert_eq!(pl.to_paravector(&zi), x.inverse().unwrap());
    }
}
