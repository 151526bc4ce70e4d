//! The `H` and `P` polynomial families as coefficient tables in `x` and `x̄`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::clifford::{Multivector, Paravector};
use crate::error::{Error, Result};
use crate::plane::{Plane, PlaneElt};
use crate::scalar::{format_rational, rat, Rational, Scalar};
use crate::special::binom::binom_r;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum PolyKind {
    H,
    P,
}

/// `coeff * x^x_exp * x̄^xbar_exp`.
#[derive(Clone, Debug, PartialEq)]
pub struct AxialTerm {
    pub j: u32,
    pub coeff: Rational,
    pub x_exp: u32,
    pub xbar_exp: u32,
}

/// A finite sum `Σ_j c_j x^a x̄^b`; `x` and `x̄` commute, so this is a polynomial in the slice plane.
#[derive(Clone, Debug, PartialEq)]
pub struct AxialPoly {
    pub kind: PolyKind,
    pub ell: u32,
    pub k: u32,
    pub terms: Vec<AxialTerm>,
}

/// `C_j^k(l) = C(l+j-1, l-1) C(k-l-j, l-1)`.
pub fn coeff_c(k: i64, j: i64, l: i64) -> Result<Rational> {
    if l < 1 || j < 0 || j > k - 2 * l + 1 {
        return Err(Error::OutOfRange(format!("C_j^k(l) needs l >= 1 and 0 <= j <= k-2l+1, got k={k}, j={j}, l={l}")));
    }
    Ok(coeff_c_ext(k, j, l))
}

/// `C_j^k(l)` extended by zero outside its index range.
pub fn coeff_c_ext(k: i64, j: i64, l: i64) -> Rational {
    if l < 1 || j < 0 || j > k - 2 * l + 1 {
        return Rational::zero();
    }
    binom_r(l + j - 1, l - 1) * binom_r(k - l - j, l - 1)
}

/// `H_l^k`; the zero polynomial when `k < 2l - 1`.
pub fn h_poly(l: u32, k: u32) -> AxialPoly {
    let (li, ki) = (l as i64, k as i64);
    let top = ki - 2 * li + 1;
    let terms = if l == 0 || top < 0 {
        Vec::new()
    } else {
        (0..=top)
            .map(|j| AxialTerm {
                j: j as u32,
                coeff: coeff_c_ext(ki, j, li),
                x_exp: (top - j) as u32,
                xbar_exp: j as u32,
            })
            .collect()
    };
    AxialPoly { kind: PolyKind::H, ell: l, k, terms }
}

/// `P_l^k`; `P_0^k = x^k`, zero when `k < 2l`.
pub fn p_poly(l: u32, k: u32) -> AxialPoly {
    let (li, ki) = (l as i64, k as i64);
    let top = ki - 2 * li;
    let terms = if l == 0 {
        vec![AxialTerm { j: 0, coeff: Rational::one(), x_exp: k, xbar_exp: 0 }]
    } else if top < 0 {
        Vec::new()
    } else {
        (0..=top)
            .map(|j| AxialTerm {
                j: j as u32,
                coeff: binom_r(li + j - 1, li - 1) * binom_r(ki - li - j, li),
                x_exp: (top - j) as u32,
                xbar_exp: j as u32,
            })
            .collect()
    };
    AxialPoly { kind: PolyKind::P, ell: l, k, terms }
}

/// Clifford–Appell polynomial `(2h)!/k! P_h^k` with `h = (n-1)/2`.
pub fn clifford_appell(n: u32, k: u32) -> Result<AxialPoly> {
    if n % 2 == 0 {
        return Err(Error::OutOfRange(format!("Clifford–Appell polynomials need odd n, got {n}")));
    }
    let h = (n - 1) / 2;
    if k < 2 * h {
        return Err(Error::OutOfRange(format!("Clifford–Appell Q_n^k needs k >= {}, got {k}", 2 * h)));
    }
    let f = crate::special::binom::factorial_r(2 * h as i64) / crate::special::binom::factorial_r(k as i64);
    let mut p = p_poly(h, k);
    for t in &mut p.terms {
        t.coeff = &t.coeff * &f;
    }
    Ok(p)
}

impl AxialPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.coeff.is_zero())
    }

    pub fn coeff_sum(&self) -> Rational {
        self.terms.iter().map(|t| t.coeff.clone()).sum()
    }

    /// Value in the plane of `x`: `x = x0 + w`, `x̄ = x0 - w`.
    pub fn eval_plane<S: Scalar>(&self, plane: &Plane<S>, z: &PlaneElt<S>) -> PlaneElt<S> {
        let zb = z.conj();
        let max_a = self.terms.iter().map(|t| t.x_exp).max().unwrap_or(0);
        let max_b = self.terms.iter().map(|t| t.xbar_exp).max().unwrap_or(0);
        let pa = powers(plane, z, max_a);
        let pb = powers(plane, &zb, max_b);
        self.terms.iter().fold(PlaneElt::zero(), |acc, t| {
            let m = plane.mul(&pa[t.x_exp as usize], &pb[t.xbar_exp as usize]);
            acc.add(&m.scale(&S::from_rational(&t.coeff)))
        })
    }

    pub fn eval<S: Scalar>(&self, x: &Paravector<S>) -> Multivector<S> {
        let (plane, z) = Plane::of(x);
        plane.to_mv(&self.eval_plane(&plane, &z))
    }

    pub fn to_table(&self) -> XTable {
        let mut t = XTable::default();
        for term in &self.terms {
            t.add_term(term.x_exp as i32, term.xbar_exp as i32, term.coeff.clone());
        }
        t
    }

    /// CSV rows `l,k,j,C`.
    pub fn csv_rows(&self) -> Vec<String> {
        self.terms.iter().map(|t| format!("{},{},{},{}", self.ell, self.k, t.j, format_rational(&t.coeff))).collect()
    }
}

fn powers<S: Scalar>(plane: &Plane<S>, z: &PlaneElt<S>, max: u32) -> Vec<PlaneElt<S>> {
    let mut v = vec![PlaneElt::one()];
    for i in 0..max as usize {
        let next = plane.mul(&v[i], z);
        v.push(next);
    }
    v
}

/// Laurent polynomial in the commuting symbols `x`, `x̄`, keyed by `(exp of x, exp of x̄)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct XTable {
    terms: BTreeMap<(i32, i32), Rational>,
}

impl XTable {
    pub fn constant(c: Rational) -> Self {
        let mut t = XTable::default();
        t.add_term(0, 0, c);
        t
    }

    pub fn monomial(a: i32, b: i32, c: Rational) -> Self {
        let mut t = XTable::default();
        t.add_term(a, b, c);
        t
    }

    /// `2 x0 = x + x̄`.
    pub fn two_x0() -> Self {
        let mut t = Self::monomial(1, 0, rat(1));
        t.add_term(0, 1, rat(1));
        t
    }

    /// `|x|^2 = x x̄`.
    pub fn norm_sq() -> Self {
        Self::monomial(1, 1, rat(1))
    }

    pub fn add_term(&mut self, a: i32, b: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((a, b)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&(a, b), c) in &o.terms {
            r.add_term(a, b, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&rat(-1)))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut r = XTable::default();
        for (&(a, b), c) in &self.terms {
            r.add_term(a, b, c * k);
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = XTable::default();
        for (&(a, b), c) in &self.terms {
            for (&(a2, b2), c2) in &o.terms {
                r.add_term(a + a2, b + b2, c * c2);
            }
        }
        r
    }

    /// `∂/∂x0`, acting as `∂_x + ∂_x̄`.
    pub fn d_x0(&self) -> Self {
        let mut r = XTable::default();
        for (&(a, b), c) in &self.terms {
            if a != 0 {
                r.add_term(a - 1, b, c * rat(a as i64));
            }
            if b != 0 {
                r.add_term(a, b - 1, c * rat(b as i64));
            }
        }
        r
    }

    /// Value at a real-axis-free plane point, for spot checks.
    pub fn eval_plane<S: Scalar>(&self, plane: &Plane<S>, z: &PlaneElt<S>) -> Result<PlaneElt<S>> {
        let zb = z.conj();
        let mut acc = PlaneElt::zero();
        for (&(a, b), c) in &self.terms {
            let m = plane.mul(&plane.powi(z, a as i64)?, &plane.powi(&zb, b as i64)?);
            acc = acc.add(&m.scale(&S::from_rational(c)));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn small_tables() {
        let h = h_poly(2, 3);
        assert_eq!(h.terms.len(), 1);
        assert_eq!(h.terms[0].coeff, rat(1));
        let h = h_poly(1, 2);
        assert_eq!(h.to_table(), XTable::two_x0());
        let h = h_poly(2, 4);
        assert_eq!(h.terms.iter().map(|t| t.coeff.clone()).collect::<Vec<_>>(), vec![rat(2), rat(2)]);
        let p = p_poly(1, 2);
        assert_eq!(p.to_table(), XTable::constant(rat(1)));
        assert!(h_poly(3, 4).is_zero());
        assert_eq!(coeff_c(3, 0, 2).unwrap(), rat(1));
        assert!(coeff_c(3, 3, 1).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let x = Paravector::along(3, rat(1), 1, rat(2));
        assert_eq!(h_poly(1, 2).eval(&x), Multivector::scalar(3, rat(2)));
        let x = Paravector::along(3, rat(1), 2, rat(1));
        assert_eq!(h_poly(2, 4).eval(&x), Multivector::scalar(3, rat(4)));
        let x = Paravector::new(ratio(1, 3), vec![rat(2), ratio(-1, 2), rat(1)]);
        let v = h_poly(2, 7).eval(&x);
        assert!(v.is_scalar());
    }

    #[test]
    fn appell_examples() {
        assert_eq!(clifford_appell(3, 2).unwrap().to_table(), XTable::constant(rat(1)));
        assert_eq!(clifford_appell(5, 4).unwrap(), p_poly(2, 4));
        let q = clifford_appell(5, 7).unwrap();
        let p = p_poly(2, 7);
        for (a, b) in q.terms.iter().zip(&p.terms) {
            assert_eq!(&a.coeff * rat(7 * 6 * 5), b.coeff.clone());
        }
        assert!(clifford_appell(5, 3).is_err());
    }
}
