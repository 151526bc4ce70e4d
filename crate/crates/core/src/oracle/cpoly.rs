//! Polynomials in `x0..xn` with Clifford-algebra coefficients, stored blade by blade.

use num_traits::Zero;

use crate::clifford::{blade_sign_negative, Multivector};
use crate::scalar::Rational;

use super::int::{lcm_all, Int};
use super::poly::{Mono, PointPowers, RealPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordPoly {
    n: usize,
    blades: Vec<RealPoly>,
}

impl CliffordPoly {
    pub fn zero(n: usize) -> Self {
        CliffordPoly { n, blades: vec![RealPoly::zero(); 1 << n] }
    }

    pub fn from_real(n: usize, p: RealPoly) -> Self {
        Self::from_blade(n, 0, p)
    }

    pub fn from_blade(n: usize, mask: usize, p: RealPoly) -> Self {
        let mut c = Self::zero(n);
        c.blades[mask] = p;
        c
    }

    /// Builds an integer polynomial and a scale with `value = scale * poly`.
    pub fn from_rational_terms(n: usize, terms: &[(Mono, Multivector<Rational>)]) -> (Self, Rational) {
        let l = lcm_all(terms.iter().flat_map(|(_, mv)| mv.coeffs().iter()));
        let lr = Rational::from_integer(l.clone());
        let mut blades = vec![Vec::new(); 1 << n];
        for (m, mv) in terms {
            assert_eq!(mv.n(), n);
            for (b, c) in mv.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    let scaled = c * &lr;
                    blades[b].push((*m, Int::from(scaled.numer())));
                }
            }
        }
        let blades = blades.into_iter().map(RealPoly::from_terms).collect();
        (CliffordPoly { n, blades }, Rational::new(1.into(), l))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blade(&self, mask: usize) -> &RealPoly {
        &self.blades[mask]
    }

    pub fn blades(&self) -> &[RealPoly] {
        &self.blades
    }

    pub fn is_zero(&self) -> bool {
        self.blades.iter().all(RealPoly::is_zero)
    }

    pub fn term_count(&self) -> usize {
        self.blades.iter().map(RealPoly::len).sum()
    }

    fn zip(&self, o: &Self, f: impl Fn(&RealPoly, &RealPoly) -> RealPoly) -> Self {
        assert_eq!(self.n, o.n, "clifford polynomial dimension mismatch");
        CliffordPoly { n: self.n, blades: self.blades.iter().zip(&o.blades).map(|(a, b)| f(a, b)).collect() }
    }

    fn map(&self, f: impl Fn(&RealPoly) -> RealPoly) -> Self {
        CliffordPoly {
            n: self.n,
            blades: self.blades.iter().map(|b| if b.is_zero() { RealPoly::zero() } else { f(b) }).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, RealPoly::add)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, RealPoly::sub)
    }

    pub fn neg(&self) -> Self {
        self.map(RealPoly::neg)
    }

    pub fn scale(&self, k: &Int) -> Self {
        self.map(|b| b.scale(k))
    }

    pub fn mul_real(&self, p: &RealPoly) -> Self {
        self.map(|b| b.mul(p))
    }

    /// `e_i * self`.
    pub fn left_unit(&self, i: usize) -> Self {
        let u = 1usize << (i - 1);
        let mut blades = vec![RealPoly::zero(); self.blades.len()];
        for (b, p) in self.blades.iter().enumerate() {
            if !p.is_zero() {
                blades[u ^ b] = if blade_sign_negative(u, b) { p.neg() } else { p.clone() };
            }
        }
        CliffordPoly { n: self.n, blades }
    }

    /// Geometric product, coefficients multiplied in order.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "clifford polynomial dimension mismatch");
        let mut blades = vec![RealPoly::zero(); self.blades.len()];
        for (a, pa) in self.blades.iter().enumerate() {
            if pa.is_zero() {
                continue;
            }
            for (b, pb) in o.blades.iter().enumerate() {
                if pb.is_zero() {
                    continue;
                }
                let prod = pa.mul(pb);
                let slot = &mut blades[a ^ b];
                *slot = if blade_sign_negative(a, b) { slot.sub(&prod) } else { slot.add(&prod) };
            }
        }
        CliffordPoly { n: self.n, blades }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::from_real(self.n, RealPoly::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Negates the grade-1 coefficients, i.e. conjugation of a paravector-valued polynomial.
    pub fn conj_paravector(&self) -> Self {
        let blades = self
            .blades
            .iter()
            .enumerate()
            .map(|(b, p)| if b.count_ones() == 1 { p.neg() } else { p.clone() })
            .collect();
        CliffordPoly { n: self.n, blades }
    }

    pub fn partial(&self, var: usize) -> Self {
        self.map(|b| b.partial(var))
    }

    /// Divides every blade by a real polynomial, failing if any blade is not divisible.
    pub fn div_exact_real(&self, d: &RealPoly) -> Option<Self> {
        let mut blades = Vec::with_capacity(self.blades.len());
        for b in &self.blades {
            blades.push(if b.is_zero() { RealPoly::zero() } else { b.div_exact(d)? });
        }
        Some(CliffordPoly { n: self.n, blades })
    }

    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for b in &self.blades {
            for (_, c) in b.terms() {
                g = g.gcd(c);
                if g.is_one() {
                    return g;
                }
            }
        }
        g
    }

    pub fn div_int(&self, k: &Int) -> Self {
        self.map(|b| RealPoly::from_terms(b.terms().iter().map(|(m, c)| (*m, c.div_exact(k).expect("exact")))))
    }

    pub fn kill_vars(&self, vars: &[usize]) -> Self {
        self.map(|b| b.kill_vars(vars))
    }

    pub fn max_exp(&self, var: usize) -> u32 {
        self.blades.iter().map(|b| b.max_exp(var)).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &PointPowers) -> Multivector<Rational> {
        let coeffs = self.blades.iter().map(|b| b.eval(point)).collect();
        Multivector::from_coeffs(self.n, coeffs).expect("blade count")
    }

    /// Monomials with their multivector coefficients, sorted by monomial.
    pub fn terms(&self) -> Vec<(Mono, Multivector<Rational>)> {
        let mut map = std::collections::BTreeMap::<Mono, Multivector<Rational>>::new();
        for (b, p) in self.blades.iter().enumerate() {
            for (m, c) in p.terms() {
                map.entry(*m).or_insert_with(|| Multivector::zero(self.n)).set(b, c.to_rational());
            }
        }
        map.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::poly::mono_from_exps;
    use crate::scalar::{rat, ratio};

    #[test]
    fn rational_terms_clear_denominators() {
        let mv = Multivector::from_coeffs(1, vec![ratio(1, 2), ratio(2, 3)]).unwrap();
        let (p, s) = CliffordPoly::from_rational_terms(1, &[(mono_from_exps(&[1, 0]), mv.clone())]);
        assert_eq!(s, ratio(1, 6));
        let back = &p.terms()[0].1;
        assert_eq!(back.scale(&s), mv);
    }

    #[test]
    fn unit_left_multiplication_matches_product() {
        let x1 = CliffordPoly::from_blade(2, 0b10, RealPoly::var(1));
        let e1 = CliffordPoly::from_blade(2, 0b01, RealPoly::one());
        assert_eq!(x1.left_unit(1), e1.mul(&x1));
        let sq = e1.mul(&e1);
        assert_eq!(sq, CliffordPoly::from_real(2, RealPoly::constant(Int::from(-1))));
        let _ = rat(0);
    }
}
