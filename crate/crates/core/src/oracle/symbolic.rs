//! Symbolic building blocks in `x` for a fixed rational paravector `s`.

use num_traits::One;

use crate::clifford::{Multivector, Paravector};
use crate::scalar::Rational;
use crate::special::AxialPoly;

use super::cpoly::CliffordPoly;
use super::int::{lcm_all, Int};
use super::poly::{mono_var, RealPoly};
use super::rational_fn::CliffordRationalFn;

/// `x = x0 + sum x_i e_i` as a polynomial.
pub fn x_poly(n: usize) -> CliffordPoly {
    let mut p = CliffordPoly::from_real(n, RealPoly::var(0));
    for i in 1..=n {
        p = p.add(&CliffordPoly::from_blade(n, 1 << (i - 1), RealPoly::var(i)));
    }
    p
}

pub fn xbar_poly(n: usize) -> CliffordPoly {
    x_poly(n).conj_paravector()
}

/// `|x|^2`.
pub fn norm_sq_poly(n: usize) -> RealPoly {
    RealPoly::from_terms((0..=n).map(|v| (mono_var(v, 2), Int::ONE)))
}

pub fn monomial_fn(n: usize, k: u32) -> CliffordRationalFn {
    CliffordRationalFn::polynomial(x_poly(n).pow(k), Rational::one())
}

pub fn xbar_fn(n: usize) -> CliffordRationalFn {
    CliffordRationalFn::polynomial(xbar_poly(n), Rational::one())
}

/// A single coordinate `x_i` as a function.
pub fn coordinate_fn(n: usize, i: usize) -> CliffordRationalFn {
    CliffordRationalFn::polynomial(CliffordPoly::from_real(n, RealPoly::var(i)), Rational::one())
}

/// `1 / |x|^(2l)`.
pub fn inv_norm_pow_fn(n: usize, l: u32) -> CliffordRationalFn {
    CliffordRationalFn::new(CliffordPoly::from_real(n, RealPoly::one()), Rational::one(), vec![(norm_sq_poly(n), l)])
}

/// `Σ c_j x^a x̄^b` as a polynomial function.
pub fn axial_poly_fn(p: &AxialPoly, n: usize) -> CliffordRationalFn {
    let l = lcm_all(p.terms.iter().map(|t| &t.coeff));
    let (x, xb) = (x_poly(n), xbar_poly(n));
    let mut xp = vec![CliffordPoly::from_real(n, RealPoly::one())];
    let mut xbp = xp.clone();
    let mut num = CliffordPoly::zero(n);
    for t in &p.terms {
        while xp.len() <= t.x_exp as usize {
            xp.push(xp[xp.len() - 1].mul(&x));
        }
        while xbp.len() <= t.xbar_exp as usize {
            xbp.push(xbp[xbp.len() - 1].mul(&xb));
        }
        let c = Int::from((&t.coeff * Rational::from_integer(l.clone())).to_integer());
        num = num.add(&xp[t.x_exp as usize].mul(&xbp[t.xbar_exp as usize]).scale(&c));
    }
    CliffordRationalFn::polynomial(num, Rational::new(1.into(), l))
}

/// `Q_{c,s}(x) = s^2 - 2 x0 s + |x|^2` and friends, with `s = s_int / L` cleared to integers.
pub struct SymbolicQ {
    n: usize,
    l: Int,
    s_int: CliffordPoly,
    q_int: CliffordPoly,
    /// `conj(Q)` numerator, or `1` when `s` is real and `Q` itself is the real factor.
    weight: CliffordPoly,
    /// Primitive real factor and the integer content: `|Q|^2 * L^4 = g p` (or `Q L^2 = g p`).
    factor: RealPoly,
    content: Int,
    real_s: bool,
}

impl SymbolicQ {
    pub fn new(s: &Paravector<Rational>) -> Self {
        let n = s.n();
        let mut comps = vec![s.x0.clone()];
        comps.extend(s.xv.iter().cloned());
        let l_big = lcm_all(comps.iter());
        let l = Int::from(l_big.clone());
        let lr = Rational::from_integer(l_big);
        let s_mv: Multivector<Rational> = s.to_mv().scale(&lr);
        let s_int = CliffordPoly::from_rational_terms(n, &[(0, s_mv)]).0;
        let x0 = CliffordPoly::from_real(n, RealPoly::var(0));
        // s'^2 - 2 L x0 s' + L^2 |x|^2
        let q_int = s_int
            .mul(&s_int)
            .sub(&x0.mul(&s_int).scale(&l.mul(&Int::from(2))))
            .add(&CliffordPoly::from_real(n, norm_sq_poly(n)).scale(&l.mul(&l)));
        let real_s = s.is_real();
        let (weight, raw) = if real_s {
            (CliffordPoly::from_real(n, RealPoly::one()), q_int.blade(0).clone())
        } else {
            let qbar = q_int.conj_paravector();
            let norm = q_int.mul(&qbar);
            (qbar, norm.blade(0).clone())
        };
        let (content, factor) = raw.primitive();
        SymbolicQ { n, l, s_int, q_int, weight, factor, content, real_s }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn l_rat(&self) -> Rational {
        self.l.to_rational()
    }

    /// `Q(x)` as a polynomial function.
    pub fn q_fn(&self) -> CliffordRationalFn {
        let l2 = self.l_rat() * self.l_rat();
        CliffordRationalFn::polynomial(self.q_int.clone(), Rational::one() / l2)
    }

    /// `Q^{-l}`, written as `conj(Q)^l / |Q|^(2l)` (or `1 / Q^l` for real `s`).
    pub fn q_inv_pow(&self, ell: u32) -> CliffordRationalFn {
        self.with_q_inv_pow(CliffordPoly::from_real(self.n, RealPoly::one()), Rational::one(), ell)
    }

    /// `left * Q^{-l}` for a polynomial `left` with value `scale * left`.
    pub fn with_q_inv_pow(&self, left: CliffordPoly, scale: Rational, ell: u32) -> CliffordRationalFn {
        let l2 = self.l_rat() * self.l_rat();
        // Q^{-1} = L^2 W / (g p) in both branches.
        let per = l2 / self.content.to_rational();
        let num = left.mul(&self.weight.pow(ell));
        CliffordRationalFn::new(num, scale * per.pow(ell as i32), vec![(self.factor.clone(), ell)])
    }

    /// `s - xbar` with its scale.
    pub fn s_minus_xbar(&self) -> (CliffordPoly, Rational) {
        let p = self.s_int.sub(&xbar_poly(self.n).scale(&self.l));
        (p, Rational::one() / self.l_rat())
    }

    /// `(s - x0)^nu` with its scale.
    pub fn s_minus_x0_pow(&self, nu: u32) -> (CliffordPoly, Rational) {
        let base = self.s_int.sub(&CliffordPoly::from_real(self.n, RealPoly::var(0)).scale(&self.l));
        (base.pow(nu), Rational::one() / self.l_rat().pow(nu as i32))
    }

    /// `S_L^{-1}(s, x) = (s - xbar) Q^{-1}`.
    pub fn cauchy(&self) -> CliffordRationalFn {
        let (p, sc) = self.s_minus_xbar();
        self.with_q_inv_pow(p, sc, 1)
    }

    /// `(s - xbar)(s - x0)^nu Q^{-l}`.
    pub fn k1(&self, nu: u32, ell: u32) -> CliffordRationalFn {
        let (a, sa) = self.s_minus_xbar();
        let (b, sb) = self.s_minus_x0_pow(nu);
        self.with_q_inv_pow(a.mul(&b), sa * sb, ell)
    }

    /// `(s - x0)^nu Q^{-l}`.
    pub fn k2(&self, nu: u32, ell: u32) -> CliffordRationalFn {
        let (b, sb) = self.s_minus_x0_pow(nu);
        self.with_q_inv_pow(b, sb, ell)
    }

    /// Form I: `-(x^2 - 2 x Re(s) + |s|^2)^{-1} (x - sbar)`, inverted paravector-wise.
    pub fn cauchy_form_one(&self) -> CliffordRationalFn {
        let n = self.n;
        let l = &self.l;
        let x = x_poly(n);
        let s0 = self.s_int.blade(0).clone();
        let s_norm = self.s_int.mul(&self.s_int.conj_paravector()).blade(0).clone();
        // L^2 R = (L x)^2 - 2 (L x) s0' + |s'|^2
        let lx = x.scale(l);
        let r_int = lx
            .mul(&lx)
            .sub(&lx.mul_real(&s0).scale(&Int::from(2)))
            .add(&CliffordPoly::from_real(n, s_norm));
        let x_minus_sbar = lx.sub(&self.s_int.conj_paravector());
        let r_bar = r_int.conj_paravector();
        let r_norm = r_int.mul(&r_bar).blade(0).clone();
        // R^{-1} = L^2 conj(R') / |R'|^2, (x - sbar) = (Lx - sbar')/L
        let num = r_bar.mul(&x_minus_sbar).neg();
        CliffordRationalFn::new(num, self.l_rat(), vec![(r_norm, 1)])
    }

    pub fn is_real(&self) -> bool {
        self.real_s
    }
}

pub fn build_cauchy_kernel_symbolic(s: &Paravector<Rational>) -> CliffordRationalFn {
    SymbolicQ::new(s).cauchy()
}
