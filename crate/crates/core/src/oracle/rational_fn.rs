//! Clifford-valued rational functions with real denominators, and the differential
//! operators acting on them from the left.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::clifford::{Multivector, Paravector};
use crate::error::{Error, Result};
use crate::scalar::Rational;
use crate::Side;

use super::cpoly::CliffordPoly;
use super::int::{split_rational, Int};
use super::poly::{mono_to_exps, PointPowers, RealPoly};

/// One letter of an operator word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    D,
    Dbar,
    Lap,
}

/// Letters are applied in sequence order: the first letter acts first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OperatorWord(pub Vec<Letter>);

impl OperatorWord {
    /// `Lap^m` followed by `side^beta`.
    pub fn dirac_laplace(beta: usize, m: usize, side: Side) -> Self {
        let letter = match side {
            Side::D => Letter::D,
            Side::Dbar => Letter::Dbar,
        };
        let mut w = vec![Letter::Lap; m];
        w.extend(std::iter::repeat(letter).take(beta));
        OperatorWord(w)
    }
}

/// `scale * num / prod(factor^exp)`.
///
/// Denominator factors are primitive integer polynomials with positive leading
/// coefficient. Cancellation against them is attempted after every operation but is
/// never needed for equality testing.
#[derive(Clone, Debug)]
pub struct CliffordRationalFn {
    n: usize,
    scale: Rational,
    num: CliffordPoly,
    den: Vec<(RealPoly, u32)>,
}

fn rmul_int(r: &Rational, k: &Int) -> Rational {
    r * Rational::from_integer(k.to_bigint())
}

fn expand(factors: &[(RealPoly, u32)]) -> RealPoly {
    factors.iter().fold(RealPoly::one(), |acc, (p, k)| acc.mul(&p.pow(*k)))
}

impl CliffordRationalFn {
    pub fn polynomial(num: CliffordPoly, scale: Rational) -> Self {
        Self::new(num, scale, Vec::new())
    }

    pub fn new(num: CliffordPoly, scale: Rational, den: Vec<(RealPoly, u32)>) -> Self {
        let mut f = CliffordRationalFn { n: num.n(), scale, num, den: Vec::new() };
        for (p, k) in den {
            f.push_factor(p, k);
        }
        f.reduce()
    }

    pub fn zero(n: usize) -> Self {
        Self::polynomial(CliffordPoly::zero(n), Rational::one())
    }

    pub fn constant(c: &Multivector<Rational>) -> Self {
        let (p, s) = CliffordPoly::from_rational_terms(c.n(), &[(0, c.clone())]);
        Self::polynomial(p, s)
    }

    fn push_factor(&mut self, p: RealPoly, k: u32) {
        if k == 0 {
            return;
        }
        assert!(!p.is_zero(), "zero denominator factor");
        let (g, prim) = p.primitive();
        if !g.is_one() {
            let gk = Rational::from_integer(g.to_bigint()).pow(k as i32);
            self.scale = &self.scale / gk;
        }
        if prim.len() == 1 && prim.terms()[0].0 == 0 {
            return;
        }
        match self.den.iter_mut().find(|(q, _)| *q == prim) {
            Some((_, e)) => *e += k,
            None => self.den.push((prim, k)),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn numerator(&self) -> &CliffordPoly {
        &self.num
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn den_factors(&self) -> &[(RealPoly, u32)] {
        &self.den
    }

    pub fn den_poly(&self) -> RealPoly {
        expand(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero() || self.scale.is_zero()
    }

    /// Cancels denominator factors that divide the numerator and pulls out the integer content.
    pub fn reduce(mut self) -> Self {
        if self.is_zero() {
            return CliffordRationalFn { n: self.n, scale: Rational::one(), num: CliffordPoly::zero(self.n), den: Vec::new() };
        }
        for (p, k) in self.den.iter_mut() {
            while *k > 0 {
                match self.num.div_exact_real(p) {
                    Some(q) => {
                        self.num = q;
                        *k -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|(_, k)| *k > 0);
        let g = self.num.content();
        if !g.is_one() && !g.is_zero() {
            self.num = self.num.div_int(&g);
            self.scale = rmul_int(&self.scale, &g);
        }
        self
    }

    fn with_num(&self, num: CliffordPoly, den: Vec<(RealPoly, u32)>) -> Self {
        CliffordRationalFn { n: self.n, scale: self.scale.clone(), num, den }
    }

    pub fn neg(&self) -> Self {
        self.with_num(self.num.neg(), self.den.clone())
    }

    pub fn scale_by(&self, k: &Rational) -> Self {
        CliffordRationalFn { n: self.n, scale: &self.scale * k, num: self.num.clone(), den: self.den.clone() }.reduce()
    }

    /// Numerators of both operands over a shared denominator.
    fn common(&self, o: &Self) -> (CliffordPoly, CliffordPoly, Vec<(RealPoly, u32)>) {
        let mut den = self.den.clone();
        for (p, k) in &o.den {
            match den.iter_mut().find(|(q, _)| q == p) {
                Some((_, e)) => *e = (*e).max(*k),
                None => den.push((p.clone(), *k)),
            }
        }
        let lift = |f: &Self| {
            let missing: Vec<(RealPoly, u32)> = den
                .iter()
                .map(|(p, k)| {
                    let have = f.den.iter().find(|(q, _)| q == p).map_or(0, |(_, e)| *e);
                    (p.clone(), k - have)
                })
                .filter(|(_, k)| *k > 0)
                .collect();
            if missing.is_empty() {
                f.num.clone()
            } else {
                f.num.mul_real(&expand(&missing))
            }
        };
        (lift(self), lift(o), den)
    }

    fn combine(&self, o: &Self, negate: bool) -> Self {
        assert_eq!(self.n, o.n, "rational function dimension mismatch");
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { o.neg() } else { o.clone() };
        }
        let (na, nb, den) = self.common(o);
        let (pa, qa) = (self.scale.numer(), self.scale.denom());
        let (pb, qb) = (o.scale.numer(), o.scale.denom());
        let g = pa.gcd(pb);
        let l = qa.lcm(qb);
        let ka = Int::from((pa / &g) * (&l / qa));
        let kb = Int::from((pb / &g) * (&l / qb));
        let (ta, tb) = (na.scale(&ka), nb.scale(&kb));
        let num = if negate { ta.sub(&tb) } else { ta.add(&tb) };
        CliffordRationalFn { n: self.n, scale: Rational::new(g, l), num, den }.reduce()
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    /// Geometric product; real denominators commute with everything.
    pub fn mul(&self, o: &Self) -> Self {
        let mut den = self.den.clone();
        for (p, k) in &o.den {
            match den.iter_mut().find(|(q, _)| q == p) {
                Some((_, e)) => *e += k,
                None => den.push((p.clone(), *k)),
            }
        }
        CliffordRationalFn { n: self.n, scale: &self.scale * &o.scale, num: self.num.mul(&o.num), den }.reduce()
    }

    /// Partial derivative in `x_var` without cancellation.
    fn partial_raw(&self, var: usize) -> Self {
        let dn = self.num.partial(var);
        let active: Vec<(usize, RealPoly)> = self
            .den
            .iter()
            .enumerate()
            .filter_map(|(i, (p, _))| {
                let dp = p.partial(var);
                (!dp.is_zero()).then_some((i, dp))
            })
            .collect();
        if active.is_empty() {
            return self.with_num(dn, self.den.clone());
        }
        let prod_except = |skip: Option<usize>| {
            active
                .iter()
                .filter(|(i, _)| Some(*i) != skip)
                .fold(RealPoly::one(), |acc, (i, _)| acc.mul(&self.den[*i].0))
        };
        let mut num = dn.mul_real(&prod_except(None));
        for (i, dp) in &active {
            let k = Int::from(self.den[*i].1 as i64);
            let w = dp.mul(&prod_except(Some(*i))).scale(&k);
            num = num.sub(&self.num.mul_real(&w));
        }
        let mut den = self.den.clone();
        for (i, _) in &active {
            den[*i].1 += 1;
        }
        self.with_num(num, den)
    }

    pub fn partial(&self, var: usize) -> Self {
        self.partial_raw(var).reduce()
    }

    /// `D f = sum_mu e_mu d_mu f` (left action), with the vector part negated for `Dbar`.
    pub fn dirac(&self, side: Side) -> Self {
        let mut acc = self.partial_raw(0);
        for i in 1..=self.n {
            let p = self.partial_raw(i);
            let term = p.with_num(p.num.left_unit(i), p.den.clone());
            acc = match side {
                Side::D => acc.combine_raw(&term, false),
                Side::Dbar => acc.combine_raw(&term, true),
            };
        }
        acc.reduce()
    }

    /// Addition over a common denominator when both operands share a scale; no cancellation.
    fn combine_raw(&self, o: &Self, negate: bool) -> Self {
        if self.scale != o.scale {
            return self.combine(o, negate);
        }
        let (na, nb, den) = self.common(o);
        let num = if negate { na.sub(&nb) } else { na.add(&nb) };
        self.with_num(num, den)
    }

    /// Laplacian in `x0..xn`.
    pub fn laplacian(&self) -> Self {
        if self.den.len() == 1 {
            return self.laplacian_single();
        }
        let mut acc = Self::zero(self.n);
        for v in 0..=self.n {
            acc = acc.add(&self.partial(v).partial(v));
        }
        acc
    }

    /// Quotient rule for `N / p^k`:
    /// `[(lap N p - 2k grad N . grad p - k N lap p) p + k(k+1) N |grad p|^2] / p^(k+2)`.
    fn laplacian_single(&self) -> Self {
        let (p, k) = &self.den[0];
        let kk = Int::from(*k as i64);
        let grads: Vec<RealPoly> = (0..=self.n).map(|v| p.partial(v)).collect();
        let lap_p = (0..=self.n).fold(RealPoly::zero(), |acc, v| acc.add(&grads[v].partial(v)));
        let grad_sq = grads.iter().fold(RealPoly::zero(), |acc, g| acc.add(&g.mul(g)));
        let mut lap_n = CliffordPoly::zero(self.n);
        let mut dot = CliffordPoly::zero(self.n);
        for v in 0..=self.n {
            let dv = self.num.partial(v);
            lap_n = lap_n.add(&dv.partial(v));
            if !grads[v].is_zero() {
                dot = dot.add(&dv.mul_real(&grads[v]));
            }
        }
        let inner = lap_n
            .mul_real(p)
            .sub(&dot.scale(&Int::from(2 * *k as i64)))
            .sub(&self.num.mul_real(&lap_p).scale(&kk));
        let num = inner
            .mul_real(p)
            .add(&self.num.mul_real(&grad_sq).scale(&Int::from((*k as i64) * (*k as i64 + 1))));
        self.with_num(num, vec![(p.clone(), k + 2)]).reduce()
    }

    pub fn apply_letter(&self, l: Letter) -> Self {
        match l {
            Letter::D => self.dirac(Side::D),
            Letter::Dbar => self.dirac(Side::Dbar),
            Letter::Lap => self.laplacian(),
        }
    }

    pub fn apply_word(&self, w: &OperatorWord) -> Self {
        w.0.iter().fold(self.clone(), |f, l| f.apply_letter(*l))
    }

    /// `side^beta (Lap^m f)`.
    pub fn apply_dirac_laplace(&self, beta: usize, m: usize, side: Side) -> Self {
        self.apply_word(&OperatorWord::dirac_laplace(beta, m, side))
    }

    /// Exact equality by cross-multiplication after cancelling shared factor powers.
    pub fn equal_rational(&self, o: &Self) -> bool {
        assert_eq!(self.n, o.n, "rational function dimension mismatch");
        let mut fa = self.den.clone();
        let mut fb = o.den.clone();
        for (p, ka) in fa.iter_mut() {
            if let Some((_, kb)) = fb.iter_mut().find(|(q, _)| q == p) {
                let m = (*ka).min(*kb);
                *ka -= m;
                *kb -= m;
            }
        }
        let (sa, qa) = split_rational(&self.scale);
        let (sb, qb) = split_rational(&o.scale);
        let lhs = self.num.mul_real(&expand(&fb)).scale(&sa.mul(&qb));
        let rhs = o.num.mul_real(&expand(&fa)).scale(&sb.mul(&qa));
        lhs == rhs
    }

    /// Substitutes `x1 = ... = xn = 0`.
    pub fn restrict_real_axis(&self) -> Result<Self> {
        let vars: Vec<usize> = (1..=self.n).collect();
        let mut den = Vec::new();
        for (p, k) in &self.den {
            let r = p.kill_vars(&vars);
            if r.is_zero() {
                return Err(Error::Pole);
            }
            den.push((r, *k));
        }
        Ok(Self::new(self.num.kill_vars(&vars), self.scale.clone(), den))
    }

    pub fn eval(&self, x: &Paravector<Rational>) -> Result<Multivector<Rational>> {
        assert_eq!(x.n(), self.n, "evaluation point dimension mismatch");
        let mut point = vec![x.x0.clone()];
        point.extend(x.xv.iter().cloned());
        let max_exp = (0..=self.n)
            .map(|v| self.num.max_exp(v).max(self.den.iter().map(|(p, _)| p.max_exp(v)).max().unwrap_or(0)))
            .max()
            .unwrap_or(0);
        let pw = PointPowers::new(&point, max_exp);
        let mut den = Rational::one();
        for (p, k) in &self.den {
            den *= p.eval(&pw).pow(*k as i32);
        }
        if den.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(&pw).scale(&(&self.scale / den)))
    }

    /// Numerator with the scale folded in, as rational multivector coefficients.
    pub fn numerator_terms(&self) -> Vec<(Vec<u32>, Multivector<Rational>)> {
        self.num
            .terms()
            .into_iter()
            .map(|(m, mv)| (mono_to_exps(m, self.n + 1), mv.scale(&self.scale)))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let num: Vec<Value> = self
            .numerator_terms()
            .into_iter()
            .map(|(e, mv)| json!({ "exp": e, "coeff": mv.to_json() }))
            .collect();
        let den: Vec<Value> = self
            .den_poly()
            .terms()
            .iter()
            .map(|(m, c)| json!({ "exp": mono_to_exps(*m, self.n + 1), "coeff": c.to_string() }))
            .collect();
        json!({ "n": self.n, "num": num, "den": den })
    }

    pub fn num_term_count(&self) -> usize {
        self.num.term_count()
    }
}

/// Checks that `f(u + I v) = A(u, v) + I B(u, v)` with the same `A`, `B` for two units.
pub fn axiality_check(
    f: &CliffordRationalFn,
    samples: &[(Rational, Rational)],
    i1: &[Rational],
    i2: &[Rational],
) -> Result<bool> {
    let parts = |unit: &[Rational], u: &Rational, v: &Rational| -> Result<(Multivector<Rational>, Multivector<Rational>)> {
        let plus = Paravector::new(u.clone(), unit.iter().map(|c| c * v).collect());
        let minus = Paravector::new(u.clone(), unit.iter().map(|c| -(c * v)).collect());
        let (fp, fm) = (f.eval(&plus)?, f.eval(&minus)?);
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let alpha = (&fp + &fm).scale(&half);
        let iu = Paravector::new(Rational::zero(), unit.to_vec()).to_mv();
        let beta = (&(-iu) * &(&fp - &fm)).scale(&half);
        Ok((alpha, beta))
    };
    for (u, v) in samples {
        if parts(i1, u, v)? != parts(i2, u, v)? {
            return Ok(false);
        }
    }
    Ok(true)
}
