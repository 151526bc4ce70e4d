//! Truncated expansions of the kernels in powers of `s^{-1}` with majorant tail bounds.

use crate::clifford::{Multivector, Paravector};
use crate::error::{Error, Result};
use crate::plane::{Plane, PlaneElt};
use crate::scalar::{Rational, Scalar};
use crate::special::{binom, h_poly, p_poly, BlockKind, KernelTerm};

use super::KernelSpec;

/// Relative safety margin applied to floating tail evaluations.
const TAIL_SAFETY: f64 = 1.0 + 1e-9;
/// Largest truncation order the bound inversion will consider.
pub const MAX_ORDER: u32 = 20_000;

#[derive(Clone, Debug, PartialEq)]
pub struct SeriesResult<S: Scalar> {
    pub value: Multivector<S>,
    pub order: u32,
    pub tail_bound: f64,
}

/// `Σ_{k>K} C(k, r) q^{k-r}`, summed in closed form.
pub fn tail_sum(r: u32, order: i64, q: f64) -> f64 {
    let k1 = (order.max(r as i64 - 1) + 1) as f64;
    let p = 1.0 - q;
    let mut acc = 0.0;
    let mut c = 1.0;
    for i in 0..=r {
        if i > 0 {
            c *= (k1 - (i - 1) as f64) / i as f64;
        }
        if c <= 0.0 {
            break;
        }
        acc += c * p.powi(i as i32) * q.powf(k1 - i as f64);
    }
    acc * p.powi(-(r as i32) - 1) * TAIL_SAFETY
}

fn ratio<S: Scalar>(s: &Paravector<S>, x: &Paravector<S>) -> Result<(f64, f64)> {
    let (xs, ss) = (x.norm_sq(), s.norm_sq());
    let q = (xs.to_f64() / ss.to_f64()).sqrt();
    let d = ss.clone() - xs;
    if d.is_zero() || d.abs_val() != d {
        return Err(Error::SeriesDivergent { ratio: q });
    }
    Ok((q, ss.to_f64().sqrt()))
}

/// Powers `s^{-1}, s^{-2}, ...` in the plane of `s`.
struct InversePowers<S> {
    plane: Plane<S>,
    inv: PlaneElt<S>,
    cur: PlaneElt<S>,
}

impl<S: Scalar> InversePowers<S> {
    fn new(s: &Paravector<S>) -> Result<Self> {
        let (plane, z) = Plane::of(s);
        let inv = plane.inv(&z).map_err(|_| Error::ZeroParavector)?;
        Ok(InversePowers { plane, cur: inv.clone(), inv })
    }

    /// Returns the current power and advances to the next one.
    fn next(&mut self) -> Multivector<S> {
        let out = self.plane.to_mv(&self.cur);
        self.cur = self.plane.mul(&self.cur, &self.inv);
        out
    }
}

/// `Σ_{k=2l-1}^{K} H_l^k(x) s^{-k-1}` with the tail bound of the omitted terms.
pub fn series_q_inv_pow<S: Scalar>(s: &Paravector<S>, x: &Paravector<S>, ell: u32, order: u32) -> Result<SeriesResult<S>> {
    if ell < 1 {
        return Err(Error::OutOfRange("series needs l >= 1".into()));
    }
    let (q, sn) = ratio(s, x)?;
    let (xp, xz) = Plane::of(x);
    let mut pows = InversePowers::new(s)?;
    let mut value = Multivector::zero(s.n());
    for k in 0..=order {
        let sp = pows.next();
        if k + 1 >= 2 * ell {
            let h = h_poly(ell, k).eval_plane(&xp, &xz).re;
            value = &value + &sp.scale(&h);
        }
    }
    let r = 2 * ell - 1;
    let tail_bound = sn.powi(-(r as i32) - 1) * tail_sum(r, order as i64, q);
    Ok(SeriesResult { value, order, tail_bound })
}

/// Coefficient of `s^{-κ-1}` in the expansion of `Σ coeff * K_{ν,l}`, in the plane of `x`.
fn image_plane<S: Scalar>(terms: &[KernelTerm], kappa: u32, plane: &Plane<S>, z: &PlaneElt<S>) -> PlaneElt<S> {
    let mx0 = -z.re.clone();
    let mut acc = PlaneElt::zero();
    for t in terms {
        let mut inner = PlaneElt::zero();
        let mut x0p = S::one();
        for j in 0..=t.nu {
            let k = kappa + t.nu - j;
            let poly = match t.block {
                BlockKind::K1 => p_poly(t.ell - 1, k),
                BlockKind::K2 => h_poly(t.ell, k),
            };
            if !poly.terms.is_empty() {
                let c = S::from_rational(&Rational::from_integer(binom(t.nu as i64, j as i64)));
                inner = inner.add(&poly.eval_plane(plane, z).scale(&(c * x0p.clone())));
            }
            x0p = x0p * mx0.clone();
        }
        acc = acc.add(&inner.scale(&S::from_rational(&t.coeff)));
    }
    acc
}

/// `D^β Δ^m x^κ` (or the `D̄` version) at a paravector, read off the kernel expansion.
pub fn monomial_image_x<S: Scalar>(spec: &KernelSpec, kappa: u32, x: &Paravector<S>) -> Result<Multivector<S>> {
    let terms = spec.terms()?;
    let (plane, z) = Plane::of(x);
    Ok(plane.to_mv(&image_plane(&terms, kappa, &plane, &z)))
}

/// Majorant of the omitted part `Σ_{κ>K}` for a kernel combination.
fn kernel_tail(terms: &[KernelTerm], order: u32, q: f64, x0_abs: f64, sn: f64) -> f64 {
    let mut total = 0.0;
    for t in terms {
        let r = match t.block {
            BlockKind::K1 => 2 * t.ell - 2,
            BlockKind::K2 => 2 * t.ell - 1,
        };
        let coeff = t.coeff.to_f64().abs();
        let mut inner = 0.0;
        for j in 0..=t.nu {
            let c = Rational::from_integer(binom(t.nu as i64, j as i64)).to_f64();
            inner += c
                * x0_abs.powi(j as i32)
                * sn.powi(t.nu as i32 - j as i32 - r as i32 - 1)
                * tail_sum(r, order as i64 + t.nu as i64 - j as i64, q);
        }
        total += coeff * inner;
    }
    total * TAIL_SAFETY
}

/// `Σ_{κ≤K} M_κ(x) s^{-κ-1}` where `M_κ` is the image of `x^κ`.
pub fn series_kernel<S: Scalar>(spec: &KernelSpec, s: &Paravector<S>, x: &Paravector<S>, order: u32) -> Result<SeriesResult<S>> {
    let terms = spec.terms()?;
    let (q, sn) = ratio(s, x)?;
    let (xp, xz) = Plane::of(x);
    let mut pows = InversePowers::new(s)?;
    let mut value = Multivector::zero(s.n());
    for kappa in 0..=order {
        let sp = pows.next();
        let m = image_plane(&terms, kappa, &xp, &xz);
        if !m.is_zero() {
            value = &value + &(&xp.to_mv(&m) * &sp);
        }
    }
    let tail_bound = kernel_tail(&terms, order, q, x.x0.to_f64().abs(), sn);
    Ok(SeriesResult { value, order, tail_bound })
}

/// Smallest truncation order whose tail bound is at most `tol`.
pub fn series_order_for<S: Scalar>(spec: Option<&KernelSpec>, ell: u32, s: &Paravector<S>, x: &Paravector<S>, tol: f64) -> Result<u32> {
    let (q, sn) = ratio(s, x)?;
    let bound = |k: u32| -> Result<f64> {
        Ok(match spec {
            Some(sp) => kernel_tail(&sp.terms()?, k, q, x.x0.to_f64().abs(), sn),
            None => sn.powi(-2 * ell as i32) * tail_sum(2 * ell - 1, k as i64, q),
        })
    };
    let mut k = 0;
    while k <= MAX_ORDER {
        if bound(k)? <= tol {
            return Ok(k);
        }
        k += 1;
    }
    Err(Error::NonConvergent { delta: bound(MAX_ORDER)?, tolerance: tol })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::qc_inv_pow;
    use crate::scalar::rat;

    #[test]
    fn tail_matches_direct_sum() {
        for r in [0u32, 1, 3, 6] {
            for q in [0.25f64, 0.5, 0.75] {
                for k in [-1i64, 0, 5, 40] {
                    let direct: f64 = (k.max(-1) + 1..4000)
                        .filter(|&i| i >= r as i64)
                        .map(|i| binom(i, r as i64).to_string().parse::<f64>().unwrap() * q.powi((i - r as i64) as i32))
                        .sum();
                    let t = tail_sum(r, k, q);
                    assert!(t >= direct * (1.0 - 1e-12) && t <= direct * (1.0 + 3e-9), "r={r} q={q} k={k}: {t} vs {direct}");
                }
            }
        }
    }

    #[test]
    fn q_series_examples() {
        let s = Paravector::real(2, rat(2));
        let x = Paravector::along(2, rat(0), 1, rat(1));
        let res = series_q_inv_pow(&s, &x, 1, 40).unwrap();
        let exact = qc_inv_pow(&s, &x, 1).unwrap();
        assert!((&res.value - &exact).norm() <= res.tail_bound);
        assert!(res.tail_bound < 2f64.powi(-35));
        let zero = Paravector::real(2, Rational::from_integer(0.into()));
        let r0 = series_q_inv_pow(&s, &zero, 2, 10).unwrap();
        assert_eq!(r0.value, Multivector::scalar(2, crate::scalar::ratio(1, 16)));
        let far = Paravector::along(2, rat(0), 1, rat(3));
        assert!(matches!(series_q_inv_pow(&s, &far, 1, 10), Err(Error::SeriesDivergent { .. })));
    }
}
