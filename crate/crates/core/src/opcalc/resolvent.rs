//! `Q_{c,s}(T)`, its inverse powers and the resolvent operators built from them.

use crate::clifford::Paravector;
use crate::error::{Error, Result};
use crate::kernels::KernelSpec;
use crate::plane::{Plane, PlaneElt};
use crate::scalar::{Rational, Scalar};
use crate::special::{binom, gamma, h_poly, p_poly, sce_exponent, AxialPoly, BlockKind, KernelTerm};
use crate::Side;

use super::matrix::{CliffordMatrix, Mat, PlaneMatrix};
use super::operator::CommutingParavectorOp;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ResolventKind {
    SLeft,
    K1L { nu: u32, ell: u32 },
    K2 { nu: u32, ell: u32 },
    D { beta: u32, m: u32 },
    Dbar { beta: u32, m: u32 },
    F,
}

impl ResolventKind {
    /// The resolvent as a combination of `K1`/`K2` blocks for dimension `n`.
    pub fn terms(&self, n: u32) -> Result<Vec<KernelTerm>> {
        let one = |block, nu, ell, coeff| vec![KernelTerm { block, nu, ell, coeff }];
        Ok(match *self {
            ResolventKind::SLeft => one(BlockKind::K1, 0, 1, Rational::from_integer(1.into())),
            ResolventKind::K1L { nu, ell } => one(BlockKind::K1, nu, ell, Rational::from_integer(1.into())),
            ResolventKind::K2 { nu, ell } => one(BlockKind::K2, nu, ell, Rational::from_integer(1.into())),
            ResolventKind::D { beta, m } => KernelSpec::new(n, Side::D, beta, m)?.terms()?,
            ResolventKind::Dbar { beta, m } => KernelSpec::new(n, Side::Dbar, beta, m)?.terms()?,
            ResolventKind::F => {
                let h = sce_exponent(n)?;
                one(BlockKind::K1, 0, h + 1, gamma(h, h)?)
            }
        })
    }
}

/// `Q_{c,s}(T)` as a matrix over the plane of `s`.
fn qc_plane<S: Scalar>(plane: &Plane<S>, zs: &PlaneElt<S>, t: &CommutingParavectorOp<S>) -> PlaneMatrix<S> {
    let id = PlaneMatrix::identity(t.d);
    let s2 = id.scale(plane, &plane.mul(zs, zs));
    let two_s_t0 = PlaneMatrix::from_real(t.t0()).scale(plane, &zs.scale(&S::from_i64(2)));
    s2.sub(&two_s_t0).add(&PlaneMatrix::from_real(&t.norm_sq_mat()))
}

/// `s^2 I - s (T + T̄) + T T̄`.
pub fn qc_op<S: Scalar>(s: &Paravector<S>, t: &CommutingParavectorOp<S>) -> Result<CliffordMatrix<S>> {
    check_dim(s, t)?;
    let (plane, zs) = Plane::of(s);
    Ok(qc_plane(&plane, &zs, t).to_clifford(&plane))
}

/// `|det Q_{c,s}(T)|`, computed in the plane of `s`.
pub fn qc_det_abs<S: Scalar>(s: &Paravector<S>, t: &CommutingParavectorOp<S>) -> Result<f64> {
    check_dim(s, t)?;
    let (plane, zs) = Plane::of(s);
    let (_, det) = qc_plane(&plane, &zs, t).inverse_det(&plane);
    Ok(plane.norm_sq(&det).to_f64().sqrt())
}

/// Resolvent data at one `s`: the plane of `s`, `Q^{-1}`, `sI - T_0` and `sI - T̄`.
pub struct OperatorPoint<S: Scalar> {
    plane: Plane<S>,
    q_inv: PlaneMatrix<S>,
    s_minus_t0: PlaneMatrix<S>,
    s_minus_tbar: CliffordMatrix<S>,
    pub det_abs: f64,
}

impl<S: Scalar> OperatorPoint<S> {
    pub fn new(s: &Paravector<S>, t: &CommutingParavectorOp<S>) -> Result<Self> {
        check_dim(s, t)?;
        let (plane, zs) = Plane::of(s);
        let q = qc_plane(&plane, &zs, t);
        let (inv, det) = q.inverse_det(&plane);
        let det_abs = plane.norm_sq(&det).to_f64().sqrt();
        let q_inv = inv.ok_or(Error::SpectralSingularity { det: det_abs })?;
        let s_id = PlaneMatrix::identity(t.d).scale(&plane, &zs);
        let s_minus_t0 = s_id.sub(&PlaneMatrix::from_real(t.t0()));
        let s_minus_tbar = s_id.to_clifford(&plane).sub(&t.conj_clifford());
        Ok(OperatorPoint { plane, q_inv, s_minus_t0, s_minus_tbar, det_abs })
    }

    /// `Q^{-l}(T)`.
    pub fn q_inv_pow(&self, ell: u32) -> CliffordMatrix<S> {
        self.q_inv.pow(&self.plane, ell).to_clifford(&self.plane)
    }

    fn k2_plane(&self, nu: u32, ell: u32) -> PlaneMatrix<S> {
        let p = &self.plane;
        self.s_minus_t0.pow(p, nu).mul(p, &self.q_inv.pow(p, ell))
    }

    /// `(sI - T̄) A + B` with `A`, `B` the `K1` and `K2` parts of the combination.
    pub fn combination(&self, terms: &[KernelTerm]) -> CliffordMatrix<S> {
        let d = self.q_inv.d;
        let mut a = PlaneMatrix::zeros(d);
        let mut b = PlaneMatrix::zeros(d);
        for t in terms {
            let v = self.k2_plane(t.nu, t.ell).scale_real(&S::from_rational(&t.coeff));
            match t.block {
                BlockKind::K1 => a = a.add(&v),
                BlockKind::K2 => b = b.add(&v),
            }
        }
        self.s_minus_tbar.mul(&a.to_clifford(&self.plane)).add(&b.to_clifford(&self.plane))
    }
}

/// `Q_{c,s}(T)^{-l}`.
pub fn qc_op_inv_pow<S: Scalar>(s: &Paravector<S>, t: &CommutingParavectorOp<S>, ell: u32) -> Result<CliffordMatrix<S>> {
    Ok(OperatorPoint::new(s, t)?.q_inv_pow(ell))
}

/// Resolvent operator of the given kind at `s`.
pub fn resolvent<S: Scalar>(kind: &ResolventKind, s: &Paravector<S>, t: &CommutingParavectorOp<S>) -> Result<CliffordMatrix<S>> {
    let terms = kind.terms(t.n as u32)?;
    Ok(OperatorPoint::new(s, t)?.combination(&terms))
}

/// Powers `T^a` and `T̄^b` for substituting into `x`/`x̄` tables.
pub struct OperatorPowers<S: Scalar> {
    t: Vec<CliffordMatrix<S>>,
    tbar: Vec<CliffordMatrix<S>>,
    t0: Vec<Mat<S>>,
}

impl<S: Scalar> OperatorPowers<S> {
    pub fn new(op: &CommutingParavectorOp<S>) -> Self {
        let t = op.to_clifford();
        let tbar = op.conj_clifford();
        OperatorPowers {
            t: vec![CliffordMatrix::identity(op.d, op.n), t],
            tbar: vec![CliffordMatrix::identity(op.d, op.n), tbar],
            t0: vec![Mat::identity(op.d), op.t0().clone()],
        }
    }

    fn grow(v: &mut Vec<CliffordMatrix<S>>, k: usize) {
        while v.len() <= k {
            let next = v[v.len() - 1].mul(&v[1]);
            v.push(next);
        }
    }

    pub fn t_pow(&mut self, k: usize) -> &CliffordMatrix<S> {
        Self::grow(&mut self.t, k);
        &self.t[k]
    }

    pub fn tbar_pow(&mut self, k: usize) -> &CliffordMatrix<S> {
        Self::grow(&mut self.tbar, k);
        &self.tbar[k]
    }

    pub fn t0_pow(&mut self, k: usize) -> &Mat<S> {
        while self.t0.len() <= k {
            let next = self.t0[self.t0.len() - 1].mul(&self.t0[1]);
            self.t0.push(next);
        }
        &self.t0[k]
    }

    /// `Σ_j c_j T^a T̄^b`.
    pub fn eval(&mut self, p: &AxialPoly) -> CliffordMatrix<S> {
        let d = self.t[0].d;
        let n = self.t[0].n;
        let mut acc = CliffordMatrix::zeros(d, n);
        for term in &p.terms {
            let a = self.t_pow(term.x_exp as usize).clone();
            let b = self.tbar_pow(term.xbar_exp as usize);
            acc = acc.add(&a.mul(b).scale(&S::from_rational(&term.coeff)));
        }
        acc
    }
}

/// `p(T)` with `x ↦ T`, `x̄ ↦ T̄`.
pub fn axial_poly_op<S: Scalar>(p: &AxialPoly, t: &CommutingParavectorOp<S>) -> CliffordMatrix<S> {
    OperatorPowers::new(t).eval(p)
}

/// Coefficient of `s^{-κ-1}` in the expansion of a block combination at the operator `T`.
pub fn monomial_image_terms_op<S: Scalar>(terms: &[KernelTerm], kappa: u32, pw: &mut OperatorPowers<S>) -> CliffordMatrix<S> {
    let (d, n) = (pw.t[0].d, pw.t[0].n);
    let mut acc = CliffordMatrix::zeros(d, n);
    for t in terms {
        for j in 0..=t.nu {
            let k = kappa + t.nu - j;
            let poly = match t.block {
                BlockKind::K1 => p_poly(t.ell - 1, k),
                BlockKind::K2 => h_poly(t.ell, k),
            };
            if poly.terms.is_empty() {
                continue;
            }
            let sign = if j % 2 == 0 { S::one() } else { -S::one() };
            let c = S::from_rational(&(Rational::from_integer(binom(t.nu as i64, j as i64)) * &t.coeff)) * sign;
            let t0j = CliffordMatrix::from_real(&pw.t0_pow(j as usize).clone(), n);
            let pv = pw.eval(&poly);
            acc = acc.add(&t0j.mul(&pv).scale(&c));
        }
    }
    acc
}

fn check_dim<S: Scalar>(s: &Paravector<S>, t: &CommutingParavectorOp<S>) -> Result<()> {
    if s.n() != t.n {
        return Err(Error::DimensionMismatch(t.n, s.n()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::{cauchy_kernel, qc_inv_pow, CauchyForm};
    use crate::scalar::{rat, ratio};

    #[test]
    fn scalar_collapse() {
        let x = Paravector::new(rat(0), vec![rat(1), rat(0)]);
        let s = Paravector::real(2, rat(2));
        let t = CommutingParavectorOp::scalar(&x);
        assert_eq!(qc_op_inv_pow(&s, &t, 2).unwrap().get(0, 0), &qc_inv_pow(&s, &x, 2).unwrap());
        assert_eq!(resolvent(&ResolventKind::SLeft, &s, &t).unwrap().get(0, 0), &cauchy_kernel(&s, &x, CauchyForm::II).unwrap());
    }

    #[test]
    fn diagonal_entries() {
        let eigs = [Paravector::new(rat(1), vec![rat(2), rat(0)]), Paravector::real(2, rat(3))];
        let t = CommutingParavectorOp::diagonal(&eigs).unwrap();
        let s = Paravector::new(ratio(1, 2), vec![rat(0), rat(5)]);
        let r = resolvent(&ResolventKind::SLeft, &s, &t).unwrap();
        for (j, e) in eigs.iter().enumerate() {
            assert_eq!(r.get(j, j), &cauchy_kernel(&s, e, CauchyForm::II).unwrap());
        }
        assert!(r.get(0, 1).is_zero());
        let s_real = Paravector::real(2, rat(7));
        let q = qc_op(&s_real, &t).unwrap();
        assert!(q.entries.iter().all(|e| e.is_scalar()));
        let on_sphere = Paravector::new(rat(1), vec![rat(0), rat(2)]);
        assert!(matches!(qc_op_inv_pow(&on_sphere, &t, 1), Err(Error::SpectralSingularity { .. })));
    }

    #[test]
    fn polynomial_substitution() {
        let eigs = [Paravector::new(rat(1), vec![rat(2), rat(-1)]), Paravector::new(rat(-2), vec![rat(0), rat(1)])];
        let t = CommutingParavectorOp::diagonal(&eigs).unwrap();
        assert_eq!(axial_poly_op(&h_poly(3, 5), &t), CliffordMatrix::identity(2, 2));
        let two_t0 = CliffordMatrix::from_real(&t.t0().scale(&rat(2)), 2);
        assert_eq!(axial_poly_op(&h_poly(1, 2), &t), two_t0);
        let mut pw = OperatorPowers::new(&t);
        for (l, k) in [(1u32, 4u32), (2, 6), (1, 3)] {
            let lhs = pw.eval(&p_poly(l, k));
            let rhs = pw.eval(&h_poly(l + 1, k + 1)).sub(&t.conj_clifford().mul(&pw.eval(&h_poly(l + 1, k))));
            assert_eq!(lhs, rhs);
        }
    }
}
