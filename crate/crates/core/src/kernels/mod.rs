//! Closed-form fine-structure kernels at paravector arguments.

pub mod series;
pub mod symbolic;

use crate::clifford::{Multivector, Paravector};
use crate::error::{Error, Result};
use crate::plane::{Plane, PlaneElt};
use crate::scalar::{Scalar, ScalarKind};
use crate::special::{coeff_family, gamma, sce_exponent, BlockKind, CoeffFamily, KernelTerm};
use crate::Side;

pub use series::{monomial_image_x, series_kernel, series_order_for, series_q_inv_pow, tail_sum, SeriesResult, MAX_ORDER};
pub use symbolic::{fit_bbar0, kernel_closed_form_symbolic, kernel_oracle};

/// Relative tolerance of the floating singular-sphere test.
pub const SPHERE_TOL: f64 = 1e-12;

/// `D^β Δ^m` (side `D`) or `D̄^β Δ^m` (side `Dbar`) applied to the Cauchy kernel in dimension `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct KernelSpec {
    pub n: u32,
    pub side: Side,
    pub beta: u32,
    pub m: u32,
}

impl KernelSpec {
    pub fn new(n: u32, side: Side, beta: u32, m: u32) -> Result<Self> {
        let spec = KernelSpec { n, side, beta, m };
        spec.family()?;
        Ok(spec)
    }

    pub fn h(&self) -> u32 {
        (self.n - 1) / 2
    }

    pub fn family(&self) -> Result<CoeffFamily> {
        let h = sce_exponent(self.n)?;
        coeff_family(self.side, self.beta, self.m, h)
    }

    pub fn terms(&self) -> Result<Vec<KernelTerm>> {
        Ok(self.family()?.kernel_terms())
    }

    /// Every admissible `(side, β, m)` for dimension `n`.
    pub fn all(n: u32) -> Vec<KernelSpec> {
        let h = (n.max(1) - 1) / 2;
        let mut out = Vec::new();
        for side in [Side::D, Side::Dbar] {
            for beta in 1..=h {
                for m in 0..=h - beta {
                    out.push(KernelSpec { n, side, beta, m });
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum CauchyForm {
    I,
    II,
}

/// Errors with `SingularSphere` when `x` lies on the sphere `[s]`.
pub fn check_sphere<S: Scalar>(s: &Paravector<S>, x: &Paravector<S>) -> Result<()> {
    let du = s.x0.to_f64() - x.x0.to_f64();
    let dv = s.vector_norm_sq().to_f64().sqrt() - x.vector_norm_sq().to_f64().sqrt();
    let distance = du.hypot(dv);
    let singular = match S::KIND {
        ScalarKind::Rational => s.x0 == x.x0 && s.vector_norm_sq() == x.vector_norm_sq(),
        ScalarKind::Float => distance <= SPHERE_TOL * s.norm_sq().to_f64().sqrt().max(1.0),
    };
    if singular {
        Err(Error::SingularSphere { distance })
    } else {
        Ok(())
    }
}

/// Left slice Cauchy kernel `S_L^{-1}(s, x)` in form I or form II.
pub fn cauchy_kernel<S: Scalar>(s: &Paravector<S>, x: &Paravector<S>, form: CauchyForm) -> Result<Multivector<S>> {
    same_dim(s, x)?;
    check_sphere(s, x)?;
    match form {
        CauchyForm::II => Ok(k_kernel(BlockKind::K1, s, x, 0, 1)?),
        CauchyForm::I => {
            // -(x^2 - 2 x Re(s) + |s|^2)^{-1} (x - sbar), all in the plane of x
            let (plane, z) = Plane::of(x);
            let r = plane
                .mul(&z, &z)
                .sub(&z.scale(&(S::from_i64(2) * s.x0.clone())))
                .add(&PlaneElt::real(s.norm_sq()));
            let rinv = plane.inv(&r).map_err(|_| Error::SingularSphere { distance: 0.0 })?;
            let left = plane.to_mv(&rinv.neg());
            Ok(&left * &x.sub(&s.conj()).to_mv())
        }
    }
}

/// Context for kernels at a fixed `(s, x)`: the plane of `s`, `Q`, `Q^{-1}` and `s - x0`.
pub struct KernelPoint<S> {
    plane: Plane<S>,
    q_inv: PlaneElt<S>,
    s_minus_x0: PlaneElt<S>,
    s_minus_xbar: Multivector<S>,
}

impl<S: Scalar> KernelPoint<S> {
    pub fn new(s: &Paravector<S>, x: &Paravector<S>) -> Result<Self> {
        same_dim(s, x)?;
        check_sphere(s, x)?;
        let (plane, zs) = Plane::of(s);
        let q = plane
            .mul(&zs, &zs)
            .sub(&zs.scale(&(S::from_i64(2) * x.x0.clone())))
            .add(&PlaneElt::real(x.norm_sq()));
        let q_inv = plane.inv(&q).map_err(|_| Error::SingularSphere { distance: 0.0 })?;
        let s_minus_x0 = zs.sub(&PlaneElt::real(x.x0.clone()));
        let s_minus_xbar = s.sub(&x.conj()).to_mv();
        Ok(KernelPoint { plane, q_inv, s_minus_x0, s_minus_xbar })
    }

    /// `(s - x0)^ν Q^{-l}`, an element of the plane of `s`.
    pub fn k2_plane(&self, nu: u32, ell: u32) -> PlaneElt<S> {
        let p = &self.plane;
        p.mul(&p.pow(&self.s_minus_x0, nu), &p.pow(&self.q_inv, ell))
    }

    pub fn block(&self, block: BlockKind, nu: u32, ell: u32) -> Multivector<S> {
        let k2 = self.plane.to_mv(&self.k2_plane(nu, ell));
        match block {
            BlockKind::K2 => k2,
            BlockKind::K1 => &self.s_minus_xbar * &k2,
        }
    }

    /// `Σ coeff * K`, grouping the `K1` terms behind one left factor `s - x̄`.
    pub fn combination(&self, terms: &[KernelTerm]) -> Multivector<S> {
        let mut a = PlaneElt::zero();
        let mut b = PlaneElt::zero();
        for t in terms {
            let v = self.k2_plane(t.nu, t.ell).scale(&S::from_rational(&t.coeff));
            match t.block {
                BlockKind::K1 => a = a.add(&v),
                BlockKind::K2 => b = b.add(&v),
            }
        }
        let left = &self.s_minus_xbar * &self.plane.to_mv(&a);
        &left + &self.plane.to_mv(&b)
    }
}

/// `Q_{c,s}(x)^{-l}`.
pub fn qc_inv_pow<S: Scalar>(s: &Paravector<S>, x: &Paravector<S>, ell: u32) -> Result<Multivector<S>> {
    if ell < 1 {
        return Err(Error::OutOfRange("qc_inv_pow needs l >= 1".into()));
    }
    Ok(KernelPoint::new(s, x)?.block(BlockKind::K2, 0, ell))
}

/// `K1 = (s - x̄)(s - x0)^ν Q^{-l}` or `K2 = (s - x0)^ν Q^{-l}`.
pub fn k_kernel<S: Scalar>(block: BlockKind, s: &Paravector<S>, x: &Paravector<S>, nu: u32, ell: u32) -> Result<Multivector<S>> {
    Ok(KernelPoint::new(s, x)?.block(block, nu, ell))
}

/// The closed-form kernel of `spec` at `(s, x)`.
pub fn kernel_closed_form<S: Scalar>(spec: &KernelSpec, s: &Paravector<S>, x: &Paravector<S>) -> Result<Multivector<S>> {
    check_n(spec, s)?;
    let terms = spec.terms()?;
    Ok(KernelPoint::new(s, x)?.combination(&terms))
}

/// `Δ^h S_L^{-1}(s, x) = γ_{n,h} (s - x̄) Q^{-h-1}`.
pub fn fueter_sce_kernel<S: Scalar>(s: &Paravector<S>, x: &Paravector<S>, n: u32) -> Result<Multivector<S>> {
    let h = sce_exponent(n)?;
    let g = gamma(h, h)?;
    let k = k_kernel(BlockKind::K1, s, x, 0, h + 1)?;
    Ok(k.scale(&S::from_rational(&g)))
}

fn same_dim<S: Scalar>(s: &Paravector<S>, x: &Paravector<S>) -> Result<()> {
    if s.n() != x.n() {
        return Err(Error::DimensionMismatch(s.n(), x.n()));
    }
    Ok(())
}

fn check_n<S: Scalar>(spec: &KernelSpec, s: &Paravector<S>) -> Result<()> {
    if s.n() != spec.n as usize {
        return Err(Error::DimensionMismatch(spec.n as usize, s.n()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio, Rational};

    fn p(x0: i64, xv: &[i64]) -> Paravector<Rational> {
        Paravector::new(rat(x0), xv.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn cauchy_examples() {
        let s = p(2, &[0, 0]);
        let x = p(0, &[1, 0]);
        let expect = p(2, &[1, 0]).to_mv().scale(&ratio(1, 5));
        assert_eq!(cauchy_kernel(&s, &x, CauchyForm::II).unwrap(), expect);
        assert_eq!(cauchy_kernel(&s, &x, CauchyForm::I).unwrap(), expect);
        let (s, x) = (p(5, &[0, 0]), p(3, &[0, 0]));
        assert_eq!(cauchy_kernel(&s, &x, CauchyForm::II).unwrap(), Multivector::scalar(2, ratio(1, 2)));
        let s = p(1, &[0, 2]);
        let x = p(1, &[2, 0]);
        assert!(matches!(cauchy_kernel(&s, &x, CauchyForm::II), Err(Error::SingularSphere { .. })));
    }

    #[test]
    fn qc_examples() {
        let s = p(2, &[0, 0]);
        assert_eq!(qc_inv_pow(&s, &p(0, &[0, 0]), 1).unwrap(), Multivector::scalar(2, ratio(1, 4)));
        assert_eq!(qc_inv_pow(&s, &p(0, &[1, 0]), 2).unwrap(), Multivector::scalar(2, ratio(1, 25)));
        assert_eq!(qc_inv_pow(&p(5, &[0]), &p(2, &[0]), 3).unwrap(), Multivector::scalar(1, ratio(1, 729)));
    }

    #[test]
    fn block_examples() {
        let s = p(3, &[1, -2, 0]);
        let x = p(1, &[0, 1, 1]);
        assert_eq!(k_kernel(BlockKind::K2, &s, &x, 0, 2).unwrap(), qc_inv_pow(&s, &x, 2).unwrap());
        assert_eq!(k_kernel(BlockKind::K1, &s, &x, 0, 1).unwrap(), cauchy_kernel(&s, &x, CauchyForm::II).unwrap());
        let xr = p(1, &[0, 0, 0]);
        let sm = s.sub(&xr);
        let expect = sm.to_mv().pow(3).geometric_product(&qc_inv_pow(&s, &xr, 4).unwrap()).unwrap();
        assert_eq!(k_kernel(BlockKind::K1, &s, &xr, 2, 4).unwrap(), expect);
    }

    #[test]
    fn float_singular_diagnostic() {
        let s = Paravector::new(1.0, vec![0.0, 2.0]);
        let x = Paravector::new(1.0, vec![2.0, 1e-14]);
        match cauchy_kernel(&s, &x, CauchyForm::II) {
            Err(Error::SingularSphere { distance }) => assert!(distance < 1e-12),
            other => panic!("expected singular sphere, got {other:?}"),
        }
    }

    #[test]
    fn fueter_sce_n1() {
        let s = p(2, &[]);
        let x = p(1, &[]);
        assert_eq!(fueter_sce_kernel(&s, &x, 1).unwrap(), cauchy_kernel(&s, &x, CauchyForm::II).unwrap());
    }
}
