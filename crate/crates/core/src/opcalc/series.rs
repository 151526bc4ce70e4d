//! Truncated expansion of `Q_{c,s}(T)^{-l}` in powers of `s^{-1}` with an operator-norm tail bound.

use crate::clifford::{Multivector, Paravector};
use crate::error::{Error, Result};
use crate::kernels::tail_sum;
use crate::plane::Plane;
use crate::scalar::Scalar;
use crate::special::h_poly;

use super::matrix::CliffordMatrix;
use super::operator::CommutingParavectorOp;
use super::resolvent::OperatorPowers;

#[derive(Clone, Debug, PartialEq)]
pub struct OpSeriesResult<S: Scalar> {
    pub value: CliffordMatrix<S>,
    pub order: u32,
    /// Bound on the Frobenius norm (over entries and blades) of the omitted terms.
    pub tail_bound: f64,
}

/// `max(‖T‖, ‖T̄‖)` for the spectral norm of left multiplication, bounded above.
pub fn op_norm_bound<S: Scalar>(t: &CommutingParavectorOp<S>) -> f64 {
    t.to_clifford().to_f64().op_norm_2_bound().max(t.conj_clifford().to_f64().op_norm_2_bound())
}

/// `Σ_{k=2l-1}^{K} H_l^k(T) s^{-k-1}`.
///
/// Right multiplication by a paravector scales the coefficient norm exactly, and every `T^a T̄^b` is
/// bounded by `τ^{a+b}`, so the omitted part is at most `sqrt(d) |s|^{-2l} Σ_{k>K} C(k, 2l-1) (τ/|s|)^{k-2l+1}`.
pub fn series_qc_op_inv_pow<S: Scalar>(s: &Paravector<S>, t: &CommutingParavectorOp<S>, ell: u32, order: u32) -> Result<OpSeriesResult<S>> {
    if ell < 1 {
        return Err(Error::OutOfRange("series needs l >= 1".into()));
    }
    if s.n() != t.n {
        return Err(Error::DimensionMismatch(s.n(), t.n));
    }
    let sn = s.norm_sq().to_f64().sqrt();
    let q = op_norm_bound(t) / sn;
    if !(q < 1.0) {
        return Err(Error::SeriesDivergent { ratio: q });
    }
    let (plane, z) = Plane::of(s);
    let inv = plane.inv(&z).map_err(|_| Error::ZeroParavector)?;
    let mut pw = OperatorPowers::new(t);
    let mut cur = inv.clone();
    let mut value = CliffordMatrix::zeros(t.d, t.n);
    for k in 0..=order {
        if k + 1 >= 2 * ell {
            let sp: Multivector<S> = plane.to_mv(&cur);
            value = value.add(&pw.eval(&h_poly(ell, k)).right_mul(&sp));
        }
        cur = plane.mul(&cur, &inv);
    }
    let r = 2 * ell - 1;
    let tail_bound = (t.d as f64).sqrt() * sn.powi(-2 * ell as i32) * tail_sum(r, order as i64, q);
    Ok(OpSeriesResult { value, order, tail_bound })
}

/// Smallest order whose operator tail bound is at most `tol`.
pub fn op_series_order_for<S: Scalar>(s: &Paravector<S>, t: &CommutingParavectorOp<S>, ell: u32, tol: f64) -> Result<u32> {
    let sn = s.norm_sq().to_f64().sqrt();
    let q = op_norm_bound(t) / sn;
    if !(q < 1.0) {
        return Err(Error::SeriesDivergent { ratio: q });
    }
    let bound = |k: u32| (t.d as f64).sqrt() * sn.powi(-2 * ell as i32) * tail_sum(2 * ell - 1, k as i64, q);
    (0..=crate::kernels::MAX_ORDER)
        .find(|&k| bound(k) <= tol)
        .ok_or(Error::NonConvergent { delta: bound(crate::kernels::MAX_ORDER), tolerance: tol })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opcalc::qc_op_inv_pow;

    #[test]
    fn matches_closed_form() {
        let t = CommutingParavectorOp::diagonal(&[Paravector::new(0.3, vec![0.2, -0.1, 0.0]), Paravector::real(3, -0.4)]).unwrap();
        let tau = op_norm_bound(&t);
        let s = Paravector::new(0.0, vec![0.0, 2.0 * tau, 0.0]);
        for ell in 1..=3 {
            let exact = qc_op_inv_pow(&s, &t, ell).unwrap();
            for order in [2 * ell, 10, 40] {
                let r = series_qc_op_inv_pow(&s, &t, ell, order).unwrap();
                assert!(r.value.sub(&exact).norm() <= r.tail_bound, "ell={ell} K={order}");
            }
            let k = op_series_order_for(&s, &t, ell, 1e-8).unwrap();
            let r = series_qc_op_inv_pow(&s, &t, ell, k).unwrap();
            assert!(r.tail_bound <= 1e-8 && r.value.sub(&exact).norm() <= r.tail_bound);
        }
    }
}
