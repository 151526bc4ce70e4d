//! Commuting paravector operators, their S-resolvents and contour functional calculi.

pub mod contour;
pub mod matrix;
pub mod operator;
pub mod resolvent;
pub mod series;
pub mod spectrum;

pub use contour::{contour_nodes, eval_right_poly, functional_calculus, CalcResult, SliceContour};
pub use matrix::{det_f64, CliffordMatrix, Mat, PlaneMatrix};
pub use operator::CommutingParavectorOp;
pub use resolvent::{
    axial_poly_op, monomial_image_terms_op, qc_det_abs, qc_op, qc_op_inv_pow, resolvent, OperatorPoint, OperatorPowers,
    ResolventKind,
};
pub use series::{op_norm_bound, op_series_order_for, series_qc_op_inv_pow, OpSeriesResult};
pub use spectrum::{certified_slice, q_f_det_abs, q_f_op, scan, spectrum_slice, GridSample, SearchGrid, SpectrumSlice};

use crate::clifford::{Multivector, Paravector};
use crate::error::Result;
use crate::kernels::{monomial_image_x, KernelSpec};
use crate::scalar::Scalar;

/// Image of `x^κ` under `D^β Δ^m` (or `D̄^β Δ^m`) at a paravector.
pub fn monomial_image<S: Scalar>(spec: &KernelSpec, kappa: u32, x: &Paravector<S>) -> Result<Multivector<S>> {
    monomial_image_x(spec, kappa, x)
}

/// The same image with `x ↦ T`.
pub fn monomial_image_op<S: Scalar>(spec: &KernelSpec, kappa: u32, t: &CommutingParavectorOp<S>) -> Result<CliffordMatrix<S>> {
    let terms = spec.terms()?;
    Ok(monomial_image_terms_op(&terms, kappa, &mut OperatorPowers::new(t)))
}
