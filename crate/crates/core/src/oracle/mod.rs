//! Exact symbolic differentiation of Clifford-valued rational functions.

pub mod cpoly;
pub mod int;
pub mod poly;
pub mod rational_fn;
pub mod symbolic;

pub use cpoly::CliffordPoly;
pub use rational_fn::{axiality_check, CliffordRationalFn, Letter, OperatorWord};
pub use symbolic::{
    axial_poly_fn, build_cauchy_kernel_symbolic, coordinate_fn, inv_norm_pow_fn, monomial_fn, xbar_fn, SymbolicQ,
};
