//! Binomial coefficient families, structure constants, the `H`/`P` polynomials and Jacobi polynomials.

pub mod axial;
pub mod binom;
pub mod coeffs;
pub mod constants;
pub mod jacobi;

pub use axial::{clifford_appell, coeff_c, h_poly, p_poly, AxialPoly, AxialTerm, PolyKind, XTable};
pub use binom::{binom, factorial, gbinom, pochhammer_neg, rising};
pub use coeffs::{aux_limit_constant, bbar0_entries, bbar0_table, coeff_family, coeff_family_with_base, BlockKind, CoeffFamily, KernelTerm, Parity};
pub use constants::{c_bold, c_const, gamma, sce_exponent, sigma, structure_constant, ConstantKind};
pub use jacobi::{gamma_tagged, h_poly_via_jacobi, jacobi_at_minus_one, jacobi_coefficients, jacobi_eval, PiTagged};

/// CSV header for coefficient-family rows.
pub const COEFF_CSV_HEADER: &str = "side,beta,m,j,a_j,b_j";
/// CSV header for `H`/`P` coefficient rows.
pub const POLY_CSV_HEADER: &str = "l,k,j,C";
