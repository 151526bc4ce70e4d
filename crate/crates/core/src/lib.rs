//! Exact Clifford-algebra computer algebra for fine-structure kernels of `D^β Δ^m` and
//! `D̄^β Δ^m`, axial polynomial families, and contour functional calculi for commuting
//! paravector operators.
//!
//! Examples, one per capability:
//!
//! - `clifford_algebra`: products, paravector inverses, slice coordinates
//! - `symbolic_oracle`: symbolic differentiation of the Cauchy kernel, Fueter-Sce nullity
//! - `axial_polynomials`: harmonic and Appell type polynomials, Jacobi form
//! - `fine_structure_kernels`: closed forms, coefficient families, axis constants
//! - `kernel_series`: truncated expansions with tail bounds
//! - `operator_calculus`: functional calculi, spectral safety, spectrum scan
//! - `verification_suite`: suite reports in human, CSV and JSON form
//!
//! ```bash
//! cargo run -p finespec --example operator_calculus
//! ```

pub mod clifford;
pub mod error;
pub mod kernels;
pub mod opcalc;
pub mod oracle;
pub mod parallel;
pub mod plane;
pub mod scalar;
pub mod special;
pub mod verify;

pub use clifford::{Multivector, Paravector, SliceTriple};
pub use error::{Error, Result};
pub use scalar::{Rational, Scalar};

/// Which Dirac factor a fine structure is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Side {
    D,
    Dbar,
}
