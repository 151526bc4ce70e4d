//! Closed-form kernels as exact rational functions of `x`, and the oracle they are checked against.

use num_traits::Zero;

use crate::clifford::Paravector;
use crate::error::{Error, Result};
use crate::oracle::{build_cauchy_kernel_symbolic, CliffordRationalFn, SymbolicQ};
use crate::scalar::{rat, Rational};
use crate::special::{coeff_family_with_base, BlockKind, KernelTerm};
use crate::Side;

use super::KernelSpec;

/// The closed form of `spec` as a rational function of `x` for fixed rational `s`.
pub fn kernel_closed_form_symbolic(spec: &KernelSpec, s: &Paravector<Rational>) -> Result<CliffordRationalFn> {
    Ok(combination_symbolic(&SymbolicQ::new(s), &spec.terms()?))
}

pub fn combination_symbolic(q: &SymbolicQ, terms: &[KernelTerm]) -> CliffordRationalFn {
    terms.iter().fold(CliffordRationalFn::zero(q.n()), |acc, t| {
        let block = match t.block {
            BlockKind::K1 => q.k1(t.nu, t.ell),
            BlockKind::K2 => q.k2(t.nu, t.ell),
        };
        acc.add(&block.scale_by(&t.coeff))
    })
}

/// `D^β Δ^m S_L^{-1}(s, ·)` (or its `D̄` counterpart) by exact differentiation.
pub fn kernel_oracle(spec: &KernelSpec, s: &Paravector<Rational>) -> CliffordRationalFn {
    build_cauchy_kernel_symbolic(s).apply_dirac_laplace(spec.beta as usize, spec.m as usize, spec.side)
}

/// Solves for the base coefficient `b̄_0` of the odd `D̄` family and verifies the full kernel.
///
/// The kernel on the real axis is a multiple of `(s - x0)^{-2m-β-1}`, which gives one linear
/// equation in `b̄_0`; the fitted family is then checked against the oracle as a rational function.
pub fn fit_bbar0(n: u32, m: u32, k1: u32) -> Result<Rational> {
    let h = crate::special::sce_exponent(n)?;
    let beta = 2 * k1 + 1;
    let spec = KernelSpec { n, side: Side::Dbar, beta, m };
    let s = Paravector::along(n as usize, rat(3), 1, rat(1));
    let oracle = kernel_oracle(&spec, &s);
    let t = rat(1);
    let x = Paravector::real(n as usize, t.clone());
    let value = oracle.eval(&x)?;
    // R = value * (s - t)^N, a real number
    let np = 2 * m + beta + 1;
    let sm = Paravector::along(n as usize, rat(3) - &t, 1, rat(1));
    let r = value.geometric_product(&sm.pow(np))?;
    if !r.is_scalar() {
        return Err(Error::Verification(format!("real-axis restriction is not a pure power for h={h}, m={m}, k1={k1}")));
    }
    let trial = coeff_family_with_base(Side::Dbar, beta, m, h, Rational::zero())?;
    let base = r.scalar_part() / trial.prefactor() - trial.axis_sum();
    let fam = coeff_family_with_base(Side::Dbar, beta, m, h, base.clone())?;
    let closed = combination_symbolic(&SymbolicQ::new(&s), &fam.kernel_terms());
    if !closed.equal_rational(&oracle) {
        return Err(Error::Verification(format!("no base coefficient reproduces the oracle for h={h}, m={m}, k1={k1}")));
    }
    Ok(base)
}
